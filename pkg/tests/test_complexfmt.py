import pytest
from hypothesis import given, strategies as st

from latzeta.complexfmt import format_complex, parse_complex
from latzeta.errors import DomainError


@pytest.mark.parametrize(
    "text,want",
    [
        ("1", 1 + 0j),
        ("-2.5", -2.5 + 0j),
        ("i", 1j),
        ("-i", -1j),
        ("+i", 1j),
        ("2i", 2j),
        ("-1.5i", -1.5j),
        ("0.3+0.2i", 0.3 + 0.2j),
        ("0.3-0.2i", 0.3 - 0.2j),
        ("1+i", 1 + 1j),
        ("1-i", 1 - 1j),
        ("1e-3+2.5e2i", 1e-3 + 2.5e2j),
        (" 0.5 + 0.5i ", 0.5 + 0.5j),
        (".5i", 0.5j),
    ],
)
def test_parse_valid(text, want):
    assert parse_complex(text) == want


@pytest.mark.parametrize("text", ["", "abc", "1+2", "i1", "1i2", "1++2i", "2j"])
def test_parse_invalid(text):
    with pytest.raises(DomainError):
        parse_complex(text)


def test_format_basic():
    assert format_complex(1 + 2j) == "1+2i"
    assert format_complex(-0.5 - 0.25j) == "-0.5-0.25i"


FIN = st.floats(min_value=-1e12, max_value=1e12, allow_nan=False, allow_infinity=False)


@given(FIN, FIN)
def test_roundtrip(re, im):
    z = complex(re, im)
    assert parse_complex(format_complex(z)) == z
