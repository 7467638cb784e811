"""Parsing and printing of complex literals in "a+bi" form.

This is the wire format used by the CLI flags and the JSON/CSV payloads:
an optional real part followed by an optional signed imaginary part with
a mandatory trailing 'i'.  "i", "-i", "2", "-1.5i", "0.3+0.2i" and
scientific notation like "1e-3+2.5e2i" are all valid.
"""

import re

from .errors import DomainError

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"

_BOTH = re.compile(rf"^([+-]?{_NUM})([+-](?:{_NUM})?)i$")
_IMAG = re.compile(rf"^([+-]?(?:{_NUM})?)i$")
_REAL = re.compile(rf"^([+-]?{_NUM})$")


def parse_complex(text: str) -> complex:
    """Parse an "a+bi" literal into a complex number."""
    s = text.strip().replace(" ", "")
    m = _BOTH.match(s)
    if m:
        re_part, im_part = m.group(1), m.group(2)
        if im_part in ("+", "-"):
            im_part += "1"
        return complex(float(re_part), float(im_part))
    m = _IMAG.match(s)
    if m:
        im_part = m.group(1)
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return complex(0.0, float(im_part))
    m = _REAL.match(s)
    if m:
        return complex(float(m.group(1)), 0.0)
    raise DomainError(f"not a valid complex literal: {text!r}")


def format_complex(z: complex, digits: int = 17) -> str:
    """Render a complex number as "a+bi" with the given significant digits."""
    re_s = format(z.real, f".{digits}g")
    im_s = format(abs(z.imag), f".{digits}g")
    sign = "-" if z.imag < 0 else "+"
    return f"{re_s}{sign}{im_s}i"
