import pytest
from hypothesis import given, strategies as st

from latzeta.errors import DegenerateLattice, ZeroGenerator
from latzeta.lattice import (
    lattice_coordinates,
    lattice_new,
    nearest_lattice_distance_in_coords,
)


def test_new_rejects_zero_generator():
    with pytest.raises(ZeroGenerator):
        lattice_new(0.0, 1j)
    with pytest.raises(ZeroGenerator):
        lattice_new(1.0, 0.0)


def test_new_rejects_dependent_generators():
    with pytest.raises(DegenerateLattice):
        lattice_new(1.0, 1.0)
    with pytest.raises(DegenerateLattice):
        lattice_new(1 + 1j, -2 - 2j)
    with pytest.raises(DegenerateLattice):
        lattice_new(1.0, 1.0 + 1e-15j)


def test_point_and_coordinates_inverse():
    lat = lattice_new(1.0, 0.3 + 1.1j)
    p = lat.point(3, -2)
    c = lattice_coordinates(lat, p)
    assert c.x0 == pytest.approx(3.0, abs=1e-12)
    assert c.y0 == pytest.approx(-2.0, abs=1e-12)


def test_nearest_distance():
    lat = lattice_new(1.0, 1j)
    assert nearest_lattice_distance_in_coords(lat, 0.5 + 0.5j) == pytest.approx(0.5)
    assert nearest_lattice_distance_in_coords(lat, 1 + 1j) == pytest.approx(0.0, abs=1e-12)


COORD = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)
GEN = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


@given(COORD, COORD, GEN, st.floats(min_value=0.5, max_value=3.0, allow_nan=False))
def test_coordinate_round_trip(x, y, re2, im2):
    lat = lattice_new(1.0, complex(re2, im2))
    a = x * lat.w1 + y * lat.w2
    c = lattice_coordinates(lat, a)
    assert c.x0 == pytest.approx(x, abs=1e-10 * (1 + abs(x) + abs(y)))
    assert c.y0 == pytest.approx(y, abs=1e-10 * (1 + abs(x) + abs(y)))


@given(COORD, COORD, COORD, COORD)
def test_coordinates_linear(x1, y1, x2, y2):
    lat = lattice_new(1.0, 0.25 + 1j)
    a = complex(x1, y1)
    b = complex(x2, y2)
    ca = lattice_coordinates(lat, a)
    cb = lattice_coordinates(lat, b)
    cab = lattice_coordinates(lat, a + b)
    scale = 1 + abs(ca.x0) + abs(cb.x0) + abs(ca.y0) + abs(cb.y0)
    assert cab.x0 == pytest.approx(ca.x0 + cb.x0, abs=1e-9 * scale)
    assert cab.y0 == pytest.approx(ca.y0 + cb.y0, abs=1e-9 * scale)
