import pytest
from hypothesis import given, strategies as st

from z4nu.parser import ParseError, format_poly, parse_poly, parse_relem
from z4nu.poly import PolyR
from z4nu.ring import ALL_ELEMENTS, ALL_THETAS, RElem, Theta


def pairs(f):
    return [(c.a, c.b) for c in f.coeffs]


def test_written_generator():
    f = parse_poly("z^3+z^2+z+1+v*(z+3)", 4, Theta.of(0, 2))
    assert pairs(f) == [(1, 3), (1, 1), (1, 0), (1, 0)]


def test_constants():
    th = Theta.of(0)
    assert not parse_poly("0", 3, th)
    assert pairs(parse_poly("2+3*v", 1, th)) == [(2, 3)]
    assert parse_relem("2+3*v") == RElem(2, 3)
    assert parse_relem("3+2v") == RElem(3, 2)
    assert parse_relem("v") == RElem(0, 1)


def test_literals_wrap_mod_4_and_powers_wrap_mod_n():
    th = Theta.of(1)
    assert pairs(parse_poly("7*z^5", 3, th)) == [(0, 0), (0, 0), (3, 0)]
    assert parse_poly("v*v", 2, th) == parse_poly("1", 2, th)
    assert parse_poly("2v(z+1)", 3, th) == parse_poly("2*v*(z+1)", 3, th)
    assert parse_poly(" ν * z ", 3, th) == parse_poly("v*z", 3, th)


@pytest.mark.parametrize("text, pos", [("z^", 2), ("2+*", 2), ("(z+1", 4), ("z+1)", 3),
                                       ("", 0), ("z#", 1), ("z^v", 2)])
def test_errors_report_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_poly(text, 3, Theta.of(0))
    assert exc.value.pos == pos
    assert exc.value.expected


def test_relem_rejects_z_and_nu_squared():
    for text in ("z", "v*v", "(1+v)*(2+v)"):
        with pytest.raises(ParseError):
            parse_relem(text)
    assert parse_relem("2*(1+v)") == RElem(2, 2)


@st.composite
def polys(draw):
    n = draw(st.integers(1, 7))
    theta = draw(st.sampled_from(ALL_THETAS))
    coeffs = draw(st.lists(st.sampled_from(ALL_ELEMENTS), min_size=n, max_size=n))
    return PolyR.from_coeffs(coeffs, n, theta)


@given(polys())
def test_format_reads_back(f):
    text = format_poly(f)
    assert parse_poly(text, f.n, f.theta) == f
    assert "(" not in text
