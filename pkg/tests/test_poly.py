import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import P
from z4nu.poly import (NEG_INF, Decomposition, LengthMismatch, PolyR, PolyZ4, compose,
                       decompose, poly_mul_mod, xn1, z2_deg, z2_divides, z2_divmod,
                       z2_exact_div, z2_gcd, z2_mul, z2_mulmod, z2_reduce, z2_str)
from z4nu.ring import ALL_ELEMENTS, ALL_THETAS, RElem, Theta


def divisors_of_xn1(n):
    return [d for d in range(1, 1 << (n + 1)) if z2_divides(d, xn1(n))]


thetas = st.sampled_from(ALL_THETAS)


@st.composite
def r_polys(draw, n, theta):
    coeffs = draw(st.lists(st.sampled_from(ALL_ELEMENTS), min_size=n, max_size=n))
    return PolyR.from_coeffs(coeffs, n, theta)


@st.composite
def r_triples(draw):
    n = draw(st.integers(1, 8))
    theta = draw(thetas)
    return tuple(draw(r_polys(n, theta)) for _ in range(3))


@st.composite
def z4_triples(draw):
    n = draw(st.integers(1, 8))
    return tuple(PolyZ4(tuple(draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))), n)
                 for _ in range(3))


def test_degree_of_zero_is_below_everything():
    assert z2_deg(0) == NEG_INF
    assert z2_deg(0) < 0 and z2_deg(1) == 0


def test_mul_mod_examples():
    assert poly_mul_mod(P(1, 0), P(1, 0), 2) == 0
    f = PolyZ4((1, 1), 2)   # z + 1
    g = PolyZ4((3, 1), 2)   # z + 3
    assert poly_mul_mod(f, g) == PolyZ4.zero(2)
    th = Theta.of(0)
    nu_z = PolyR.from_coeffs([RElem(0), RElem(0, 1)], 4, th)
    nu = PolyR.constant(RElem(0, 1), 4, th)
    assert not poly_mul_mod(nu_z, nu)


def test_mul_mod_rejects_mismatch():
    with pytest.raises(LengthMismatch):
        poly_mul_mod(PolyZ4.zero(2), PolyZ4.zero(3))
    with pytest.raises(LengthMismatch):
        PolyR.zero(2, Theta.of(0)) + PolyR.zero(2, Theta.of(1))


def test_divmod_examples():
    assert z2_divmod(P(3, 2, 1, 0), P(2, 0)) == (P(1, 0), 0)
    assert z2_divmod(P(5, 2), 1) == (P(5, 2), 0)
    assert z2_divmod(P(2, 1), P(1, 0)) == (P(1), 0)
    with pytest.raises(ZeroDivisionError):
        z2_divmod(P(1), 0)


@given(st.integers(0, 1 << 20), st.integers(1, 1 << 12))
def test_divmod_roundtrip(f, d):
    q, r = z2_divmod(f, d)
    assert z2_mul(q, d) ^ r == f
    assert r == 0 or z2_deg(r) < z2_deg(d)


def test_gcd_examples():
    assert z2_gcd(P(4, 2, 0), P(3, 0)) == P(2, 1, 0)
    assert z2_gcd(P(3, 1), 0) == P(3, 1)
    assert z2_gcd(P(4, 0), P(2, 0)) == P(2, 0)
    with pytest.raises(ValueError):
        z2_gcd(0, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_gcd_matches_divisor_search(n):
    divs = divisors_of_xn1(n)
    for f, g in itertools.product(divs, repeat=2):
        common = [d for d in divs if z2_divides(d, f) and z2_divides(d, g)]
        best = max(common, key=z2_deg)
        assert z2_gcd(f, g) == best
        assert all(z2_divides(d, best) for d in common)


def test_reduce_and_str():
    assert z2_reduce(xn1(5), 5) == 0
    assert z2_mulmod(P(4), P(3), 5) == P(2)
    assert z2_str(P(3, 1, 0)) == "z^3+z+1"
    assert z2_str(0) == "0"
    with pytest.raises(ValueError):
        z2_exact_div(P(2), P(1, 0))


@given(r_triples())
def test_r_ring_axioms(fgh):
    f, g, h = fgh
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + (-f) == PolyR.zero(f.n, f.theta)


@given(z4_triples())
def test_z4_ring_axioms(fgh):
    f, g, h = fgh
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(st.integers(1, 8), st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_z2_ring_axioms(n, f, g, h):
    m = lambda x, y: z2_mulmod(x, y, n)
    f, g, h = (z2_reduce(x, n) for x in (f, g, h))
    assert m(f, g) == m(g, f)
    assert m(m(f, g), h) == m(f, m(g, h))
    assert m(f, g ^ h) == m(f, g) ^ m(f, h)


def test_reduction_mod_xn1():
    z = PolyZ4((0, 1), 3)
    assert (z * z * z).coeffs == (1, 0, 0)
    assert PolyZ4.from_z2(xn1(3), 3) == PolyZ4.zero(3)
    assert PolyZ4((1, 0, 0, 1), 3).coeffs == (2, 0, 0)


def test_decompose_examples():
    f = PolyR.constant(RElem(0, 3), 1, Theta.of(0, 2))
    assert decompose(f).parts() == (0, 0, 1, 1)
    f = PolyR.constant(RElem(3, 1), 1, Theta.of(3, 2))
    assert decompose(f).parts() == (0, 1, 1, 0)
    assert decompose(PolyR.zero(3, Theta.of(0))).parts() == (0, 0, 0, 0)


@pytest.mark.parametrize("theta", ALL_THETAS, ids=str)
def test_decomposition_is_a_bijection_per_coefficient(theta):
    images = set()
    for bits in itertools.product((0, 1), repeat=4):
        d = Decomposition(*bits)
        x = compose(d, theta, 1)
        assert decompose(x) == d
        images.add(x.coeffs[0])
    assert len(images) == 16
    for x in ALL_ELEMENTS:
        f = PolyR.constant(x, 1, theta)
        assert compose(decompose(f), theta, 1) == f


@given(st.integers(1, 8).flatmap(lambda n: thetas.flatmap(lambda t: r_polys(n, t))))
def test_compose_decompose_polynomials(f):
    assert compose(decompose(f), f.theta, f.n) == f


def test_split_join_are_inverse():
    th = Theta.of(2, 3)
    f = PolyR.from_coeffs([RElem(3, 1), RElem(2, 2), RElem(1, 3)], 3, th)
    u, v = f.split()
    assert PolyR.join(u, v, th) == f
    assert f.phi() == u
