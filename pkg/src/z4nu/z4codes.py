"""Cyclic codes over Z4 and their <g + 2p, 2a> form."""

from dataclasses import dataclass

from .echelon import echelon_basis, colon_by_two, preimage
from .poly import (PolyZ4, LengthMismatch, xn1, z2_gcd, z2_from_coeffs, z2_reduce,
                   z2_mod, z2_coeffs, z2_deg, z2_divides, z2_exact_div, z2_mul)


@dataclass(frozen=True)
class Z4CodeSpec:
    n: int
    gens: tuple

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.n != self.n:
                raise LengthMismatch(f"generator of length {g.n} in a length-{self.n} code")


@dataclass(frozen=True)
class Z4CanonicalForm:
    g: int
    p: int
    a: int

    def generators(self, n):
        return (PolyZ4.from_z2(self.g, n) + 2 * PolyZ4.from_z2(self.p, n),
                2 * PolyZ4.from_z2(self.a, n))


def shift_vectors(gens, n):
    return [g.shift(j).coeffs for g in gens for j in range(n)]


def code_basis(spec):
    return echelon_basis(shift_vectors(spec.gens, spec.n), spec.n)


def z4_membership(spec, w):
    if w.n != spec.n:
        raise LengthMismatch(f"word of length {w.n} vs code of length {spec.n}")
    return code_basis(spec).contains(w.coeffs)


def ideal_generator(binary_rows, n):
    """Generator of the Z2 cyclic code spanned by the rows; z^n - 1 for the zero code."""
    g = xn1(n)
    for r in binary_rows:
        f = r if isinstance(r, int) else z2_from_coeffs(r)
        if f:
            g = z2_gcd(g, f)
    return g


def residue_generator(rows, n):
    return ideal_generator(rows, n)


def torsion_generator(rows, n):
    return ideal_generator(colon_by_two(rows, n), n)


def canonical_form_of_rows(rows, n):
    """(g, p, a) for the cyclic Z4 code spanned by ``rows`` (assumed shift-closed)."""
    rows = [tuple(r) for r in rows]
    g = residue_generator(rows, n)
    a = torsion_generator(rows, n)
    target = z2_coeffs(z2_reduce(g, n), n)
    if not any(target):
        return Z4CanonicalForm(g, 0, a)
    pairs = [(r, r) for r in rows]
    for i in range(n):
        e = [0] * n
        e[i] = 2
        pairs.append((tuple(e), (0,) * n))
    x = preimage(pairs, target, n, n)
    if x is None:  # pragma: no cover - g is in the residue code by construction
        raise AssertionError("residue generator has no preimage")
    half = [((xi - ti) % 4) // 2 for xi, ti in zip(x, target)]
    p = z2_mod(z2_from_coeffs(half), a)
    return Z4CanonicalForm(g, p, a)


def z4_canonical_form(spec):
    return canonical_form_of_rows(code_basis(spec).rows, spec.n)


def lift_carry(g, n):
    """e with g h = z^n - 1 + 2e over Z4, where h = (z^n - 1)/g over Z2 and both are lifted as 0/1 polynomials.

    Reduced mod z^n - 1 the product is exactly 2e, so e is read off the halved coefficients.
    """
    h = z2_exact_div(xn1(n), g)
    prod = PolyZ4.from_z2(g, n) * PolyZ4.from_z2(h, n)
    return z2_from_coeffs([c // 2 for c in prod.coeffs])


def check_lemma_conditions(form, n, exact=False):
    """Problems with a | g | z^n - 1 and the p condition; empty when admissible.

    The default tests ``a | p (z^n - 1)/g``.  With ``exact`` the Z4 carry of
    lifting g (z^n - 1)/g is included, giving ``a | e + p (z^n - 1)/g``, which
    is what a code <g + 2p, 2a> with torsion exactly <a> actually satisfies.
    """
    g, p, a = form.g, form.p, form.a
    problems = []
    if not z2_divides(g, xn1(n)):
        problems.append("g does not divide z^n - 1")
    elif not z2_divides(a, g):
        problems.append("a does not divide g")
    else:
        if p and z2_deg(p) >= z2_deg(a):
            problems.append("deg p >= deg a")
        hp = z2_reduce(z2_mul(p, z2_exact_div(xn1(n), g)), n)
        if exact:
            hp ^= lift_carry(g, n)
            if hp and not z2_divides(a, hp):
                problems.append("a does not divide e + p (z^n - 1)/g")
        elif p and hp and not z2_divides(a, hp):
            problems.append("a does not divide p (z^n - 1)/g")
    return problems
