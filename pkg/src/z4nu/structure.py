"""Cyclic codes over R: residue/torsion towers and the unique staged generator form.

A code is handled as a Z4-submodule of Z4^(2n).  Each codeword sum_i x_i z^i
is written coefficientwise as x_i = u_i + k v_i (u_i = phi(x_i)) and stored
as the vector (u_0..u_{n-1}, v_0..v_{n-1}).  Multiplication by z or by any
ring scalar is Z4-linear in these coordinates, so one echelon basis with the
u block first gives the image phi(C) (rows pivoting in the u block) and the
kernel part {v : k v in C} (rows pivoting in the v block) at the same time.
"""

from dataclasses import dataclass

from .echelon import echelon_basis
from .poly import (PolyR, PolyZ4, LengthMismatch, decompose, xn1, z2_deg,
                   z2_divides, z2_divmod, z2_exact_div, z2_mul, z2_reduce, z2_coeffs)
from .ring import NU, RElem, Theta, k_of
from .z4codes import canonical_form_of_rows

PAIRS = ((1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4))


class StagedConditionError(ValueError):
    def __init__(self, condition, detail=""):
        self.condition = condition
        super().__init__(f"staged generators violate {condition}" + (f": {detail}" if detail else ""))


@dataclass(frozen=True)
class CodeSpec:
    n: int
    theta: Theta
    gens: tuple

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.n != self.n or g.theta != self.theta:
                raise LengthMismatch("every generator must share the code's n and theta")


@dataclass(frozen=True)
class Towers:
    g11: int
    g22: int
    g33: int
    g44: int

    def degrees(self):
        return tuple(z2_deg(g) for g in (self.g11, self.g22, self.g33, self.g44))


@dataclass(frozen=True)
class StagedGens:
    """Ten binary polynomials g_ij (1 <= i <= j <= 4) laid out as

        g1 = g11 + 2 g12 + k g13 + 2k g14
        g2 =       2 g22 + k g23 + 2k g24
        g3 =               k g33 + 2k g34
        g4 =                       2k g44

    A zero diagonal entry is stored as z^n - 1 (the zero ideal).
    """

    n: int
    theta: Theta
    g11: int = 0
    g12: int = 0
    g13: int = 0
    g14: int = 0
    g22: int = 0
    g23: int = 0
    g24: int = 0
    g33: int = 0
    g34: int = 0
    g44: int = 0

    def __post_init__(self):
        # 0 and z^n - 1 are the same element of Z2[z]/(z^n - 1)
        for name in ("g11", "g22", "g33", "g44"):
            if not z2_reduce(getattr(self, name), self.n):
                object.__setattr__(self, name, xn1(self.n))

    def get(self, i, j):
        return getattr(self, f"g{i}{j}")

    @property
    def s1(self):
        return z2_deg(self.g11)

    @property
    def s2(self):
        return z2_deg(self.g22)

    @property
    def s3(self):
        return z2_deg(self.g33)

    @property
    def s4(self):
        return z2_deg(self.g44)

    def degrees(self):
        return (self.s1, self.s2, self.s3, self.s4)

    def towers(self):
        return Towers(self.g11, self.g22, self.g33, self.g44)

    def table(self):
        return {f"g{i}{j}": self.get(i, j) for i, j in PAIRS}

    def generators(self):
        """The four staged generators as polynomials over R."""
        n, theta = self.n, self.theta
        k = k_of(theta)
        two, two_k = RElem(2, 0), k.scale(2)

        def lift(f, scalar=RElem(1, 0)):
            return PolyR.from_z2(f, n, theta, scalar)

        return (
            lift(self.g11) + lift(self.g12, two) + lift(self.g13, k) + lift(self.g14, two_k),
            lift(self.g22, two) + lift(self.g23, k) + lift(self.g24, two_k),
            lift(self.g33, k) + lift(self.g34, two_k),
            lift(self.g44, two_k),
        )

    def code(self):
        return CodeSpec(self.n, self.theta, self.generators())


@dataclass(frozen=True)
class CanonicalGens(StagedGens):
    """Staged generators in the unique reduced form of a code."""


# --- module representation ---------------------------------------------------

def word_vector(w):
    u, v = w.split()
    return u.coeffs + v.coeffs


def vector_word(vec, n, theta):
    return PolyR.join(PolyZ4(tuple(vec[:n]), n), PolyZ4(tuple(vec[n:]), n), theta)


def code_vectors(spec):
    for g in spec.gens:
        for h in (g, g * NU):
            for j in range(spec.n):
                yield word_vector(h.shift(j))


def code_basis(spec):
    return echelon_basis(list(code_vectors(spec)), 2 * spec.n)


def module_log2_size(spec):
    """log2 |C| read off the echelon pivots."""
    return code_basis(spec).log2_size()


def membership_r(spec, w):
    if w.n != spec.n or w.theta != spec.theta:
        raise LengthMismatch("word and code must share n and theta")
    return code_basis(spec).contains(word_vector(w))


def _layers(spec, eb=None):
    eb = eb or code_basis(spec)
    n = spec.n
    image = [r[:n] for r in eb.rows_before(n)]
    kernel = [r[n:] for r in eb.rows_from(n)]
    return eb, canonical_form_of_rows(image, n), canonical_form_of_rows(kernel, n)


def towers(spec):
    _, top, bottom = _layers(spec)
    return Towers(top.g, top.a, bottom.g, bottom.a)


# --- staged construction and reduction ---------------------------------------

def staged_violations(s):
    """Unmet staging conditions, each named by the divisibility it states."""
    n = s.n
    out = []
    for (top, low, off, label) in ((s.g11, s.g22, s.g12, "12"), (s.g33, s.g44, s.g34, "34")):
        hi_name, lo_name = ("g11", "g22") if label == "12" else ("g33", "g44")
        # a zero lower entry (stored as z^n - 1) just means that generator has no 2-part
        if not (z2_divides(top, xn1(n)) and (low == xn1(n) or z2_divides(low, top))):
            out.append(f"{lo_name} | {hi_name} | z^n-1")
            continue
        if off:
            if z2_deg(off) >= z2_deg(low):
                out.append(f"deg g{label} < deg {lo_name}")
            elif not z2_divides(low, z2_mul(off, z2_exact_div(xn1(n), top))):
                out.append(f"{lo_name} | g{label}(z^n-1)/{hi_name}")
    return out


def build_staged(s):
    """Code generated by the staged table ``s``; the staging conditions are checked, not repaired."""
    bad = staged_violations(s)
    if bad:
        raise StagedConditionError(bad[0], "; ".join(bad[1:]))
    return s.code()


def _cascade(gens, diag):
    """Division cascade: column 2, then 3, then 4, each pushing remainders rightwards."""
    gens = list(gens)
    for j in (2, 3, 4):
        d = diag[j - 1]
        for i in range(1, j):
            part = decompose(gens[i - 1]).parts()[j - 1]
            q, _ = z2_divmod(part, d)
            if q:
                gens[i - 1] = gens[i - 1] - gens[j - 1].mul_z2(q)
    return gens


def _table(gens, diag, n, theta, cls):
    entries = {}
    for i, g in enumerate(gens, start=1):
        parts = decompose(g).parts()
        for j in range(i + 1, 5):
            entries[f"g{i}{j}"] = parts[j - 1]
    return cls(n, theta, g11=diag[0], g22=diag[1], g33=diag[2], g44=diag[3], **entries)


def reduce_unique(s):
    """Reduce every off-diagonal entry below the degree of its column's diagonal entry.

    The diagonal of ``s`` is taken as given; the result is the unique form of the
    code only when that diagonal already generates the code's towers.
    """
    gens = _cascade(s.generators(), (s.g11, s.g22, s.g33, s.g44))
    return _table(gens, (s.g11, s.g22, s.g33, s.g44), s.n, s.theta, type(s))


def canonicalize(spec):
    """The unique staged generators of the code generated by ``spec.gens``."""
    n, theta = spec.n, spec.theta
    eb, top, bottom = _layers(spec)
    diag = (top.g, top.a, bottom.g, bottom.a)

    def lift(target):
        rem = eb.reduce(tuple(target) + (0,) * n)
        if any(rem[:n]):  # pragma: no cover - targets lie in phi(C) by construction
            raise AssertionError("image element has no preimage in the code")
        return vector_word(tuple(target) + tuple((-x) % 4 for x in rem[n:]), n, theta)

    bits = lambda f: z2_coeffs(z2_reduce(f, n), n)
    t1 = [x + 2 * y for x, y in zip(bits(top.g), bits(top.p))]
    t2 = [2 * x for x in bits(top.a)]
    zero = PolyZ4.zero(n)
    g1 = lift(t1)
    g2 = lift(t2)
    g3 = PolyR.join(zero, PolyZ4.from_z2(bottom.g, n) + 2 * PolyZ4.from_z2(bottom.p, n), theta)
    g4 = PolyR.join(zero, 2 * PolyZ4.from_z2(bottom.a, n), theta)
    gens = _cascade((g1, g2, g3, g4), diag)
    return _table(gens, diag, n, theta, CanonicalGens)


def degree_violations(c):
    """Off-diagonal entries not reduced below their column's diagonal degree."""
    return [f"g{i}{j}" for i, j in PAIRS
            if i != j and c.get(i, j) and z2_deg(c.get(i, j)) >= z2_deg(c.get(j, j))]
