"""Divisibility relations expected between the entries of a unique staged generator table.

Every quotient in the relations is formed by exact division over Z2, in the
order the corresponding codeword combination is built, so no fractions are
ever needed.  When an intermediate division is not exact the relation is
reported with status ``"precondition"`` and the step that failed.
"""

from dataclasses import dataclass

from .poly import xn1, z2_divmod, z2_mul, z2_reduce, z2_divides, z2_str
from .ring import RElem

_ODD_C = {RElem(0, 1), RElem(0, 3), RElem(2, 1), RElem(2, 3)}     # k^2 = c k with c odd
_EVEN_C = {RElem(0, 0), RElem(1, 0), RElem(0, 2), RElem(3, 2)}    # k^2 = c k with c even
_ZERO_SQ = {RElem(0, 0), RElem(3, 2)}                               # k^2 = 0
_TWO_K_SQ = {RElem(1, 0), RElem(0, 2)}                              # k^2 = 2k


class _StepFailed(Exception):
    pass


@dataclass(frozen=True)
class RelationResult:
    name: str
    statement: str
    reading: str            # "plain" or "mod"
    status: str             # holds | fails | precondition | not-applicable
    divisor: int = None
    dividend: int = None    # reduced mod z^n - 1
    failed_step: str = None

    @property
    def applicable(self):
        return self.status != "not-applicable"

    @property
    def holds(self):
        return None if self.status in ("not-applicable", "precondition") else self.status == "holds"


@dataclass(frozen=True)
class RelationReport:
    results: tuple

    def failures(self):
        return [r for r in self.results if r.status in ("fails", "precondition")]

    def all_hold(self):
        return not self.failures()

    def by_name(self, name, reading="plain"):
        for r in self.results:
            if r.name == name and r.reading == reading:
                return r
        raise KeyError(name)


class _Eval:
    def __init__(self, n, reading):
        self.n = n
        self.mod = reading == "mod"

    def mul(self, *fs):
        out = 1
        for f in fs:
            out = z2_mul(out, f)
            if self.mod:
                out = z2_reduce(out, self.n)
        return out

    def div(self, f, d, step):
        if self.mod:
            f = z2_reduce(f, self.n)
        q, r = z2_divmod(f, d)
        if r:
            raise _StepFailed(step)
        return q


def _check(name, statement, reading, n, divisor, build):
    ev = _Eval(n, reading)
    try:
        dividend = z2_reduce(build(ev), n)
    except _StepFailed as exc:
        return RelationResult(name, statement, reading, "precondition", divisor, None, str(exc))
    ok = dividend == 0 or z2_divides(divisor, dividend)
    return RelationResult(name, statement, reading, "holds" if ok else "fails", divisor, dividend)


def _skip(name, statement):
    return RelationResult(name, statement, "plain", "not-applicable")


def verify_relations(c):
    g = c.table()
    n, theta = c.n, c.theta.value
    N = xn1(n)
    g11, g12, g13, g14 = g["g11"], g["g12"], g["g13"], g["g14"]
    g22, g23, g24 = g["g22"], g["g23"], g["g24"]
    g33, g34, g44 = g["g33"], g["g34"], g["g44"]
    out = []

    def h1_combo(ev):
        q1 = ev.div(N, g11, "g11 | z^n-1")
        y = ev.div(ev.mul(q1, g12), g22, "g22 | g12(z^n-1)/g11")
        return ev.mul(q1, g13) ^ ev.mul(y, g23)

    def scaled_g23(ev):
        return ev.mul(ev.div(g11, g22, "g22 | g11"), g23)

    def h2_combo(ev):
        q2 = ev.div(N, g22, "g22 | z^n-1")
        w = ev.div(ev.mul(q2, g23), g33, "g33 | g23(z^n-1)/g22")
        return ev.mul(q2, g24) ^ ev.mul(w, g34)

    def g13_combo(ev):
        a = ev.div(g11, g22, "g22 | g11")
        b = ev.div(ev.mul(a, g23), g33, "g33 | (g11/g22)g23")
        return g13 ^ ev.mul(a, g24) ^ ev.mul(b, g34)

    def h1_full_combo(ev):
        q1 = ev.div(N, g11, "g11 | z^n-1")
        y = ev.div(ev.mul(q1, g12), g22, "g22 | g12(z^n-1)/g11")
        e = ev.div(ev.mul(q1, g13) ^ ev.mul(y, g23), g33,
                   "g33 | (z^n-1)/g11 (g13 - (g12/g22)g23)")
        return ev.mul(q1, g14) ^ ev.mul(y, g24) ^ ev.mul(e, g34)

    out.append(_check("g33_divides_h1_combo", "g33 | (z^n-1)/g11 (g13 - (g12/g22) g23)", "plain", n, g33, h1_combo))
    out.append(_check("g44_divides_g23", "g44 | g23", "plain", n, g44, lambda ev: g23))
    out.append(_check("g33_divides_scaled_g23", "g33 | (g11/g22) g23", "plain", n, g33, scaled_g23))
    out.append(_check("g44_divides_h2_combo", "g44 | (z^n-1)/g22 (g24 - (g23/g33) g34)", "plain", n, g44, h2_combo))
    stmt_v = "g44 | g13 - (g11/g22) g24 + g11/(g22 g33) g23 g34"
    stmt_vi = "g44 | (z^n-1)/g11 (g14 - (g12/g22) g24 + ((g12 g23/g22 - g13)/g33) g34)"
    for reading in ("plain", "mod"):
        out.append(_check("g44_divides_g13_combo", stmt_v, reading, n, g44, g13_combo))
        out.append(_check("g44_divides_h1_full_combo", stmt_vi, reading, n, g44, h1_full_combo))

    stmt = "g33 | g11"
    out.append(_check("g33_divides_g11", stmt, "plain", n, g33, lambda ev: g11) if theta in _EVEN_C
               else _skip("g33_divides_g11", stmt))
    stmt = "g44 | g11"
    out.append(_check("g44_divides_g11", stmt, "plain", n, g44, lambda ev: g11) if theta in _EVEN_C
               else _skip("g44_divides_g11", stmt))
    stmt = "g44 | g22"
    out.append(_check("g44_divides_g22", stmt, "plain", n, g44, lambda ev: g22) if theta in _ZERO_SQ
               else _skip("g44_divides_g22", stmt))
    stmt = "g44 | g22 + g23"
    out.append(_check("g44_divides_g22_plus_g23", stmt, "plain", n, g44, lambda ev: g22 ^ g23) if theta in _TWO_K_SQ
               else _skip("g44_divides_g22_plus_g23", stmt))

    def combo_g12(with_g13):
        def build(ev):
            r = g12 ^ ev.mul(ev.div(g11, g33, "g33 | g11"), g34)
            return r ^ g13 if with_g13 else r
        return build

    stmt = "g44 | g12 + g13 - (g11/g33) g34"
    out.append(_check("g44_divides_g12_g13_combo", stmt, "plain", n, g44, combo_g12(True)) if theta in _TWO_K_SQ
               else _skip("g44_divides_g12_g13_combo", stmt))
    stmt = "g44 | g12 - (g11/g33) g34"
    out.append(_check("g44_divides_g12_combo", stmt, "plain", n, g44, combo_g12(False)) if theta in _ZERO_SQ
               else _skip("g44_divides_g12_combo", stmt))
    stmt = "g44 | g13"
    out.append(_check("g44_divides_g13", stmt, "plain", n, g44, lambda ev: g13) if theta in _ODD_C
               else _skip("g44_divides_g13", stmt))
    return RelationReport(tuple(out))


def describe(result):
    if result.status == "precondition":
        return f"{result.name} [{result.reading}]: precondition failed at {result.failed_step}"
    if result.status == "not-applicable":
        return f"{result.name}: not applicable for this theta"
    return (f"{result.name} [{result.reading}]: {result.status}"
            f"  ({z2_str(result.divisor)} | {z2_str(result.dividend)})")
