"""Closed-form rank and cardinality from the tower degrees, and the shift-family spanning set."""

from dataclasses import dataclass


class NegativeShiftCount(ValueError):
    def __init__(self, counts):
        self.counts = counts
        bad = ", ".join(f"{name} = {v}" for name, v in counts.items() if v < 0)
        super().__init__(f"negative shift count ({bad}); the rank formula does not apply")


@dataclass(frozen=True)
class RankCardResult:
    rank: int
    log2_card: int
    s_tilde: int
    spanning_set: tuple
    multiplicities: tuple   # copies of g1..g4 in the spanning set


def shift_counts(c):
    """Number of shifts of g1..g4 used in the spanning set, keyed by the expression."""
    n = c.n
    s1, s2, s3, s4 = c.degrees()
    st = min(s2, s3)
    return {"n-s1": n - s1, "s1-s2": s1 - s2, "s1-s3": s1 - s3, "min(s2,s3)-s4": st - s4}


def _checked_counts(c):
    counts = shift_counts(c)
    if any(v < 0 for v in counts.values()):
        raise NegativeShiftCount(counts)
    return tuple(counts.values())


def compute_rank(c):
    """n + s1 + min(s2, s3) - s2 - s3 - s4."""
    return sum(_checked_counts(c))


def compute_cardinality(c):
    """log2 |C| by the two-branch formula (split on whether g23 is zero)."""
    n = c.n
    s1, s2, s3, s4 = c.degrees()
    st = min(s2, s3)
    if c.g23:
        return 4 * n + s1 + st - 3 * s2 - 2 * s3 - s4
    return 4 * n + st - 2 * s2 - 2 * s3 - s4


def layered_log2_size(c):
    """log2 |C| as |phi(C)| * |C cap kR^n| = 2^(2n - s1 - s2) * 2^(2n - s3 - s4)."""
    s1, s2, s3, s4 = c.degrees()
    return 4 * c.n - s1 - s2 - s3 - s4


def minimal_spanning_set(c):
    """Shifts z^j g_i, j below the matching shift count, in the order g1, g2, g3, g4."""
    counts = _checked_counts(c)
    out = []
    for g, m in zip(c.generators(), counts):
        out.extend(g.shift(j) for j in range(m))
    return tuple(out)


def rank_and_cardinality(c):
    s2, s3 = c.s2, c.s3
    span = minimal_spanning_set(c)
    return RankCardResult(
        rank=compute_rank(c),
        log2_card=compute_cardinality(c),
        s_tilde=min(s2, s3),
        spanning_set=span,
        multiplicities=_checked_counts(c),
    )
