"""Arithmetic in R = Z4 + vZ4 with v^2 = theta.

An element a + v*b is stored as the pair (a, b) of residues mod 4.  Only
the eight values of theta for which R is not a chain ring are accepted as
a :class:`Theta`; the other eight are still representable as plain
:class:`RElem` values so they can be classified.
"""

from dataclasses import dataclass


class ChainRingError(ValueError):
    """Raised when a chain-ring value of v^2 is used where a non-chain one is required."""


@dataclass(frozen=True, order=True)
class RElem:
    a: int = 0
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % 4)
        object.__setattr__(self, "b", self.b % 4)

    def __add__(self, other):
        return RElem(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return RElem(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return RElem(-self.a, -self.b)

    def scale(self, c):
        """Multiply by an integer (an element of Z4)."""
        return RElem(self.a * c, self.b * c)

    def __bool__(self):
        return bool(self.a or self.b)

    def __str__(self):
        return format_relem(self)


ZERO = RElem(0, 0)
ONE = RElem(1, 0)
NU = RElem(0, 1)
ALL_ELEMENTS = tuple(RElem(a, b) for a in range(4) for b in range(4))

NON_CHAIN = frozenset(
    RElem(a, b)
    for a, b in [(0, 0), (1, 0), (0, 1), (0, 2), (0, 3), (2, 1), (2, 3), (3, 2)]
)
CHAIN = frozenset(x for x in ALL_ELEMENTS if x not in NON_CHAIN)


def format_relem(x):
    a, b = x.a, x.b
    if not b:
        return str(a)
    vb = "v" if b == 1 else f"{b}v"
    return vb if not a else f"{a}+{vb}"


def classify(candidate):
    """Return ``"non-chain"`` or ``"chain"`` for the ring with v^2 = candidate."""
    return "non-chain" if RElem(candidate.a, candidate.b) in NON_CHAIN else "chain"


@dataclass(frozen=True)
class Theta:
    """A value of v^2 giving a non-chain ring."""

    value: RElem

    def __post_init__(self):
        v = self.value
        if not isinstance(v, RElem):
            v = RElem(*v)
            object.__setattr__(self, "value", v)
        if v not in NON_CHAIN:
            raise ChainRingError(
                f"v^2 = {format_relem(v)} gives a chain ring; non-chain values are "
                "{0, 1, v, 2v, 3v, 2+v, 2+3v, 3+2v} and chain values are "
                "{2, 3, 1+v, 1+2v, 1+3v, 2+2v, 3+v, 3+3v}"
            )

    @classmethod
    def of(cls, a, b=0):
        return cls(RElem(a, b))

    def __str__(self):
        return format_relem(self.value)


ALL_THETAS = tuple(Theta(x) for x in sorted(NON_CHAIN))


def relem_mul(x, y, theta):
    """(a+vb)(c+vd) = (ac + t0*bd) + v(ad + bc + t1*bd) where theta = t0 + v*t1."""
    t = theta.value if isinstance(theta, Theta) else theta
    bd = x.b * y.b
    return RElem(x.a * y.a + t.a * bd, x.a * y.b + x.b * y.a + t.b * bd)


def k_of(theta):
    """The element k with R/kR = Z4 used to split codes into two Z4 layers."""
    t = theta.value
    if t.a == 0:
        # theta in {0, v, 2v, 3v}
        return NU
    if t in (RElem(1, 0), RElem(3, 2)):
        return RElem(1, 1)
    return RElem(2, 1)


def k_square_multiplier(theta):
    """The c in Z4 with k^2 = c*k.  Even exactly for theta in {0, 1, 2v, 3+2v}."""
    k = k_of(theta)
    k2 = relem_mul(k, k, theta)
    for c in range(4):
        if k.scale(c) == k2:
            return c
    raise AssertionError("k^2 is not a Z4 multiple of k")  # pragma: no cover


def phi(theta, x):
    """The projection R -> Z4 that kills k.

    k = v:    a + vb -> a
    k = 1+v:  a + vb -> a + 3b
    k = 2+v:  a + vb -> a + 2b
    """
    k = k_of(theta)
    # phi(v) = -k.a, so phi(a + vb) = a - b*k.a
    return (x.a - x.b * k.a) % 4


def split_k(theta, x):
    """Write x = u + k*v with u, v in Z4; returns (u, v).  u equals phi(x)."""
    k = k_of(theta)
    return (x.a - x.b * k.a) % 4, x.b


def join_k(theta, u, v):
    """Inverse of :func:`split_k`."""
    k = k_of(theta)
    return RElem(u + v * k.a, v)
