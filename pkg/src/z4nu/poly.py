"""Dense polynomials over Z2, Z4 and R, reduced mod z^n - 1.

Binary polynomials are plain ``int`` bitmasks (bit i is the coefficient of
z^i), which keeps division and gcd cheap.  Z4 and R polynomials carry their
length ``n`` (and ``theta`` for R) and refuse to mix with mismatched ones.
"""

from dataclasses import dataclass

import numpy as np

from .ring import RElem, Theta, k_of, relem_mul, split_k, join_k

NEG_INF = float("-inf")

# largest supported length; the oracle is the real bottleneck well before this
MAX_N = 64


class LengthMismatch(ValueError):
    pass


# --- Z2[z] as int bitmasks ---------------------------------------------------

def z2_deg(f):
    """Degree of f, or NEG_INF for the zero polynomial."""
    return f.bit_length() - 1 if f else NEG_INF


def xn1(n):
    """z^n - 1 over Z2."""
    return (1 << n) | 1


def z2_mul(f, g):
    if f < g:
        f, g = g, f
    out = 0
    while g:
        if g & 1:
            out ^= f
        f <<= 1
        g >>= 1
    return out


def z2_reduce(f, n):
    """f mod z^n - 1."""
    mask = (1 << n) - 1
    out = 0
    while f:
        out ^= f & mask
        f >>= n
    return out


def z2_mulmod(f, g, n):
    return z2_reduce(z2_mul(f, g), n)


def z2_divmod(f, d):
    """Plain division f = q*d + r with r = 0 or deg r < deg d."""
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    dd = d.bit_length()
    q = 0
    while f and f.bit_length() >= dd:
        shift = f.bit_length() - dd
        q |= 1 << shift
        f ^= d << shift
    return q, f


def z2_mod(f, d):
    return z2_divmod(f, d)[1]


def z2_exact_div(f, d):
    """f / d, raising ValueError if d does not divide f."""
    q, r = z2_divmod(f, d)
    if r:
        raise ValueError(f"{z2_str(d)} does not divide {z2_str(f)}")
    return q


def z2_divides(d, f):
    return z2_divmod(f, d)[1] == 0


def z2_gcd(f, g):
    """Monic gcd; over Z2 every nonzero polynomial is monic."""
    if not f and not g:
        raise ValueError("gcd(0, 0) is undefined")
    while g:
        f, g = g, z2_mod(f, g)
    return f


def z2_str(f, var="z"):
    if not f:
        return "0"
    terms = []
    for i in range(f.bit_length() - 1, -1, -1):
        if f >> i & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return "+".join(terms)


def z2_from_coeffs(coeffs):
    out = 0
    for i, c in enumerate(coeffs):
        if c % 2:
            out |= 1 << i
    return out


def z2_coeffs(f, n):
    return [f >> i & 1 for i in range(n)]


# --- helpers on coefficient arrays ------------------------------------------

def _cyclic_conv(x, y, n):
    c = np.convolve(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
    out = np.zeros(n, dtype=np.int64)
    for start in range(0, len(c), n):
        chunk = c[start:start + n]
        out[: len(chunk)] += chunk
    return out % 4


def _check_n(n):
    if not 1 <= n <= MAX_N:
        raise ValueError(f"length n must be in 1..{MAX_N}, got {n}")


def _fold(coeffs, n):
    out = [0] * n
    for i, c in enumerate(coeffs):
        out[i % n] += c
    return tuple(c % 4 for c in out)


# --- Z4[z]/(z^n - 1) ---------------------------------------------------------

@dataclass(frozen=True)
class PolyZ4:
    coeffs: tuple
    n: int

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "coeffs", _fold(self.coeffs, self.n))

    @classmethod
    def zero(cls, n):
        return cls((), n)

    @classmethod
    def from_z2(cls, f, n):
        """Lift a binary polynomial with 0/1 coefficients."""
        return cls(tuple(z2_coeffs(z2_reduce(f, n), n)), n)

    def _same(self, other):
        if not isinstance(other, PolyZ4) or other.n != self.n:
            raise LengthMismatch(f"cannot combine length {self.n} with {getattr(other, 'n', other)}")

    def __add__(self, other):
        self._same(other)
        return PolyZ4(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)), self.n)

    def __sub__(self, other):
        self._same(other)
        return PolyZ4(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)), self.n)

    def __neg__(self):
        return PolyZ4(tuple(-x for x in self.coeffs), self.n)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyZ4(tuple(x * other for x in self.coeffs), self.n)
        self._same(other)
        return PolyZ4(tuple(int(c) for c in _cyclic_conv(self.coeffs, other.coeffs, self.n)), self.n)

    __rmul__ = __mul__

    def shift(self, j=1):
        """Multiply by z^j."""
        n = self.n
        return PolyZ4(tuple(self.coeffs[(i - j) % n] for i in range(n)), n)

    def mod2(self):
        return z2_from_coeffs(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def degree(self):
        for i in range(self.n - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return NEG_INF


# --- R[z]/(z^n - 1) ----------------------------------------------------------

@dataclass(frozen=True)
class PolyR:
    """Polynomial sum_i (a_i + v b_i) z^i over R = Z4 + vZ4 with v^2 = theta."""

    a: tuple
    b: tuple
    n: int
    theta: Theta

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "a", _fold(self.a, self.n))
        object.__setattr__(self, "b", _fold(self.b, self.n))

    @classmethod
    def zero(cls, n, theta):
        return cls((), (), n, theta)

    @classmethod
    def from_coeffs(cls, coeffs, n, theta):
        coeffs = [c if isinstance(c, RElem) else RElem(*c) for c in coeffs]
        return cls(tuple(c.a for c in coeffs), tuple(c.b for c in coeffs), n, theta)

    @classmethod
    def constant(cls, x, n, theta):
        return cls.from_coeffs([x], n, theta)

    @classmethod
    def from_z2(cls, f, n, theta, scalar=RElem(1, 0)):
        """scalar * f for a binary polynomial f lifted with 0/1 coefficients."""
        bits = z2_coeffs(z2_reduce(f, n), n)
        return cls(tuple(scalar.a * c for c in bits), tuple(scalar.b * c for c in bits), n, theta)

    @property
    def coeffs(self):
        return tuple(RElem(x, y) for x, y in zip(self.a, self.b))

    def _same(self, other):
        if not isinstance(other, PolyR) or other.n != self.n or other.theta != self.theta:
            raise LengthMismatch("polynomials over R must share n and theta")

    def __add__(self, other):
        self._same(other)
        return PolyR(tuple(x + y for x, y in zip(self.a, other.a)),
                     tuple(x + y for x, y in zip(self.b, other.b)), self.n, self.theta)

    def __sub__(self, other):
        self._same(other)
        return PolyR(tuple(x - y for x, y in zip(self.a, other.a)),
                     tuple(x - y for x, y in zip(self.b, other.b)), self.n, self.theta)

    def __neg__(self):
        return PolyR(tuple(-x for x in self.a), tuple(-x for x in self.b), self.n, self.theta)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyR(tuple(x * other for x in self.a), tuple(x * other for x in self.b),
                         self.n, self.theta)
        if isinstance(other, RElem):
            return PolyR(tuple(relem_mul(c, other, self.theta).a for c in self.coeffs),
                         tuple(relem_mul(c, other, self.theta).b for c in self.coeffs),
                         self.n, self.theta)
        self._same(other)
        n, t = self.n, self.theta.value
        ac = _cyclic_conv(self.a, other.a, n)
        bd = _cyclic_conv(self.b, other.b, n)
        ad = _cyclic_conv(self.a, other.b, n)
        bc = _cyclic_conv(self.b, other.a, n)
        a = (ac + t.a * bd) % 4
        b = (ad + bc + t.b * bd) % 4
        return PolyR(tuple(int(x) for x in a), tuple(int(x) for x in b), n, self.theta)

    __rmul__ = __mul__

    def mul_z2(self, f):
        """Multiply by a binary polynomial lifted with 0/1 coefficients."""
        return self * PolyR.from_z2(f, self.n, self.theta)

    def shift(self, j=1):
        n = self.n
        return PolyR(tuple(self.a[(i - j) % n] for i in range(n)),
                     tuple(self.b[(i - j) % n] for i in range(n)), n, self.theta)

    def __bool__(self):
        return any(self.a) or any(self.b)

    def split(self):
        """(u, v) with self = u + k*v coefficientwise; u is the image in Z4[z]."""
        pairs = [split_k(self.theta, c) for c in self.coeffs]
        return (PolyZ4(tuple(p[0] for p in pairs), self.n),
                PolyZ4(tuple(p[1] for p in pairs), self.n))

    @classmethod
    def join(cls, u, v, theta):
        n = u.n
        cs = [join_k(theta, x, y) for x, y in zip(u.coeffs, v.coeffs)]
        return cls.from_coeffs(cs, n, theta)

    def phi(self):
        return self.split()[0]

    def degree(self):
        for i in range(self.n - 1, -1, -1):
            if self.a[i] or self.b[i]:
                return i
        return NEG_INF


def poly_mul_mod(f, g, n=None):
    """Product mod z^n - 1 over Z2 (ints, n required), Z4 or R."""
    if isinstance(f, int) and isinstance(g, int):
        if n is None:
            raise ValueError("binary polynomials need an explicit n")
        return z2_mulmod(f, g, n)
    if n is not None and (f.n != n or g.n != n):
        raise LengthMismatch("length mismatch")
    return f * g


# --- staged decomposition ----------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    """x = p1 + 2*p2 + k*p3 + 2k*p4 with binary p1..p4."""

    p1: int
    p2: int
    p3: int
    p4: int

    def parts(self):
        return (self.p1, self.p2, self.p3, self.p4)


def decompose(f):
    u, v = f.split()
    return Decomposition(
        z2_from_coeffs([c & 1 for c in u.coeffs]),
        z2_from_coeffs([c >> 1 for c in u.coeffs]),
        z2_from_coeffs([c & 1 for c in v.coeffs]),
        z2_from_coeffs([c >> 1 for c in v.coeffs]),
    )


def compose(d, theta, n):
    """p1 + 2 p2 + k p3 + 2k p4 as a polynomial over R."""
    k = k_of(theta)
    out = PolyR.from_z2(d.p1, n, theta)
    out = out + PolyR.from_z2(d.p2, n, theta, RElem(2, 0))
    out = out + PolyR.from_z2(d.p3, n, theta, k)
    out = out + PolyR.from_z2(d.p4, n, theta, k.scale(2))
    return out
