"""Brute-force codeword enumeration, used to check everything else.

Nothing here uses the staged form, the towers machinery or any closed-form
count.  Words are length-2n vectors over Z4 in the plain (a, b) coordinates
of a + v b, packed into integers with 2 bits per digit (a_0 in the most
significant digit, so integer order is lexicographic order on the
coefficient pairs).  Spans are grown one generator at a time: adding v to a
subgroup S gives S + {0, v, 2v, 3v}, which only ever touches new elements.
"""

from dataclasses import dataclass

import numpy as np

from .poly import PolyR, xn1, z2_deg, z2_from_coeffs
from .ring import RElem, relem_mul, k_of

DEFAULT_LIMIT = 1 << 20
# dense membership bitmap up to 4^13 slots; beyond that fall back to sorted arrays
_BITMAP_BITS = 26


class OracleLimitExceeded(RuntimeError):
    def __init__(self, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(f"code has at least {size} words, over the limit of {limit}")


def _digits_to_key(digits):
    key = 0
    for d in digits:
        key = key << 2 | (int(d) % 4)
    return key


def word_key(w):
    digits = []
    for a, b in zip(w.a, w.b):
        digits += [a, b]
    return _digits_to_key(digits)


def key_word(key, n, theta):
    d = [(key >> 2 * (2 * n - 1 - i)) & 3 for i in range(2 * n)]
    return PolyR(tuple(d[0::2]), tuple(d[1::2]), n, theta)


def _lane_masks(n):
    lanes = 2 * n
    high = sum(2 << 2 * i for i in range(lanes))
    low = sum(1 << 2 * i for i in range(lanes))
    return np.uint64(high), np.uint64(low)


def _add(keys, v, n):
    """Digitwise mod-4 addition of packed words (vectorised over ``keys``)."""
    high, low = _lane_masks(n)
    v = np.uint64(v)
    s = (keys & low) + (v & low)
    return s ^ ((keys ^ v) & high)


def _scalar_add(a, b, n):
    return int(_add(np.array([a], dtype=np.uint64), b, n)[0])


class _Subgroup:
    """Additive subgroup of Z4^(2n) grown by adjoining generators."""

    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        self.keys = np.zeros(1, dtype=np.uint64)
        self.dense = 4 * n <= _BITMAP_BITS
        if self.dense:
            self.seen = np.zeros(1 << (4 * n), dtype=bool)
            self.seen[0] = True
        else:
            self.sorted = self.keys

    def __contains__(self, key):
        if self.dense:
            return bool(self.seen[key])
        i = np.searchsorted(self.sorted, np.uint64(key))
        return i < len(self.sorted) and int(self.sorted[i]) == key

    def adjoin(self, v):
        if v in self:
            return
        two_v = _scalar_add(v, v, self.n)
        mult = 2 if two_v in self else 4
        if len(self.keys) * mult > self.limit:
            raise OracleLimitExceeded(len(self.keys) * mult, self.limit)
        blocks = [self.keys]
        cur = self.keys
        for _ in range(mult - 1):
            cur = _add(cur, v, self.n)
            blocks.append(cur)
        self.keys = np.concatenate(blocks)
        if self.dense:
            self.seen[self.keys] = True
        else:
            self.sorted = np.sort(self.keys)


def _shift_key(key, n):
    """Multiply by z: coefficient i moves to i+1, the last wraps to 0."""
    top = key & 0xF
    return (key >> 4) | (top << 4 * (n - 1))


def _nu_key(key, n, theta):
    out = 0
    for i in range(n):
        shift = 4 * (n - 1 - i)
        a, b = (key >> shift + 2) & 3, (key >> shift) & 3
        y = relem_mul(RElem(a, b), RElem(0, 1), theta)
        out |= (y.a << 2 | y.b) << shift
    return out


@dataclass(frozen=True)
class CodewordSet:
    n: int
    theta: object
    keys: np.ndarray  # sorted packed words

    def __len__(self):
        return len(self.keys)

    def __contains__(self, w):
        key = w if isinstance(w, int) else word_key(w)
        i = np.searchsorted(self.keys, np.uint64(key))
        return bool(i < len(self.keys) and int(self.keys[i]) == key)

    def words(self):
        return [key_word(int(k), self.n, self.theta) for k in self.keys]

    def digits(self):
        """(N, 2n) array of Z4 digits in (a_0, b_0, a_1, b_1, ...) order."""
        n = self.n
        shifts = np.array([2 * (2 * n - 1 - i) for i in range(2 * n)], dtype=np.uint64)
        return ((self.keys[:, None] >> shifts) & np.uint64(3)).astype(np.int64)


def span_keys(words, n, theta, cyclic, limit=DEFAULT_LIMIT):
    """Sorted packed words of the R-span (``cyclic``: the ideal) generated by ``words``."""
    group = _Subgroup(n, limit)
    for w in words:
        key = word_key(w)
        orbit = [key]
        if cyclic:
            for _ in range(n - 1):
                orbit.append(_shift_key(orbit[-1], n))
        for x in orbit:
            group.adjoin(x)
            group.adjoin(_nu_key(x, n, theta))
    return np.sort(group.keys)


def enumerate_code(spec, limit=DEFAULT_LIMIT):
    """All codewords of the ideal generated by ``spec.gens``."""
    keys = span_keys(spec.gens, spec.n, spec.theta, cyclic=True, limit=limit)
    return CodewordSet(spec.n, spec.theta, keys)


@dataclass(frozen=True)
class SpanVerdict:
    spans: bool
    minimal: bool
    redundant_index: int = None


def verify_spanning_minimality(elements, code, limit=DEFAULT_LIMIT):
    """Does the R-linear span of ``elements`` equal ``code``, and is no element redundant?"""
    n, theta = code.n, code.theta
    full = span_keys(elements, n, theta, cyclic=False, limit=limit)
    spans = len(full) == len(code) and bool(np.array_equal(full, code.keys))
    redundant = None
    for i in range(len(elements)):
        rest = elements[:i] + elements[i + 1:]
        if len(span_keys(rest, n, theta, cyclic=False, limit=limit)) == len(full):
            redundant = i
            break
    return SpanVerdict(spans, redundant is None, redundant)


def closure_invariants(code):
    """True iff the set holds 0 and is closed under +, R-scalars and the cyclic shift.

    Closure under + is checked against a generating set pulled greedily from
    the words themselves, which is enough: a set containing 0 and closed under
    adding each generator contains their whole span.
    """
    n, theta = code.n, code.theta
    keys = [int(k) for k in code.keys]
    members = set(keys)
    if 0 not in members:
        return False
    for key in keys:
        if _shift_key(key, n) not in members or _nu_key(key, n, theta) not in members:
            return False
    group = _Subgroup(n, max(len(keys), 1) * 4)
    gens = []
    for key in keys:
        if key not in group:
            gens.append(key)
            group.adjoin(key)
    if len(group.keys) != len(members):
        return False
    arr = np.array(keys, dtype=np.uint64)
    for g in gens:
        moved = _add(arr, g, n)
        if not all(int(x) in members for x in moved):
            return False
    return True


def codeword_set(words, n, theta):
    return CodewordSet(n, theta, np.array(sorted({word_key(w) for w in words}), dtype=np.uint64))


# --- towers by direct search -------------------------------------------------

def _min_degree_generator(binary_words, n):
    best = None
    for f in binary_words:
        if f and (best is None or z2_deg(f) < z2_deg(best)):
            best = f
    return xn1(n) if best is None else best


def brute_force_towers(code):
    """(g11, g22, g33, g44) as minimal-degree members of the four binary layers.

    Works straight from the definitions: layer 1 is phi(C) mod 2, layer 2 is
    {a : 2a in phi(C)}, layer 3 is {x mod 2 : k x in C}, layer 4 is {a : 2k a in C}.
    """
    n, theta = code.n, code.theta
    k = k_of(theta)
    digits = code.digits()
    a, b = digits[:, 0::2], digits[:, 1::2]
    image = (a - b * k.a) % 4                      # phi applied coefficientwise
    image_keys = {tuple(row) for row in image.tolist()}
    layer1 = {z2_from_coeffs(row) for row in image.tolist()}
    layer2, layer3, layer4 = set(), set(), set()
    for x in range(1 << n):
        bits = [x >> i & 1 for i in range(n)]
        if tuple(2 * c for c in bits) in image_keys:
            layer2.add(x)
        if word_key(PolyR.from_coeffs([k.scale(2 * c) for c in bits], n, theta)) in code:
            layer4.add(x)
    for x in range(4 ** n):
        coeffs = [(x >> 2 * i) & 3 for i in range(n)]
        if word_key(PolyR.from_coeffs([k.scale(c) for c in coeffs], n, theta)) in code:
            layer3.add(z2_from_coeffs(coeffs))
    return tuple(_min_degree_generator(layer, n) for layer in (layer1, layer2, layer3, layer4))
