"""Random codes and generator-set rewrites for property suites and the census."""

import random

from .poly import PolyR, xn1, z2_deg, z2_exact_div, z2_gcd, z2_mul
from .ring import ALL_ELEMENTS
from .structure import CodeSpec, StagedGens


def random_binary(rng, n, max_deg=None):
    top = n if max_deg is None else max(max_deg + 1, 0)
    return rng.getrandbits(top) if top > 0 else 0


def random_divisor(rng, f, n):
    """A random divisor of f, where f divides z^n - 1."""
    roll = rng.random()
    if roll < 0.15:
        return f
    if roll < 0.25:
        return 1
    r = random_binary(rng, n)
    return z2_gcd(f, r) if r else f


def _admissible_offdiag(rng, top, low, n):
    """Random p with deg p < deg low and low | p (z^n - 1)/top."""
    q = z2_exact_div(xn1(n), top)
    h = z2_exact_div(low, z2_gcd(low, q))
    room = z2_deg(low) - z2_deg(h)
    if room <= 0:
        return 0
    return z2_mul(h, random_binary(rng, n, room - 1))


def random_staged(rng, n, theta):
    """Staged table satisfying the divisibility and degree conditions on both Z4 layers."""
    N = xn1(n)
    g11 = random_divisor(rng, N, n)
    g22 = random_divisor(rng, g11, n)
    g33 = random_divisor(rng, N, n)
    g44 = random_divisor(rng, g33, n)
    return StagedGens(
        n, theta,
        g11=g11, g12=_admissible_offdiag(rng, g11, g22, n),
        g13=random_binary(rng, n), g14=random_binary(rng, n),
        g22=g22, g23=random_binary(rng, n), g24=random_binary(rng, n),
        g33=g33, g34=_admissible_offdiag(rng, g33, g44, n),
        g44=g44,
    )


def random_poly(rng, n, theta, density=0.5):
    coeffs = [rng.choice(ALL_ELEMENTS) if rng.random() < density else ALL_ELEMENTS[0]
              for _ in range(n)]
    return PolyR.from_coeffs(coeffs, n, theta)


def random_code(rng, n, theta):
    """Either a staged code or the ideal of a few arbitrary non-unit-heavy generators."""
    if rng.random() < 0.7:
        return random_staged(rng, n, theta).code()
    gens = []
    for _ in range(rng.randint(1, 3)):
        g = random_poly(rng, n, theta)
        scalar = rng.choice(ALL_ELEMENTS[1:])
        gens.append(g * scalar)
    return CodeSpec(n, theta, gens)


def permuted(rng, spec):
    gens = list(spec.gens)
    rng.shuffle(gens)
    return CodeSpec(spec.n, spec.theta, gens)


def with_redundant(rng, spec):
    """Append a random R[z]-combination of the existing generators."""
    extra = PolyR.zero(spec.n, spec.theta)
    for g in spec.gens:
        extra = extra + random_poly(rng, spec.n, spec.theta) * g
    gens = list(spec.gens)
    gens.insert(rng.randint(0, len(gens)), extra)
    return CodeSpec(spec.n, spec.theta, gens)


def mixed(rng, spec):
    """Replace one generator by itself plus a multiple of another one."""
    gens = list(spec.gens)
    if len(gens) < 2:
        return with_redundant(rng, spec)
    i, j = rng.sample(range(len(gens)), 2)
    gens[i] = gens[i] + random_poly(rng, spec.n, spec.theta) * gens[j]
    return CodeSpec(spec.n, spec.theta, gens)


def make_rng(seed, *salt):
    return random.Random(f"{seed}:" + ":".join(str(s) for s in salt))
