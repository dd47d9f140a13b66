"""Cyclic codes of arbitrary length over the non-chain rings Z4 + vZ4 (v^2 = theta).

The main entry points are :func:`canonicalize` (unique staged generators of
a code), :func:`verify_relations`, :func:`rank_and_cardinality` and the
brute-force :func:`enumerate_code` used to check them.
"""

from .ring import (ALL_THETAS, ChainRingError, RElem, Theta, classify, k_of, phi,
                   relem_mul)
from .poly import (Decomposition, LengthMismatch, PolyR, PolyZ4, compose, decompose,
                   poly_mul_mod, z2_divmod, z2_gcd)
from .z4codes import Z4CanonicalForm, Z4CodeSpec, z4_canonical_form, z4_membership
from .structure import (CanonicalGens, CodeSpec, StagedConditionError, StagedGens, Towers,
                        build_staged, canonicalize, membership_r, reduce_unique, towers)
from .relations import RelationReport, verify_relations
from .rank import (NegativeShiftCount, RankCardResult, compute_cardinality, compute_rank,
                   minimal_spanning_set, rank_and_cardinality)
from .oracle import (CodewordSet, OracleLimitExceeded, closure_invariants, enumerate_code,
                     verify_spanning_minimality)
from .parser import ParseError, format_poly, parse_poly, parse_relem
from .analysis import analyze, load_spec, run_census

__version__ = "0.1.0"
