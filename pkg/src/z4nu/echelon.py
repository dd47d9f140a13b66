"""Canonical (Howell) echelon form of submodules of Z4^m.

Columns are eliminated left to right.  Each pivot is 1 or 2, entries above
a pivot are reduced into ``range(pivot)``, and whenever a pivot is 2 the row
doubled is fed back in, so for every column j the rows pivoting at or after
j span exactly the vectors of the module that vanish before j.  That last
property is what makes membership, kernels and preimages work by plain
reduction.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class EchelonBasisZ4:
    rows: tuple      # tuple of tuples over Z4
    pivots: tuple    # (column, pivot value) per row
    width: int

    def __len__(self):
        return len(self.rows)

    def array(self):
        return np.array(self.rows, dtype=np.int64).reshape(-1, self.width)

    def log2_size(self):
        """log2 of the module size: 2 bits per unit pivot, 1 per pivot 2."""
        return sum(2 if pv == 1 else 1 for _, pv in self.pivots)

    def size(self):
        return 1 << self.log2_size()

    def reduce(self, w):
        """Canonical remainder of w; zero exactly when w is in the module."""
        w = np.asarray(w, dtype=np.int64) % 4
        if w.shape != (self.width,):
            raise ValueError(f"expected a vector of width {self.width}")
        for row, (j, pv) in zip(self.rows, self.pivots):
            q = w[j] // pv
            if q:
                w = (w - q * np.asarray(row, dtype=np.int64)) % 4
        return tuple(int(x) for x in w)

    def contains(self, w):
        return not any(self.reduce(w))

    def rows_from(self, col):
        """Rows pivoting at column >= col (they span the module elements vanishing before col)."""
        return [r for r, (j, _) in zip(self.rows, self.pivots) if j >= col]

    def rows_before(self, col):
        return [r for r, (j, _) in zip(self.rows, self.pivots) if j < col]


def echelon_basis(vectors, width):
    """Howell basis of the Z4-span of ``vectors`` (each of length ``width``)."""
    pending = np.array(list(vectors), dtype=np.int64).reshape(-1, width) % 4
    basis = []  # [column, row, pivot]
    for j in range(width):
        pending = pending[pending.any(axis=1)]
        if not len(pending):
            break
        col = pending[:, j]
        odd = np.flatnonzero(col % 2)
        if odd.size:
            i = odd[0]
            p = pending[i] * (1 if col[i] == 1 else 3) % 4
            rest = np.delete(pending, i, axis=0)
            rest = (rest - np.outer(rest[:, j], p)) % 4
            pv = 1
        else:
            nz = np.flatnonzero(col)
            if not nz.size:
                continue
            i = nz[0]
            p = pending[i]
            rest = np.delete(pending, i, axis=0)
            rest = (rest - np.outer(rest[:, j] // 2, p)) % 4
            rest = np.vstack([rest, 2 * p % 4])
            pv = 2
        for entry in basis:
            q = entry[1][j] // pv
            if q:
                entry[1] = (entry[1] - q * p) % 4
        basis.append([j, p, pv])
        pending = rest
    return EchelonBasisZ4(
        rows=tuple(tuple(int(x) for x in r) for _, r, _ in basis),
        pivots=tuple((j, pv) for j, _, pv in basis),
        width=width,
    )


def preimage(pairs, target, left_width, right_width):
    """Given generators (L_i, R_i), find sum c_i R_i for some c with sum c_i L_i = target.

    Returns None if ``target`` is not in the span of the L_i.
    """
    width = left_width + right_width
    rows = [tuple(l) + tuple(r) for l, r in pairs]
    eb = echelon_basis(rows, width) if rows else EchelonBasisZ4((), (), width)
    rem = eb.reduce(tuple(target) + (0,) * right_width)
    if any(rem[:left_width]):
        return None
    return tuple((-x) % 4 for x in rem[left_width:])


def colon_by_two(rows, width):
    """Basis of {y : 2y in M} for M spanned by ``rows``."""
    gens = [tuple(r) + (0,) * width for r in rows]
    for i in range(width):
        e = [0] * (2 * width)
        e[i] = 2
        e[width + i] = 1
        gens.append(tuple(e))
    eb = echelon_basis(gens, 2 * width)
    return [r[width:] for r in eb.rows_from(width)]
