"""Exact linear algebra over the rationals for graded rank checks.

Columns are sparse mappings row-index -> coefficient.  Small problems go
through an incremental fraction-free echelon.  Large problems use a
modular fast path whose answer is still exact, certified by a squeeze:

  * elimination mod p that finds r pivots exhibits an r x r minor that is
    nonzero mod p, hence nonzero over Q, so rank >= r;
  * a supplied family of exact kernel vectors (syzygies, true by
    polynomial identity) whose rank mod p is K proves the kernel has
    dimension >= K, so rank <= ncols - K.

When r + K == ncols both bounds meet and r is the exact rank.  If no
prime closes the squeeze the code falls back to fraction-free elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

__all__ = [
    "scale_to_int",
    "rank_exact_int",
    "rank_certified",
    "FractionEchelon",
    "LinearSolver",
]

# the three largest primes below 2**31: products of residues fit in int64
_PRIMES = (2147483647, 2147483629, 2147483587)


def scale_to_int(col: dict) -> dict:
    """Scale a rational column to coprime integers (rank-preserving)."""
    if not col:
        return {}
    mult = 1
    for v in col.values():
        f = Fraction(v)
        mult = mult * f.denominator // gcd(mult, f.denominator)
    ints = {r: int(Fraction(v) * mult) for r, v in col.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {r: v // g for r, v in ints.items()}
    return ints


def rank_exact_int(columns, nrows: int) -> int:
    """Rank by incremental integer echelon with content stripping."""
    echelon: dict[int, dict[int, int]] = {}
    for col in columns:
        v = scale_to_int(col)
        while v:
            lead = min(v)
            u = echelon.get(lead)
            if u is None:
                g = 0
                for x in v.values():
                    g = gcd(g, x)
                echelon[lead] = {k: x // g for k, x in v.items()}
                break
            a, b = u[lead], v[lead]
            new: dict[int, int] = {}
            for k in v.keys() | u.keys():
                x = a * v.get(k, 0) - b * u.get(k, 0)
                if x:
                    new[k] = x
            g = 0
            for x in new.values():
                g = gcd(g, x)
            v = {k: x // g for k, x in new.items()} if g > 1 else new
    return len(echelon)


def _dense_mod_p(columns, nrows: int, p: int) -> np.ndarray:
    A = np.zeros((nrows, len(columns)), dtype=np.int64)
    for cidx, col in enumerate(columns):
        for r, v in col.items():
            A[r, cidx] = v % p
    return A


def _rank_mod_p(A: np.ndarray, p: int) -> int:
    """In-place row elimination mod p; entries stay below p < 2**31."""
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        sub = A[r:, c]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = np.nonzero(A[r + 1 :, c])[0]
        if below.size:
            rows = below + r + 1
            A[rows, c:] = (A[rows, c:] - np.outer(A[rows, c], A[r, c:])) % p
        r += 1
    return r


def rank_certified(columns, nrows: int, kernel_vectors=()) -> tuple[int, str]:
    """Exact rank of integer columns, with the certification method used.

    kernel_vectors are exact elements of the right kernel, as sparse
    mappings column-index -> int.  Returns (rank, method) where method is
    "squeeze" when a modular squeeze certified the answer and "echelon"
    when the fraction-free fallback ran.
    """
    ncols = len(columns)
    if ncols == 0:
        return 0, "empty"
    kernel_vectors = list(kernel_vectors)
    for p in _PRIMES:
        r = _rank_mod_p(_dense_mod_p(columns, nrows, p), p)
        k = 0
        if kernel_vectors:
            k = _rank_mod_p(_dense_mod_p(kernel_vectors, ncols, p), p)
        if r + k == ncols:
            return r, "squeeze"
    return rank_exact_int(columns, nrows), "echelon"


class FractionEchelon:
    """Incremental echelon over Q with optional dependency tracking.

    Vectors are inserted one at a time.  A vector inserted with a tag
    records its expansion over all previously tagged vectors; when a
    tagged vector reduces to zero the expansion is returned as a
    dependency certificate.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}
        self.tracks: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, col: dict, tag=None):
        """Insert a vector; returns a dependency dict for redundant tagged
        vectors, None otherwise."""
        v = {r: Fraction(x) for r, x in col.items() if x}
        track = {tag: Fraction(1)} if tag is not None else None
        while v:
            lead = min(v)
            u = self.pivots.get(lead)
            if u is None:
                inv = 1 / v[lead]
                self.pivots[lead] = {k: x * inv for k, x in v.items()}
                if track is not None:
                    self.tracks[lead] = {t: x * inv for t, x in track.items()}
                return None
            b = v[lead]
            for k, x in u.items():
                w = v.get(k, Fraction(0)) - b * x
                if w:
                    v[k] = w
                else:
                    v.pop(k, None)
            ut = self.tracks.get(lead)
            if track is not None and ut is not None:
                for t, x in ut.items():
                    w = track.get(t, Fraction(0)) - b * x
                    if w:
                        track[t] = w
                    else:
                        track.pop(t, None)
        if track is not None:
            return track
        return None


class LinearSolver:
    """Reusable exact solver for A x = b, A fixed and given by columns."""

    def __init__(self, columns, nrows: int):
        self.nrows = nrows
        self.ncols = len(columns)
        A = [[Fraction(0)] * self.ncols for _ in range(nrows)]
        for cidx, col in enumerate(columns):
            for r, v in col.items():
                A[r][cidx] = Fraction(v)
        E = [
            [Fraction(1) if i == j else Fraction(0) for j in range(nrows)]
            for i in range(nrows)
        ]
        pivots: list[tuple[int, int]] = []
        row = 0
        for c in range(self.ncols):
            if row == nrows:
                break
            piv = next((r for r in range(row, nrows) if A[r][c]), None)
            if piv is None:
                continue
            A[row], A[piv] = A[piv], A[row]
            E[row], E[piv] = E[piv], E[row]
            inv = 1 / A[row][c]
            A[row] = [x * inv for x in A[row]]
            E[row] = [x * inv for x in E[row]]
            for r in range(nrows):
                if r != row and A[r][c]:
                    f = A[r][c]
                    A[r] = [x - f * y for x, y in zip(A[r], A[row])]
                    E[r] = [x - f * y for x, y in zip(E[r], E[row])]
            pivots.append((row, c))
            row += 1
        self._A = A
        self._E = E
        self._pivots = pivots
        self.rank = row

    def solve(self, rhs: dict) -> list[Fraction] | None:
        """A solution with free variables set to zero, or None."""
        c = [Fraction(0)] * self.nrows
        for r, v in rhs.items():
            v = Fraction(v)
            if v:
                col = [row[r] for row in self._E]
                for i in range(self.nrows):
                    if col[i]:
                        c[i] += col[i] * v
        for r in range(self.rank, self.nrows):
            if c[r]:
                return None
        x = [Fraction(0)] * self.ncols
        for row, col in self._pivots:
            x[col] = c[row]
        return x
