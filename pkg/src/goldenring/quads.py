"""Representations of ring elements as sums of inverse golden powers.

A representation of alpha >= 0 is a non-decreasing tuple (i_1 <= ... <= i_s)
of nonnegative indices with alpha = sum of gamma**(-i_k).  Its weight data:

    degree   d  = sum f(i_k)
    bidegree    = (sum f(i_k - 2), sum f(i_k - 1))
    size     s  = number of indices

A quad (i; a, b, c) with a >= 1, b, c >= 0 encodes the representation with
a copies of i, b of i+1, c of i+2.  Two single-step moves organize all
representations of bounded degree:

    expand_quad    keeps the value, increases size by 1
    contract_quad  keeps the bidegree, decreases size by 1

The census functions count, for every ring element of bounded (bi)degree,
the maximal representation size, both by closed formula and by brute-force
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceeded
from .golden import BiDegree, GoldenInt, fib, golden_power

__all__ = [
    "Representation",
    "Quad",
    "PartitionClass",
    "classify",
    "canonical_quad",
    "expand_quad",
    "contract_quad",
    "quads_for_value",
    "quads_with_bidegree",
    "max_size_for_degree",
    "max_size_for_bidegree",
    "maximal_quad_for_degree",
    "maximal_quad_for_bidegree",
    "elements_up_to_degree",
    "elements_up_to_bidegree",
    "size_class_count",
    "size_class_count_bi",
    "size_class_profile",
    "size_class_profile_bi",
    "brute_force_sizes",
    "brute_force_sizes_bi",
    "sizes_to_profile",
    "BRUTE_FORCE_MAX_DEGREE",
    "BRUTE_FORCE_MAX_BIDEGREE",
]

BRUTE_FORCE_MAX_DEGREE = 10
BRUTE_FORCE_MAX_BIDEGREE = 12  # bound on d1 + d2


@dataclass(frozen=True)
class Representation:
    indices: tuple[int, ...]

    def __post_init__(self):
        prev = 0
        for i in self.indices:
            if i < prev:
                raise ValueError("indices must be non-decreasing and >= 0")
            prev = i

    def value(self) -> GoldenInt:
        v = GoldenInt.zero()
        for i in self.indices:
            v = v + golden_power(-i)
        return v

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def degree(self) -> int:
        return sum(fib(i) for i in self.indices)

    @property
    def bidegree(self) -> BiDegree:
        return BiDegree(
            sum(fib(i - 2) for i in self.indices),
            sum(fib(i - 1) for i in self.indices),
        )


@dataclass(frozen=True, slots=True)
class Quad:
    """Compressed representation (i; a, b, c): a*i, b*(i+1), c*(i+2)."""

    i: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.i < 0 or self.a < 1 or self.b < 0 or self.c < 0:
            raise ValueError("quad needs i >= 0, a >= 1, b >= 0, c >= 0")

    def value(self) -> GoldenInt:
        return (
            self.a * golden_power(-self.i)
            + self.b * golden_power(-self.i - 1)
            + self.c * golden_power(-self.i - 2)
        )

    @property
    def size(self) -> int:
        return self.a + self.b + self.c

    @property
    def d1(self) -> int:
        i = self.i
        return self.a * fib(i - 2) + self.b * fib(i - 1) + self.c * fib(i)

    @property
    def d2(self) -> int:
        i = self.i
        return self.a * fib(i - 1) + self.b * fib(i) + self.c * fib(i + 1)

    @property
    def degree(self) -> int:
        i = self.i
        return self.a * fib(i) + self.b * fib(i + 1) + self.c * fib(i + 2)

    @property
    def bidegree(self) -> BiDegree:
        return BiDegree(self.d1, self.d2)

    def indices(self) -> tuple[int, ...]:
        return (self.i,) * self.a + (self.i + 1,) * self.b + (self.i + 2,) * self.c

    def to_representation(self) -> Representation:
        return Representation(self.indices())

    def to_json(self) -> dict:
        return {"i": self.i, "a": self.a, "b": self.b, "c": self.c}

    @classmethod
    def from_json(cls, obj: dict) -> "Quad":
        return cls(int(obj["i"]), int(obj["a"]), int(obj["b"]), int(obj["c"]))


@dataclass(frozen=True, slots=True)
class PartitionClass:
    """Which stratum a nonnegative element belongs to.

    kind is "zero", "plus" (both coordinates >= 1), or "band" with the
    unique band index i >= 0 such that alpha = m'*gamma**-i + n'*gamma**-(i+2)
    for integers m' >= 1, n' >= 0.
    """

    kind: str
    band: int | None = None


def _band_coordinates(alpha: GoldenInt, i: int) -> tuple[int, int] | None:
    """Coordinates of alpha in the basis (gamma**-i, gamma**-(i+2)), if the
    band pattern m' >= 1, n' >= 0 holds there."""
    a1, a2 = fib(-i), fib(-i - 1)
    b1, b2 = fib(-i - 2), fib(-i - 3)
    det = a1 * b2 - a2 * b1
    if det not in (1, -1):
        raise AssertionError("basis pair must be unimodular")
    mp = (alpha.m * b2 - b1 * alpha.n) * det
    np_ = (a1 * alpha.n - a2 * alpha.m) * det
    if mp >= 1 and np_ >= 0:
        return mp, np_
    return None


def _classify_full(alpha: GoldenInt):
    s = alpha.sign()
    if s < 0:
        raise ValueError("element must be nonnegative")
    if s == 0:
        return PartitionClass("zero"), None
    if alpha.m >= 1 and alpha.n >= 1:
        return PartitionClass("plus"), None
    limit = 2 * (abs(alpha.m) + abs(alpha.n)).bit_length() + 4
    for i in range(limit + 1):
        coords = _band_coordinates(alpha, i)
        if coords is not None:
            return PartitionClass("band", i), coords
    raise AssertionError("classification did not terminate within its bound")


def classify(alpha: GoldenInt) -> PartitionClass:
    """Stratify a nonnegative element: zero, plus, or a unique band."""
    return _classify_full(alpha)[0]


def canonical_quad(alpha: GoldenInt) -> Quad | None:
    """Smallest-size quad representing alpha; None for alpha = 0."""
    cls, coords = _classify_full(alpha)
    if cls.kind == "zero":
        return None
    if cls.kind == "plus":
        return Quad(0, alpha.m, alpha.n, 0)
    mp, np_ = coords
    return Quad(cls.band, mp, 0, np_)


def expand_quad(q: Quad) -> Quad:
    """Value-preserving move that increases size by exactly 1."""
    if q.a >= 2:
        return Quad(q.i, q.a - 1, q.b + 1, q.c + 1)
    return Quad(q.i + 1, q.b + 1, q.c + 1, 0)


def contract_quad(q: Quad) -> Quad:
    """Bidegree-preserving move that decreases size by exactly 1.

    Defined only when b >= 1; the represented value strictly decreases.
    """
    if q.b < 1:
        raise ValueError("contract_quad needs b >= 1")
    if q.a >= 2:
        return Quad(q.i, q.a - 1, q.b - 1, q.c + 1)
    if q.b >= 2:
        return Quad(q.i + 1, q.b - 1, q.c + 1, 0)
    return Quad(q.i + 2, q.c + 1, 0, 0)


def quads_for_value(alpha: GoldenInt, count: int) -> list[Quad]:
    """First `count` quads representing alpha, sizes increasing by 1 each."""
    q = canonical_quad(alpha)
    if q is None:
        return []
    out = [q]
    while len(out) < count:
        q = expand_quad(q)
        out.append(q)
    return out


def quads_with_bidegree(d1: int, d2: int) -> list[Quad]:
    """All quads of bidegree exactly (d1, d2), by decreasing size.

    Sizes run from d1+d2 down to the size of the final quad, which is the
    unique one with b = 0.  The first entry represents d1 + d2/gamma, the
    last |d1 - d2/gamma|.
    """
    if d1 < 0 or d2 < 0 or (d1 == 0 and d2 == 0):
        raise ValueError("bidegree must be nonzero and nonnegative")
    q = Quad(0, d1, d2, 0) if d1 > 0 else Quad(1, d2, 0, 0)
    out = [q]
    while q.b >= 1:
        q = contract_quad(q)
        out.append(q)
    return out


def maximal_quad_for_degree(alpha: GoldenInt, d: int) -> Quad | None:
    """The unique quad for alpha of largest degree <= d (None for alpha=0)."""
    if alpha.degree > d:
        raise ValueError("element degree exceeds the bound")
    q = canonical_quad(alpha)
    if q is None:
        return None
    while True:
        nxt = expand_quad(q)
        if nxt.degree > d:
            return q
        q = nxt


def max_size_for_degree(alpha: GoldenInt, d: int) -> int:
    """Largest representation size of alpha within degree bound d."""
    q = maximal_quad_for_degree(alpha, d)
    return 0 if q is None else q.size


def maximal_quad_for_bidegree(alpha: GoldenInt, d1: int, d2: int) -> Quad | None:
    bound = BiDegree(d1, d2)
    if not alpha.bidegree <= bound:
        raise ValueError("element bidegree exceeds the bound")
    q = canonical_quad(alpha)
    if q is None:
        return None
    while True:
        nxt = expand_quad(q)
        if not nxt.bidegree <= bound:
            return q
        q = nxt


def max_size_for_bidegree(alpha: GoldenInt, d1: int, d2: int) -> int:
    q = maximal_quad_for_bidegree(alpha, d1, d2)
    return 0 if q is None else q.size


def elements_up_to_degree(d: int) -> list[GoldenInt]:
    """All nonnegative elements with |m| + |n| <= d, sorted by (m, n)."""
    out = []
    for m in range(-d, d + 1):
        rest = d - abs(m)
        for n in range(-rest, rest + 1):
            a = GoldenInt(m, n)
            if a.sign() >= 0:
                out.append(a)
    return out


def elements_up_to_bidegree(d1: int, d2: int) -> list[GoldenInt]:
    """All nonnegative elements with |m| <= d1, |n| <= d2, sorted by (m, n)."""
    out = []
    for m in range(-d1, d1 + 1):
        for n in range(-d2, d2 + 1):
            a = GoldenInt(m, n)
            if a.sign() >= 0:
                out.append(a)
    return out


def size_class_count(d: int, s: int) -> int:
    """How many elements of degree <= d have maximal size exactly s."""
    if s < 0 or s > d:
        return 0
    if s == d:
        return d + 1
    return 2 * s + 1


def size_class_count_bi(d1: int, d2: int, s: int) -> int:
    if s < 0 or s > d1 + d2:
        return 0
    return 2 * min(d1, d2, s, d1 + d2 - s) + 1


def size_class_profile(d: int) -> list[int]:
    return [size_class_count(d, s) for s in range(d + 1)]


def size_class_profile_bi(d1: int, d2: int) -> list[int]:
    return [size_class_count_bi(d1, d2, s) for s in range(d1 + d2 + 1)]


def brute_force_sizes(d: int) -> dict[GoldenInt, int]:
    """Maximal representation size per element, by full enumeration.

    Enumerates every non-decreasing index tuple with sum f(i_k) <= d.
    Only intended as an oracle; refuses d > BRUTE_FORCE_MAX_DEGREE.
    """
    if d > BRUTE_FORCE_MAX_DEGREE:
        raise BoundExceeded(f"brute force census limited to degree {BRUTE_FORCE_MAX_DEGREE}")
    best: dict[GoldenInt, int] = {GoldenInt.zero(): 0}

    def rec(min_i: int, remaining: int, value: GoldenInt, size: int):
        i = min_i
        while fib(i) <= remaining:
            v2 = value + golden_power(-i)
            s2 = size + 1
            if best.get(v2, -1) < s2:
                best[v2] = s2
            rec(i, remaining - fib(i), v2, s2)
            i += 1

    rec(0, d, GoldenInt.zero(), 0)
    return best


def brute_force_sizes_bi(d1: int, d2: int) -> dict[GoldenInt, int]:
    """Bidegree-bounded variant of brute_force_sizes."""
    if d1 + d2 > BRUTE_FORCE_MAX_BIDEGREE:
        raise BoundExceeded(
            f"brute force census limited to d1 + d2 <= {BRUTE_FORCE_MAX_BIDEGREE}"
        )
    best: dict[GoldenInt, int] = {GoldenInt.zero(): 0}

    def rec(min_i: int, rem1: int, rem2: int, value: GoldenInt, size: int):
        i = min_i
        while True:
            c1, c2 = fib(i - 2), fib(i - 1)
            if c1 > rem1 or c2 > rem2:
                if i >= 2:
                    return
                i += 1
                continue
            v2 = value + golden_power(-i)
            s2 = size + 1
            if best.get(v2, -1) < s2:
                best[v2] = s2
            rec(i, rem1 - c1, rem2 - c2, v2, s2)
            i += 1

    rec(0, d1, d2, GoldenInt.zero(), 0)
    return best


def sizes_to_profile(sizes: dict[GoldenInt, int]) -> list[int]:
    """Histogram of maximal sizes, indexed by size."""
    if not sizes:
        return []
    top = max(sizes.values())
    out = [0] * (top + 1)
    for s in sizes.values():
        out[s] += 1
    return out
