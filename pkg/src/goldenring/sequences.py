"""Integer triple sequences with golden-exponent growth.

A seed is a pair of symmetric unimodular triples x_1, x_2 together with a
transition matrix M (det 1, neither symmetric nor skew-symmetric) such
that x_2*M*x_1 is again symmetric.  The window

    x_{k+2} = x_{k+1} * M_{k+1} * x_k,   M_{k+1} = M (k odd), transpose(M) (k even)

then consists of symmetric unimodular triples whose first entries grow
doubly exponentially with golden-ratio exponent.  The ratios
x_{k,1}/x_{k,0} converge to a real number xi, and

    theta = a11 + (a12 + a21)*xi + a22*xi**2

governs the multiplicative growth.  Both are produced as certified
rational enclosures, never as floats.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import VerificationError
from .intervals import RationalInterval

__all__ = [
    "SymTriple",
    "TransitionMatrix",
    "Seed",
    "TripleSystem",
    "symmetry_defect",
    "find_seeds",
    "generate_system",
    "ratio_limit_enclosure",
    "growth_constant_enclosure",
    "verify_system",
    "VerificationReport",
    "germ_window",
    "exact_ratios",
]

DEFAULT_WINDOW = 22


def _allow_decimal_digits(values) -> None:
    """Raise the interpreter int->str limit to cover these integers.

    Window entries reach thousands of digits; serializing them as decimal
    strings trips the conversion guard on current interpreters unless the
    limit is lifted first.
    """
    get = getattr(sys, "get_int_max_str_digits", None)
    if get is None:
        return
    bits = max((v.bit_length() for v in values), default=0)
    need = bits // 3 + 8
    current = get()
    if current != 0 and current < need:
        sys.set_int_max_str_digits(need)


@dataclass(frozen=True, slots=True)
class SymTriple:
    """Symmetric integer 2x2 matrix [[x0, x1], [x1, x2]] stored as a triple."""

    x0: int
    x1: int
    x2: int

    def det(self) -> int:
        return self.x0 * self.x2 - self.x1 * self.x1

    def coord(self, j: int) -> int:
        return (self.x0, self.x1, self.x2)[j]

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x0, self.x1, self.x2)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.x0, self.x1), (self.x1, self.x2))


@dataclass(frozen=True, slots=True)
class TransitionMatrix:
    a11: int
    a12: int
    a21: int
    a22: int

    def __post_init__(self):
        if self.det() != 1:
            raise ValueError("transition matrix must have determinant 1")
        if self.a12 == self.a21:
            raise ValueError("transition matrix must not be symmetric")
        if self.a11 == 0 and self.a22 == 0 and self.a12 == -self.a21:
            raise ValueError("transition matrix must not be skew-symmetric")

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def transpose(self) -> "TransitionMatrix":
        return TransitionMatrix(self.a11, self.a21, self.a12, self.a22)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a11, self.a12), (self.a21, self.a22))

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a11, self.a12, self.a21, self.a22)


def _product_entries(left: SymTriple, mid_rows, right: SymTriple):
    """Entries (p00, p01, p10, p11) of left * mid * right."""
    (m00, m01), (m10, m11) = mid_rows
    l00, l01 = left.x0, left.x1
    l10, l11 = left.x1, left.x2
    t00 = l00 * m00 + l01 * m10
    t01 = l00 * m01 + l01 * m11
    t10 = l10 * m00 + l11 * m10
    t11 = l10 * m01 + l11 * m11
    r00, r01 = right.x0, right.x1
    r10, r11 = right.x1, right.x2
    return (
        t00 * r00 + t01 * r10,
        t00 * r01 + t01 * r11,
        t10 * r00 + t11 * r10,
        t10 * r01 + t11 * r11,
    )


def symmetry_defect(M: TransitionMatrix, x: SymTriple, y: SymTriple) -> int:
    """Integer that vanishes exactly when x*M*y is symmetric."""
    return (
        M.a11 * (y.x0 * x.x1 - y.x1 * x.x0)
        + M.a12 * (y.x1 * x.x1 - y.x2 * x.x0)
        + M.a21 * (y.x0 * x.x2 - y.x1 * x.x1)
        + M.a22 * (y.x1 * x.x2 - y.x2 * x.x1)
    )


@dataclass(frozen=True, slots=True)
class Seed:
    x1: SymTriple
    x2: SymTriple
    M: TransitionMatrix

    def __post_init__(self):
        if self.x1.det() != 1 or self.x2.det() != 1:
            raise ValueError("seed triples must have determinant 1")
        if symmetry_defect(self.M, self.x2, self.x1) != 0:
            raise ValueError("x2*M*x1 must be symmetric")

    def to_json(self) -> dict:
        return {
            "x1": list(self.x1.as_tuple()),
            "x2": list(self.x2.as_tuple()),
            "M": [list(r) for r in self.M.rows()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Seed":
        (r1, r2) = obj["M"]
        return cls(
            SymTriple(*(int(v) for v in obj["x1"])),
            SymTriple(*(int(v) for v in obj["x2"])),
            TransitionMatrix(int(r1[0]), int(r1[1]), int(r2[0]), int(r2[1])),
        )


def _step_matrix(seed: Seed, k: int) -> TransitionMatrix:
    # matrix applied when forming x_{k+2} from x_{k+1}, x_k
    return seed.M if k % 2 == 1 else seed.M.transpose()


def _extend(seed: Seed, window: list[SymTriple], upto: int):
    while len(window) < upto:
        k = len(window) - 1  # forming x_{k+2}, 1-based
        mid = _step_matrix(seed, k)
        p00, p01, p10, p11 = _product_entries(window[-1], mid.rows(), window[-2])
        if p01 != p10:
            raise VerificationError(f"symmetry broken at term {k + 2}")
        t = SymTriple(p00, p01, p11)
        if t.det() != 1:
            raise VerificationError(f"determinant != 1 at term {k + 2}")
        window.append(t)


@dataclass
class TripleSystem:
    """A generated window x_1 .. x_K plus certified enclosures."""

    seed: Seed
    window: tuple[SymTriple, ...]
    xi: RationalInterval | None = None
    theta: RationalInterval | None = None

    @property
    def K(self) -> int:
        return len(self.window)

    def x(self, k: int) -> SymTriple:
        if not 1 <= k <= self.K:
            raise ValueError(f"index {k} outside window 1..{self.K}")
        return self.window[k - 1]

    def germ(self, i: int, j: int, k: int) -> int:
        """Window entry x_{2k+i, j} of the offset-i coordinate-j germ."""
        return self.x(2 * k + i).coord(j)

    def germ_range(self, i: int) -> range:
        """The k for which the offset-i germ is inside the window."""
        lo = max(1, -((i - 1) // 2))
        while 2 * lo + i < 1:
            lo += 1
        hi = (self.K - i) // 2
        return range(lo, hi + 1)

    def to_json(self) -> dict:
        big = [v for t in self.window for v in t.as_tuple()]
        for iv in (self.xi, self.theta):
            if iv is not None:
                big += [iv.lo.numerator, iv.lo.denominator, iv.hi.numerator, iv.hi.denominator]
        _allow_decimal_digits(big)
        out = {
            "seed": self.seed.to_json(),
            "window": [[str(v) for v in t.as_tuple()] for t in self.window],
        }
        if self.xi is not None:
            out["xi"] = self.xi.to_json()
        if self.theta is not None:
            out["theta"] = self.theta.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "TripleSystem":
        get = getattr(sys, "get_int_max_str_digits", None)
        if get is not None:
            longest = max(
                (len(v) for t in obj.get("window", []) for v in t), default=0
            )
            for key in ("xi", "theta"):
                for s in obj.get(key, {}).values():
                    longest = max(longest, len(s))
            if get() != 0 and get() < longest + 8:
                sys.set_int_max_str_digits(longest + 8)
        seed = Seed.from_json(obj["seed"])
        window = tuple(SymTriple(*(int(v) for v in t)) for t in obj["window"])
        xi = RationalInterval.from_json(obj["xi"]) if "xi" in obj else None
        theta = RationalInterval.from_json(obj["theta"]) if "theta" in obj else None
        return cls(seed, window, xi, theta)


def _symmetric_unimodular(bound: int) -> list[SymTriple]:
    out = []
    for x0 in range(-bound, bound + 1):
        for x1 in range(-bound, bound + 1):
            for x2 in range(-bound, bound + 1):
                if x0 * x2 - x1 * x1 == 1:
                    out.append(SymTriple(x0, x1, x2))
    return out


def _transition_matrices(bound: int) -> list[TransitionMatrix]:
    out = []
    rng = range(-bound, bound + 1)
    for a11 in rng:
        for a12 in rng:
            for a21 in rng:
                if a12 == a21:
                    continue
                for a22 in rng:
                    if a11 * a22 - a12 * a21 != 1:
                        continue
                    if a11 == 0 and a22 == 0 and a12 == -a21:
                        continue
                    out.append(TransitionMatrix(a11, a12, a21, a22))
    return out


def find_seeds(entry_bound: int, count: int | None = None) -> list[Seed]:
    """Exhaustive seed search over entries bounded by entry_bound.

    A candidate qualifies when x_2*M*x_1 is symmetric and the generated
    |x_{k,0}| are strictly increasing for k <= 8.  Results come in a fixed
    lexicographic order, up to `count` of them (all when count is None).
    """
    if entry_bound < 1 or (count is not None and count < 1):
        raise ValueError("entry_bound and count must be positive")
    seeds: list[Seed] = []
    triples = _symmetric_unimodular(entry_bound)
    mats = _transition_matrices(entry_bound)
    for x1 in triples:
        for x2 in triples:
            for M in mats:
                if symmetry_defect(M, x2, x1) != 0:
                    continue
                seed = Seed(x1, x2, M)
                try:
                    window = [x1, x2]
                    _extend(seed, window, 8)
                except VerificationError:
                    continue
                firsts = [abs(t.x0) for t in window]
                if all(firsts[k] < firsts[k + 1] for k in range(7)):
                    seeds.append(seed)
                    if count is not None and len(seeds) == count:
                        return seeds
    return seeds


def generate_system(seed: Seed, K: int = DEFAULT_WINDOW) -> TripleSystem:
    """Generate the window x_1..x_K with exact structural checks.

    Symmetry and determinant 1 are verified at every step.  For K >= 6 the
    ratio-limit and growth-constant enclosures are attached.
    """
    if K < 3:
        raise ValueError("window length must be at least 3")
    window = [seed.x1, seed.x2]
    _extend(seed, window, K)
    system = TripleSystem(seed, tuple(window))
    if K >= 6:
        system.xi = ratio_limit_enclosure(system)
        system.theta = growth_constant_enclosure(system)
    return system


def ratio_limit_enclosure(system: TripleSystem, upto: int | None = None) -> RationalInterval:
    """Certified enclosure of lim x_{k,1}/x_{k,0} from the window tail.

    Centered at the last ratio with radius four times the last ratio gap.
    The safety factor is heuristic, so the enclosure is self-checked
    against the tail: the enclosures anchored at the last three window
    indices must be nested and the last three ratios must fall inside the
    widest of them.  Superexponential gap decay makes both easy to meet;
    a stalled or oscillating tail fails the check.
    """
    K = system.K if upto is None else upto
    if not 6 <= K <= system.K:
        raise ValueError("need a window of length at least 6")
    tail = [system.x(K - 3), system.x(K - 2), system.x(K - 1), system.x(K)]
    for t in tail:
        if t.x0 == 0:
            raise VerificationError("zero leading entry in window tail")
    r3, r2, r1, r0 = (Fraction(t.x1, t.x0) for t in tail)

    def anchored(center: Fraction, prev: Fraction) -> RationalInterval:
        radius = 4 * abs(center - prev)
        return RationalInterval(center - radius, center + radius)

    outer = anchored(r2, r3)
    middle = anchored(r1, r2)
    inner = anchored(r0, r1)
    ok = (
        outer.contains_interval(middle)
        and middle.contains_interval(inner)
        and all(outer.contains(r) for r in (r2, r1, r0))
    )
    if not ok:
        raise VerificationError("enclosure not certified; increase K")
    return inner


def growth_constant_enclosure(
    system: TripleSystem, xi: RationalInterval | None = None
) -> RationalInterval:
    """Enclosure of theta = a11 + (a12+a21)*xi + a22*xi**2."""
    M = system.seed.M
    if xi is None:
        xi = system.xi if system.xi is not None else ratio_limit_enclosure(system)
    return (M.a11 + (M.a12 + M.a21) * xi) + M.a22 * (xi * xi)


@dataclass
class VerificationReport:
    K: int
    dets_ok: bool
    recurrence_ok: bool
    e4_dets: list[int]
    e4_abs_constant: bool
    e1_exponents: list[tuple[int, float]]
    e2_first: list[tuple[int, Fraction]]
    e2_second: list[tuple[int, Fraction]]
    xi: RationalInterval
    theta: RationalInterval
    theta_excludes_zero: bool

    def summary(self) -> dict:
        _allow_decimal_digits(
            [
                v
                for iv in (self.xi, self.theta)
                for f in (iv.lo, iv.hi)
                for v in (f.numerator, f.denominator)
            ]
        )
        return {
            "K": self.K,
            "dets_ok": self.dets_ok,
            "recurrence_ok": self.recurrence_ok,
            "e4_dets": self.e4_dets,
            "e4_abs_constant": self.e4_abs_constant,
            "e1_exponents": [[k, round(e, 6)] for k, e in self.e1_exponents],
            "e2_first_max": float(max((v for _, v in self.e2_first), default=0)),
            "e2_second_max": float(max((v for _, v in self.e2_second), default=0)),
            "xi": self.xi.to_json(),
            "theta": self.theta.to_json(),
            "theta_excludes_zero": self.theta_excludes_zero,
        }


def _det3(a: SymTriple, b: SymTriple, c: SymTriple) -> int:
    (a0, a1, a2), (b0, b1, b2), (c0, c1, c2) = a.as_tuple(), b.as_tuple(), c.as_tuple()
    return (
        a0 * (b1 * c2 - b2 * c1)
        - a1 * (b0 * c2 - b2 * c0)
        + a2 * (b0 * c1 - b1 * c0)
    )


def verify_system(system: TripleSystem) -> VerificationReport:
    """Re-verify a window from scratch and measure the growth conditions.

    Exact failures (determinant, symmetry/recurrence, vanishing triple
    determinant, broken enclosure) raise VerificationError.  Growth-rate
    exponents and approximation products are reported for inspection.
    """
    K = system.K
    if K < 8:
        raise ValueError("need a window of length at least 8")
    seed = system.seed
    if system.window[0] != seed.x1 or system.window[1] != seed.x2:
        raise VerificationError("window does not start at the seed")
    for t in system.window:
        if t.det() != 1:
            raise VerificationError("window triple with determinant != 1")
    for k in range(1, K - 1):
        mid = _step_matrix(seed, k)
        p00, p01, p10, p11 = _product_entries(
            system.window[k], mid.rows(), system.window[k - 1]
        )
        if p01 != p10:
            raise VerificationError(f"product not symmetric at term {k + 2}")
        if (p00, p01, p11) != system.window[k + 1].as_tuple():
            raise VerificationError(f"recurrence fails at term {k + 2}")

    e4 = [
        _det3(system.window[k], system.window[k + 1], system.window[k + 2])
        for k in range(K - 2)
    ]
    if any(v == 0 for v in e4):
        raise VerificationError("vanishing triple determinant")
    e4_abs_constant = len({abs(v) for v in e4}) == 1

    e1 = []
    for k in range(1, K):
        a, b = abs(system.x(k).x0), abs(system.x(k + 1).x0)
        if a >= 2 and b >= 2:
            e1.append((k, math.log(b) / math.log(a)))

    xi = ratio_limit_enclosure(system)
    xi2 = xi * xi
    e2_first, e2_second = [], []
    for k in range(1, K):  # the last index anchors the enclosure; skip it
        t = system.x(k)
        ub1 = (xi * t.x0 - t.x1).abs_upper() * abs(t.x0)
        ub2 = (xi2 * t.x0 - t.x2).abs_upper() * abs(t.x0)
        e2_first.append((k, ub1))
        e2_second.append((k, ub2))

    theta = growth_constant_enclosure(system, xi)
    return VerificationReport(
        K=K,
        dets_ok=True,
        recurrence_ok=True,
        e4_dets=e4,
        e4_abs_constant=e4_abs_constant,
        e1_exponents=e1,
        e2_first=e2_first,
        e2_second=e2_second,
        xi=xi,
        theta=theta,
        theta_excludes_zero=theta.excludes_zero(),
    )


def germ_window(system: TripleSystem, i: int, j: int, ks) -> list[int]:
    """Values x_{2k+i, j} for k in ks; every index must be in the window."""
    if j not in (0, 1, 2):
        raise ValueError("coordinate must be 0, 1 or 2")
    return [system.germ(i, j, k) for k in ks]


def exact_ratios(num_window: list[int], den_window: list[int]) -> list[Fraction]:
    """Elementwise exact ratios of two equal-length integer windows."""
    if len(num_window) != len(den_window):
        raise ValueError("windows must have equal length")
    out = []
    for pos, (p, q) in enumerate(zip(num_window, den_window)):
        if q == 0:
            raise ValueError(f"zero denominator at position {pos}")
        out.append(Fraction(p, q))
    return out
