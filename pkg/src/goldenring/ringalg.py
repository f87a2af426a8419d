"""Graded algebra attached to a symmetric triple system.

The coordinates of the germs at a point form six variables (X0, X1, X2
and their starred forward counterparts).  The relations that hold
identically on every system (both determinants equal to one and the
symmetry defect vanishing) generate the evaluation ideal.  This module
computes coordinate polynomials for shifted germs, graded Hilbert
dimensions of the quotient, and the distinguished monomial family
indexed by ring elements and split positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundExceeded, VerificationError
from .golden import GoldenInt
from .mpoly import (
    VARS_BASE,
    VARS_BI,
    VARS_TOTAL,
    MPoly,
    monomials_of_degree,
)
from .quads import (
    Quad,
    elements_up_to_bidegree,
    elements_up_to_degree,
    max_size_for_bidegree,
    max_size_for_degree,
    maximal_quad_for_bidegree,
    maximal_quad_for_degree,
)
from .rank import FractionEchelon, LinearSolver, rank_certified
from .sequences import TransitionMatrix, TripleSystem

__all__ = [
    "COORD_INDEX_BOUND",
    "HILBERT_TOTAL_BOUND",
    "HILBERT_BI_BOUND",
    "BASIS_TOTAL_BOUND",
    "BASIS_BI_BOUND",
    "coordinate_polys",
    "symmetry_defect_poly",
    "evaluation_ideal",
    "hilbert_total",
    "hilbert_bi",
    "hilbert_total_closed",
    "hilbert_bi_closed",
    "BasisMonomial",
    "basis_monomial",
    "basis_family",
    "BasisReport",
    "check_basis_rank",
    "ReducedElement",
    "quotient_coordinates",
    "LeadingForm",
    "leading_form",
]

COORD_INDEX_BOUND = 12
HILBERT_TOTAL_BOUND = 5
HILBERT_BI_BOUND = 4
BASIS_TOTAL_BOUND = 3
BASIS_BI_BOUND = 2


# ---------------------------------------------------------------------------
# coordinate polynomials


def _var(name: str) -> MPoly:
    return MPoly.variable(VARS_BASE, name)

def _base_triple(star: bool) -> tuple[MPoly, MPoly, MPoly]:
    suffix = "*" if star else ""
    return tuple(_var(f"X{j}{suffix}") for j in range(3))

def _triple_to_mat(t):
    return ((t[0], t[1]), (t[1], t[2]))

def _mat_mul(A, B):
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )

def _const_mat(rows):
    return tuple(
        tuple(MPoly.const(VARS_BASE, v) for v in row) for row in rows
    )

def _adjugate(A):
    return ((A[1][1], -A[0][1]), (-A[1][0], A[0][0]))

def _mat_to_triple(P) -> tuple[MPoly, MPoly, MPoly]:
    # products of symmetric matrices need not be symmetric entrywise;
    # the off-diagonal coordinate is the symmetrized entry
    mid = (P[0][1] + P[1][0]) * Fraction(1, 2)
    return (P[0][0], mid, P[1][1])


_COORD_CACHE: dict[tuple, tuple[MPoly, MPoly, MPoly]] = {}


def coordinate_polys(
    i: int, matrix: TransitionMatrix, bound: int = COORD_INDEX_BOUND
) -> tuple[MPoly, MPoly, MPoly]:
    """Polynomials in the six germ coordinates giving the shifted germ i.

    Index 0 is the germ itself, index -1 its starred forward neighbour;
    positive i walks backward and negative i forward along the sequence.
    The three polynomials are bi-homogeneous of bi-degree
    (|f(-i-2)|, |f(-i-1)|) in the plain and starred variable blocks.
    """
    if abs(i) > bound:
        raise BoundExceeded(f"coordinate index |{i}| exceeds bound {bound}")
    key = (matrix.entries(), i)
    cached = _COORD_CACHE.get(key)
    if cached is not None:
        return cached

    k0 = (matrix.entries(), 0)
    if k0 not in _COORD_CACHE:
        _COORD_CACHE[k0] = _base_triple(star=False)
        _COORD_CACHE[(matrix.entries(), -1)] = _base_triple(star=True)

    def step_mat(idx: int):
        rows = matrix.rows() if idx % 2 == 0 else matrix.transpose().rows()
        return _const_mat(rows)

    def get(j: int) -> tuple[MPoly, MPoly, MPoly]:
        kj = (matrix.entries(), j)
        got = _COORD_CACHE.get(kj)
        if got is not None:
            return got
        if j >= 1:
            left = _triple_to_mat(get(j - 1))
            right = _triple_to_mat(get(j - 2))
            prod = _mat_mul(_mat_mul(left, step_mat(j - 1)), right)
        else:
            nxt = _triple_to_mat(get(j + 1))
            after = _triple_to_mat(get(j + 2))
            prod = _mat_mul(_adjugate(_mat_mul(nxt, step_mat(j + 1))), after)
        out = _mat_to_triple(prod)
        _COORD_CACHE[kj] = out
        return out

    return get(i)


# ---------------------------------------------------------------------------
# evaluation ideals


def symmetry_defect_poly(matrix: TransitionMatrix) -> MPoly:
    """The bilinear invariant whose vanishing makes X* M X symmetric."""
    x0, x1, x2 = _base_triple(star=False)
    y0, y1, y2 = _base_triple(star=True)
    a11, a12, a21, a22 = matrix.entries()
    return (
        (y0 * x1 - y1 * x0) * a11
        + (y1 * x1 - y2 * x0) * a12
        + (y0 * x2 - y1 * x1) * a21
        + (y1 * x2 - y2 * x1) * a22
    )


@dataclass(frozen=True)
class IdealSpec:
    """Generators of an evaluation ideal in a fixed variable context."""

    kind: str
    names: tuple[str, ...]
    generators: tuple[MPoly, ...]
    # per-generator degree: ints for "total", (d1, d2) pairs for "bi"
    degrees: tuple


def evaluation_ideal(kind: str, matrix: TransitionMatrix) -> IdealSpec:
    """The relations ideal, homogenized as requested.

    kind "plain": det X - 1, det X* - 1 and the symmetry defect over the
    six coordinates.  kind "total": constants replaced by the square of
    one extra variable U, all generators degree 2.  kind "bi": separate
    homogenizers V and V* per block, generators of bi-degrees (2,0),
    (0,2) and (1,1).
    """
    x0, x1, x2 = _base_triple(star=False)
    y0, y1, y2 = _base_triple(star=True)
    det_x = x0 * x2 - x1 * x1
    det_y = y0 * y2 - y1 * y1
    phi = symmetry_defect_poly(matrix)
    if kind == "plain":
        one = MPoly.const(VARS_BASE, 1)
        return IdealSpec(kind, VARS_BASE, (det_x - one, det_y - one, phi), (2, 2, 2))
    if kind == "total":
        u = MPoly.variable(VARS_TOTAL, "U")
        lift = lambda p: p.map_to(VARS_TOTAL)
        gens = (lift(det_x) - u * u, lift(det_y) - u * u, lift(phi))
        return IdealSpec(kind, VARS_TOTAL, gens, (2, 2, 2))
    if kind == "bi":
        v = MPoly.variable(VARS_BI, "V")
        w = MPoly.variable(VARS_BI, "V*")
        lift = lambda p: p.map_to(VARS_BI)
        gens = (lift(det_x) - v * v, lift(det_y) - w * w, lift(phi))
        return IdealSpec(kind, VARS_BI, gens, ((2, 0), (0, 2), (1, 1)))
    raise ValueError(f"unknown ideal kind: {kind!r}")


# variable-block positions in the bi-graded context
_BI_BLOCK1 = (0, 1, 2, 3)
_BI_BLOCK2 = (4, 5, 6, 7)


def _monomials_total(d: int) -> list[tuple[int, ...]]:
    if d < 0:
        return []
    return monomials_of_degree(7, d)


def _monomials_bi(bidegree: tuple[int, int]) -> list[tuple[int, ...]]:
    d1, d2 = bidegree
    if d1 < 0 or d2 < 0:
        return []
    out = []
    for e1 in monomials_of_degree(4, d1):
        for e2 in monomials_of_degree(4, d2):
            out.append(e1 + e2)
    return out


def _shift_poly(poly: MPoly, mono: tuple[int, ...]) -> dict:
    return {
        tuple(a + b for a, b in zip(exp, mono)): coeff
        for exp, coeff in poly.terms.items()
    }


def _ideal_columns(ideal: IdealSpec, target, enumerate_monos, sub_degree):
    """Rows, integer ideal columns, and exact Koszul kernel vectors.

    enumerate_monos maps a degree to the monomial list; sub_degree maps
    (target, generator-degree[s]) to the shift degree.  Returns
    (row_index, columns, kernel_vectors, block_offsets, block_monos).
    """
    rows = enumerate_monos(target)
    row_index = {m: i for i, m in enumerate(rows)}
    gens = ideal.generators
    block_monos = [enumerate_monos(sub_degree(target, ideal.degrees[q])) for q in range(len(gens))]
    columns = []
    offsets = []
    for q, monos in enumerate(block_monos):
        offsets.append(len(columns))
        for mono in monos:
            shifted = _shift_poly(gens[q], mono)
            columns.append({row_index[e]: int(c) for e, c in shifted.items()})
    kernel = []
    mono_indexes = [{m: i for i, m in enumerate(monos)} for monos in block_monos]
    for p in range(len(gens)):
        for q in range(p + 1, len(gens)):
            pq_deg = sub_degree(
                sub_degree(target, ideal.degrees[p]), ideal.degrees[q]
            )
            mono_index_p = mono_indexes[p]
            mono_index_q = mono_indexes[q]
            for mono in enumerate_monos(pq_deg):
                vec: dict[int, int] = {}
                for e, c in _shift_poly(gens[q], mono).items():
                    vec[offsets[p] + mono_index_p[e]] = int(c)
                for e, c in _shift_poly(gens[p], mono).items():
                    vec[offsets[q] + mono_index_q[e]] = vec.get(
                        offsets[q] + mono_index_q[e], 0
                    ) - int(c)
                vec = {k: v for k, v in vec.items() if v}
                if vec:
                    kernel.append(vec)
    return row_index, columns, kernel, offsets, block_monos


def _sub_total(d, gdeg):
    return d - gdeg


def _sub_bi(d, gdeg):
    return (d[0] - gdeg[0], d[1] - gdeg[1])


def hilbert_total(d: int, matrix: TransitionMatrix, bound: int = HILBERT_TOTAL_BOUND) -> int:
    """Dimension in degree d of the totally graded quotient ring."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d > bound:
        raise BoundExceeded(f"degree {d} exceeds bound {bound}")
    ideal = evaluation_ideal("total", matrix)
    row_index, columns, kernel, _, _ = _ideal_columns(
        ideal, d, _monomials_total, _sub_total
    )
    rank, _ = rank_certified(columns, len(row_index), kernel)
    return len(row_index) - rank


def hilbert_bi(
    d1: int, d2: int, matrix: TransitionMatrix, bound: int = HILBERT_BI_BOUND
) -> int:
    """Dimension in bi-degree (d1, d2) of the bi-graded quotient ring."""
    if d1 < 0 or d2 < 0:
        raise ValueError("bi-degree must be nonnegative")
    if max(d1, d2) > bound:
        raise BoundExceeded(f"bi-degree ({d1}, {d2}) exceeds bound {bound}")
    ideal = evaluation_ideal("bi", matrix)
    row_index, columns, kernel, _, _ = _ideal_columns(
        ideal, (d1, d2), _monomials_bi, _sub_bi
    )
    rank, _ = rank_certified(columns, len(row_index), kernel)
    return len(row_index) - rank


def hilbert_total_closed(d: int) -> int:
    """Closed form (4d^3 + 6d^2 + 8d + 3) / 3 for the total grading."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    num = 4 * d**3 + 6 * d**2 + 8 * d + 3
    assert num % 3 == 0
    return num // 3

def hilbert_bi_closed(d1: int, d2: int) -> int:
    """Closed form (d1+1)^2 (d2+1)^2 - d1^2 d2^2 for the bi-grading."""
    if d1 < 0 or d2 < 0:
        raise ValueError("bi-degree must be nonnegative")
    return (d1 + 1) ** 2 * (d2 + 1) ** 2 - d1**2 * d2**2


# ---------------------------------------------------------------------------
# the distinguished monomial family


def _split_exponents(size: int, j: int) -> tuple[int, ...]:
    """Distribute j among `size` slots, each at most 2, greedily."""
    rem = j
    out = []
    for _ in range(size):
        take = min(2, rem)
        out.append(take)
        rem -= take
    assert rem == 0
    return tuple(out)


@dataclass(frozen=True)
class BasisMonomial:
    """One member of the monomial family spanning the graded quotient.

    The ring element alpha picks its maximal quad under the degree bound;
    the quad's indices i_1 <= ... <= i_s pick coordinate triples of the
    germs shifted by -i_k, and the split position j in 0..2s selects
    which coordinate each factor contributes.
    """

    alpha: GoldenInt
    j: int
    quad: Quad | None
    exponents: tuple[int, ...]
    poly: MPoly

    @property
    def size(self) -> int:
        return len(self.exponents)

    def germ_value(self, system: TripleSystem, k: int) -> int:
        """Value at the k-th germ of the system (an exact integer)."""
        if self.quad is None:
            return 1
        val = 1
        for idx, e in zip(self.quad.indices(), self.exponents):
            val *= system.x(2 * k - idx).coord(e)
        return val

    def block_degrees(self) -> tuple[int, int]:
        bidegree, homogeneous = self.poly.block_degrees((0, 1, 2), (3, 4, 5))
        if not homogeneous:
            raise VerificationError("family monomial is not bi-homogeneous")
        return bidegree


def _quad_for_bound(alpha: GoldenInt, bound):
    if isinstance(bound, tuple):
        return maximal_quad_for_bidegree(alpha, bound[0], bound[1])
    return maximal_quad_for_degree(alpha, bound)


def basis_monomial(
    alpha: GoldenInt, j: int, bound, matrix: TransitionMatrix
) -> BasisMonomial:
    """The family member M_{alpha,j} for a degree or bi-degree bound."""
    quad = _quad_for_bound(alpha, bound)
    size = quad.size if quad is not None else 0
    if not 0 <= j <= 2 * size:
        raise ValueError(f"split position {j} outside 0..{2 * size}")
    exps = _split_exponents(size, j)
    poly = MPoly.const(VARS_BASE, 1)
    if quad is not None:
        for idx, e in zip(quad.indices(), exps):
            poly = poly * coordinate_polys(-idx, matrix)[e]
    return BasisMonomial(alpha=alpha, j=j, quad=quad, exponents=exps, poly=poly)


def basis_family(bound, matrix: TransitionMatrix) -> list[BasisMonomial]:
    """All family members under a degree bound d or bi-degree bound (d1, d2).

    Ordered by the (m, n) coordinates of alpha, then by split position.
    """
    if isinstance(bound, tuple):
        elements = elements_up_to_bidegree(bound[0], bound[1])
        sizes = {a: max_size_for_bidegree(a, bound[0], bound[1]) for a in elements}
    else:
        elements = elements_up_to_degree(bound)
        sizes = {a: max_size_for_degree(a, bound) for a in elements}
    out = []
    for alpha in elements:
        for j in range(2 * sizes[alpha] + 1):
            out.append(basis_monomial(alpha, j, bound, matrix))
    return out


def _homogenized_family_columns(family, bound, row_index):
    """Family polynomials homogenized into the graded context, as columns."""
    cols = []
    for mono in family:
        if isinstance(bound, tuple):
            lifted = mono.poly.map_to(VARS_BI).homogenize_blocks(
                "V", bound[0], "V*", bound[1], _BI_BLOCK1, _BI_BLOCK2
            )
        else:
            lifted = mono.poly.map_to(VARS_TOTAL).homogenize_total("U", bound)
        cols.append({row_index[e]: c for e, c in lifted.terms.items()})
    return cols


@dataclass(frozen=True)
class BasisReport:
    """Outcome of the spanning check for the monomial family."""

    bound: object
    ambient_dim: int
    ideal_rank: int
    quotient_dim: int
    expected_dim: int
    cardinality: int
    combined_rank: int
    quotient_rank: int
    spans: bool
    # for a deficient family: coefficients of a vanishing combination,
    # as ((alpha m, alpha n, j), coefficient) pairs
    dependency: tuple | None

    def summary(self) -> dict:
        return {
            "bound": list(self.bound) if isinstance(self.bound, tuple) else self.bound,
            "ambient_dim": self.ambient_dim,
            "ideal_rank": self.ideal_rank,
            "quotient_dim": self.quotient_dim,
            "expected_dim": self.expected_dim,
            "cardinality": self.cardinality,
            "combined_rank": self.combined_rank,
            "quotient_rank": self.quotient_rank,
            "spans": self.spans,
        }


def check_basis_rank(bound, matrix: TransitionMatrix) -> BasisReport:
    """Verify the family is a basis of the graded quotient at the bound.

    Exact over Q throughout.  When the family fails to span, the report
    carries a dependency certificate: a nonzero rational combination of
    family members lying in the ideal.
    """
    if isinstance(bound, tuple):
        d1, d2 = bound
        if d1 < 0 or d2 < 0:
            raise ValueError("bi-degree must be nonnegative")
        if max(d1, d2) > BASIS_BI_BOUND:
            raise BoundExceeded(
                f"bi-degree ({d1}, {d2}) exceeds bound {BASIS_BI_BOUND}"
            )
        ideal = evaluation_ideal("bi", matrix)
        row_index, icols, _, _, _ = _ideal_columns(
            ideal, bound, _monomials_bi, _sub_bi
        )
        expected = hilbert_bi_closed(d1, d2)
    else:
        if bound < 0:
            raise ValueError("degree must be nonnegative")
        if bound > BASIS_TOTAL_BOUND:
            raise BoundExceeded(f"degree {bound} exceeds bound {BASIS_TOTAL_BOUND}")
        ideal = evaluation_ideal("total", matrix)
        row_index, icols, _, _, _ = _ideal_columns(
            ideal, bound, _monomials_total, _sub_total
        )
        expected = hilbert_total_closed(bound)

    family = basis_family(bound, matrix)
    fcols = _homogenized_family_columns(family, bound, row_index)

    ech = FractionEchelon()
    for col in icols:
        ech.insert(col)
    ideal_rank = ech.rank
    dependency = None
    for mono, col in zip(family, fcols):
        dep = ech.insert(col, tag=(mono.alpha.m, mono.alpha.n, mono.j))
        if dep is not None and dependency is None:
            dependency = tuple(sorted(dep.items()))
    combined = ech.rank
    nrows = len(row_index)
    quotient_dim = nrows - ideal_rank
    quotient_rank = combined - ideal_rank
    spans = (
        combined == nrows
        and quotient_dim == expected
        and len(family) == expected
        and quotient_rank == expected
    )
    return BasisReport(
        bound=bound,
        ambient_dim=nrows,
        ideal_rank=ideal_rank,
        quotient_dim=quotient_dim,
        expected_dim=expected,
        cardinality=len(family),
        combined_rank=combined,
        quotient_rank=quotient_rank,
        spans=spans,
        dependency=dependency,
    )


# ---------------------------------------------------------------------------
# reduction to family coordinates


@dataclass(frozen=True)
class ReducedElement:
    """Coordinates of a polynomial over the monomial family, mod the ideal."""

    bound: int
    coords: tuple  # ((alpha, j), Fraction) pairs, family order, nonzero only
    family: tuple

    def coefficient(self, alpha: GoldenInt, j: int) -> Fraction:
        for (a, jj), c in self.coords:
            if a == alpha and jj == j:
                return c
        return Fraction(0)

    def in_ideal(self) -> bool:
        return not self.coords

    def germ_value(self, system: TripleSystem, k: int) -> Fraction:
        """Exact value of the reduced combination at the k-th germ."""
        by_key = {(m.alpha, m.j): m for m in self.family}
        total = Fraction(0)
        for (alpha, j), c in self.coords:
            total += c * by_key[(alpha, j)].germ_value(system, k)
        return total


_SOLVER_CACHE: dict[tuple, tuple] = {}


def _reduction_solver(bound: int, matrix: TransitionMatrix):
    key = (matrix.entries(), bound)
    got = _SOLVER_CACHE.get(key)
    if got is not None:
        return got
    ideal = evaluation_ideal("total", matrix)
    row_index, icols, _, _, _ = _ideal_columns(
        ideal, bound, _monomials_total, _sub_total
    )
    family = basis_family(bound, matrix)
    fcols = _homogenized_family_columns(family, bound, row_index)
    solver = LinearSolver(icols + fcols, len(row_index))
    out = (solver, len(icols), family, row_index)
    _SOLVER_CACHE[key] = out
    return out


def quotient_coordinates(
    poly: MPoly, bound: int, matrix: TransitionMatrix
) -> ReducedElement:
    """Express a polynomial over the family, modulo the evaluation ideal.

    The polynomial lives in the six germ coordinates with total degree at
    most the bound; it is homogenized and solved exactly against the
    ideal-plus-family column span.  Because the family is a basis of the
    quotient, the family part of any solution is unique.
    """
    if poly.names != VARS_BASE:
        raise ValueError("polynomial must use the six germ coordinates")
    if bound > BASIS_TOTAL_BOUND:
        raise BoundExceeded(f"degree {bound} exceeds bound {BASIS_TOTAL_BOUND}")
    if poly.total_degree() > bound:
        raise ValueError("polynomial degree exceeds the reduction bound")
    solver, n_ideal, family, row_index = _reduction_solver(bound, matrix)
    lifted = poly.map_to(VARS_TOTAL).homogenize_total("U", bound)
    rhs = {row_index[e]: c for e, c in lifted.terms.items()}
    sol = solver.solve(rhs)
    if sol is None:
        raise VerificationError("reduction failed: family does not span")
    coords = []
    for pos, mono in enumerate(family):
        c = sol[n_ideal + pos]
        if c:
            coords.append(((mono.alpha, mono.j), c))
    return ReducedElement(bound=bound, coords=tuple(coords), family=tuple(family))


@dataclass(frozen=True)
class LeadingForm:
    """Largest ring element carrying a nonzero coordinate, with its row."""

    alpha: GoldenInt
    size: int
    coefficients: tuple  # length 2*size + 1, split positions 0..2s


def leading_form(poly: MPoly, bound: int, matrix: TransitionMatrix) -> LeadingForm:
    """Leading coefficient data of a polynomial modulo the ideal.

    The ring elements under the bound are totally ordered by real value;
    the leading form collects the coordinates at the largest element that
    appears.  Raises ValueError for elements of the ideal.
    """
    red = quotient_coordinates(poly, bound, matrix)
    if red.in_ideal():
        raise ValueError("element lies in the ideal; no leading form")
    lead = None
    for (alpha, _), _c in red.coords:
        if lead is None or alpha > lead:
            lead = alpha
    size = max_size_for_degree(lead, bound)
    coeffs = tuple(red.coefficient(lead, j) for j in range(2 * size + 1))
    return LeadingForm(alpha=lead, size=size, coefficients=coeffs)
