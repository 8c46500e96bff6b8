"""Module generators for equivariant polynomial vector fields.

A homogeneous degree-m vector field V corresponds to the phase polynomial
sum_i V_i(x) xi_i, homogeneous of degree m+1 and linear in the xi block.
That subspace is stable under the phase action, and its fixed points are
exactly the pairings of the equivariant fields.  So the degree-m equivariant
basis comes from Reynolds-averaging the monomials x^alpha xi_i under the
phase action and row-reducing, and module generation over the invariant ring
is again a degree-by-degree complement computation, checked against the
trace-weighted Molien series.
"""

from __future__ import annotations

from typing import Sequence

from .actions import (
    PSI,
    THETA,
    PolyVectorField,
    is_invariant,
    pairing,
    reynolds,
    unpairing,
)
from .errors import DimensionMismatchWithMolien, NoSolution, NotInvariant
from .groups import MatGroup
from .invariants import InvariantGens, invariant_basis, power_product, weighted_monomials
from .linalg import Echelon, rref, solve_free_zero
from .molien import MolienSeries, molien_equivariant
from .poly import Exponents, MultiPoly, monomials_of_degree, poly_to_vector, vector_to_poly


def xilinear_monomials(n: int, m: int) -> list[Exponents]:
    """Monomials x^alpha xi_i with |alpha| = m, as 2n-exponent tuples.

    Descending graded-lex order on the full tuple: the x block dominates,
    and xi_1 outranks xi_2 within one alpha.
    """
    out = []
    for alpha in monomials_of_degree(n, m):
        for i in range(n):
            out.append(alpha + tuple(int(j == i) for j in range(n)))
    return out


def field_to_vector(field: PolyVectorField, basis: Sequence[Exponents]):
    return poly_to_vector(pairing(field), basis)


def equivariant_basis(group: MatGroup, m: int) -> list[PolyVectorField]:
    """Basis of the homogeneous degree-m equivariant vector fields.

    Computed through the phase-polynomial route: average each x^alpha xi_i
    over the group, row-reduce, and read the fields back off the xi
    coefficients.  The direct route (averaging vector-field monomials under
    the pushforward action) must span the same subspace; tests hold the two
    against each other.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")
    n = group.n
    monos = xilinear_monomials(n, m)
    vectors = []
    for e in monos:
        averaged = reynolds(group, PSI, MultiPoly.monomial(e))
        # the phase action preserves bidegree, so support stays inside monos
        vectors.append(poly_to_vector(averaged, monos))
    rows, _ = rref(vectors)
    return [unpairing(vector_to_poly(r, monos, 2 * n)) for r in rows]


class EquivariantGens:
    """Module generators for the equivariant fields over the invariant ring."""

    __slots__ = ("group", "vgens", "degrees", "invariant_gens")

    def __init__(
        self,
        group: MatGroup,
        vgens: Sequence[PolyVectorField],
        degrees: Sequence[int],
        invariant_gens: InvariantGens,
    ) -> None:
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "vgens", tuple(vgens))
        object.__setattr__(self, "degrees", tuple(degrees))
        object.__setattr__(self, "invariant_gens", invariant_gens)

    def __setattr__(self, name, value):
        raise AttributeError("EquivariantGens is immutable")

    def __len__(self) -> int:
        return len(self.vgens)

    def __repr__(self) -> str:
        return f"EquivariantGens({len(self.vgens)} generators, degrees={list(self.degrees)})"


def equivariant_module_generators(
    group: MatGroup, inv: InvariantGens, degree_bound: int | None = None
) -> EquivariantGens:
    """Generators of the equivariant fields as a module over the invariants.

    Default bound |G| - 1: a xi-linear generator of the phase invariants has
    total degree at most |G| by Noether's bound, so the corresponding field
    degree is at most |G| - 1.  At each degree m the span of (invariant of
    degree m - m_W) x (generator W) is completed to the full fixed space;
    dimensions are checked against the trace-weighted Molien series.
    """
    if inv.group is not group and inv.group.elements != group.elements:
        raise ValueError("invariant generators were computed for a different group")
    bound = group.order - 1 if degree_bound is None else degree_bound
    if bound < 0:
        raise ValueError("degree bound must be non-negative")
    series = molien_equivariant(group)
    vgens: list[PolyVectorField] = []
    degrees: list[int] = []
    for m in range(bound + 1):
        basis_m = equivariant_basis(group, m)
        expected = series.coefficient(m)
        if len(basis_m) != expected:
            raise DimensionMismatchWithMolien(
                f"degree {m}: equivariant space has dimension {len(basis_m)}, "
                f"Molien says {expected}"
            )
        if not basis_m:
            continue
        monos = xilinear_monomials(group.n, m)
        span = Echelon()
        for w, m_w in zip(vgens, degrees):
            for b in invariant_basis(group, m - m_w):
                span.add(field_to_vector(w.scale(b), monos))
        for cand in basis_m:
            if span.add(field_to_vector(cand, monos)):
                vgens.append(cand)
                degrees.append(m)
    result = EquivariantGens(group, vgens, degrees, inv)
    _check_module_span_matches_molien(result, series, bound)
    return result


def _check_module_span_matches_molien(
    eg: EquivariantGens, series: MolienSeries, bound: int
) -> None:
    group = eg.group
    for m in range(bound + 1):
        monos = xilinear_monomials(group.n, m)
        span = Echelon()
        for w, m_w in zip(eg.vgens, eg.degrees):
            if m_w > m:
                continue
            for b in invariant_basis(group, m - m_w):
                span.add(field_to_vector(w.scale(b), monos))
        expected = series.coefficient(m)
        if span.rank != expected:
            raise DimensionMismatchWithMolien(
                f"degree {m}: module span has dimension {span.rank}, Molien says {expected}"
            )


def express_equivariant(eg: EquivariantGens, field: PolyVectorField) -> list[MultiPoly]:
    """Coefficients writing an equivariant field over the module generators.

    Returns one polynomial f_a in the k invariant-generator variables per
    module generator, with sum_a f_a(p(x)) V_a(x) == field(x) exactly.
    Solved per homogeneous degree; columns are ordered by generator index,
    then descending graded-lex on the invariant exponents, and free
    coordinates are set to zero (same tie-break as scalar expression).
    """
    chk = is_invariant(eg.group, field, THETA)
    if not chk:
        raise NotInvariant("field is not equivariant", chk.generator_index, chk.difference)
    inv = eg.invariant_gens
    coeffs = [MultiPoly.zero(inv.k) for _ in eg.vgens]
    field_degrees = sorted({
        sum(e) for comp in field.comps for e, _ in comp.sorted_terms()
    })
    for m in field_degrees:
        target = field.homogeneous_part(m)
        if target.is_zero:
            continue
        monos = xilinear_monomials(eg.group.n, m)
        columns = []
        labels: list[tuple[int, Exponents]] = []
        for w_idx, (w, m_w) in enumerate(zip(eg.vgens, eg.degrees)):
            delta = m - m_w
            if delta < 0:
                continue
            for a in weighted_monomials(inv.degrees, delta):
                columns.append(field_to_vector(w.scale(power_product(inv.gens, a)), monos))
                labels.append((w_idx, a))
        if not columns:
            raise NoSolution(f"no module products exist at degree {m}")
        rows = [[col[r] for col in columns] for r in range(len(monos))]
        sol = solve_free_zero(rows, field_to_vector(target, monos))
        if sol is None:
            raise NoSolution(f"degree-{m} component is outside the module span")
        for (w_idx, a), c in zip(labels, sol):
            if c != 0:
                coeffs[w_idx] = coeffs[w_idx] + MultiPoly(inv.k, {a: c})
    return coeffs
