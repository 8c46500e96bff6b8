"""Generators, expression, and relations for rings of invariant polynomials.

The ring of G-invariant polynomials is computed degree by degree: average
every degree-d monomial over the group, row-reduce to a basis of the degree-d
fixed space, and keep whatever the products of already-found generators fail
to span.  Noether's bound (degree <= |G| in characteristic zero) makes the
loop finite; the Molien series supplies an independent dimension count that
every step is checked against.

Polynomials in the generators themselves ("P-polynomials") are ordinary
MultiPoly values in k variables, where variable i stands for generator i and
carries its weighted degree.  The tie-break whenever a linear solve over
P-monomials is underdetermined: candidate monomials are ordered by descending
graded-lex on P-exponents and free coordinates are set to zero, so solutions
prefer lexicographically later products.  One order, used everywhere,
keeps outputs identical across runs and platforms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .actions import PHI_DAGGER, is_invariant, reynolds
from .errors import DimensionMismatchWithMolien, NoSolution, NotInvariant
from .groups import MatGroup
from .linalg import Echelon, kernel_basis, rref, solve_free_zero
from .molien import MolienSeries, molien
from .poly import (
    Exponents,
    MultiPoly,
    grlex_key,
    monomials_of_degree,
    poly_to_vector,
    vector_to_poly,
)


def weighted_monomials(weights: Sequence[int], total: int) -> list[Exponents]:
    """Exponent tuples a with sum a_i * weights_i == total, descending grlex."""
    if total < 0:
        return []

    def rec(i: int, remaining: int) -> list[Exponents]:
        if i == len(weights):
            return [()] if remaining == 0 else []
        out = []
        for e in range(remaining // weights[i], -1, -1):
            out.extend((e,) + rest for rest in rec(i + 1, remaining - e * weights[i]))
        return out

    return sorted(rec(0, total), key=grlex_key, reverse=True)


def power_product(polys: Sequence[MultiPoly], exps: Exponents) -> MultiPoly:
    """The product prod_i polys[i] ** exps[i]."""
    if not polys:
        raise ValueError("empty polynomial list")
    acc = MultiPoly.constant(polys[0].nvars, 1)
    for p, e in zip(polys, exps):
        if e:
            acc = acc * p**e
    return acc


class InvariantGens:
    """An ordered generating set for the invariant ring of a group.

    Generators are homogeneous, monic in graded-lex, and sorted by degree,
    then by descending leading monomial.  The Hilbert map sends a point x to
    the tuple of generator values; its image models the orbit space.
    """

    __slots__ = ("group", "gens", "degrees")

    def __init__(self, group: MatGroup, gens: Sequence[MultiPoly], degrees: Sequence[int]) -> None:
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "gens", tuple(gens))
        object.__setattr__(self, "degrees", tuple(degrees))
        if len(self.gens) != len(self.degrees):
            raise ValueError("generator and degree lists have different lengths")

    def __setattr__(self, name, value):
        raise AttributeError("InvariantGens is immutable")

    @classmethod
    def from_polys(cls, group: MatGroup, polys: Sequence[MultiPoly]) -> "InvariantGens":
        """Wrap explicit generators, validating invariance and homogeneity."""
        checked = []
        for p in polys:
            if p.is_zero or not p.is_homogeneous():
                raise ValueError(f"generator {p!r} is not homogeneous and nonzero")
            chk = is_invariant(group, p, PHI_DAGGER)
            if not chk:
                raise NotInvariant(
                    f"generator {p!r} is not invariant",
                    chk.generator_index,
                    chk.difference,
                )
            checked.append(p.monic())
        checked.sort(key=lambda p: (p.total_degree(), tuple(-e for e in p.leading_term()[0])))
        return cls(group, checked, [p.total_degree() for p in checked])

    @property
    def k(self) -> int:
        return len(self.gens)

    def hilbert_map(self, point: Sequence) -> tuple[Fraction, ...]:
        """sigma(x) = (p_1(x), ..., p_k(x)), exactly."""
        return tuple(p.evaluate(point) for p in self.gens)

    def substitute(self, f: MultiPoly) -> MultiPoly:
        """Expand f(p_1, ..., p_k) as a polynomial in the original variables."""
        if f.nvars != self.k:
            raise ValueError(f"expected a polynomial in {self.k} generator variables")
        return f.substitute(self.gens)

    def __repr__(self) -> str:
        inner = ", ".join(g.format() for g in self.gens)
        return f"InvariantGens([{inner}], degrees={list(self.degrees)})"


def hilbert_map_eval(gens: InvariantGens, point: Sequence) -> tuple[Fraction, ...]:
    return gens.hilbert_map(point)


def invariant_basis(group: MatGroup, degree: int) -> list[MultiPoly]:
    """Basis of the degree-d invariant polynomials.

    Every degree-d monomial is Reynolds-averaged and the results are
    row-reduced over the monomial basis (descending graded-lex), so each
    basis element is monic on its pivot monomial and the output is canonical.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree == 0:
        return [MultiPoly.constant(group.n, 1)]
    basis_monos = monomials_of_degree(group.n, degree)
    vectors = []
    for e in basis_monos:
        averaged = reynolds(group, PHI_DAGGER, MultiPoly.monomial(e))
        vectors.append(poly_to_vector(averaged, basis_monos))
    rows, _ = rref(vectors)
    return [vector_to_poly(r, basis_monos, group.n) for r in rows]


def invariant_ring_generators(
    group: MatGroup, degree_bound: int | None = None
) -> InvariantGens:
    """Generating set of the invariant ring up to the degree bound.

    The default bound |G| is Noether's: in characteristic zero the invariant
    ring of a finite group is generated in degrees at most the group order.
    At every degree the fixed-space dimension is compared with the Molien
    coefficient, and at the end the products of the returned generators must
    span each graded piece up to the bound; any mismatch raises, because it
    can only mean a bug.
    """
    bound = group.order if degree_bound is None else degree_bound
    if bound < 1:
        raise ValueError("degree bound must be at least 1")
    series = molien(group)
    gens: list[MultiPoly] = []
    degrees: list[int] = []
    for d in range(1, bound + 1):
        basis_d = invariant_basis(group, d)
        expected = series.coefficient(d)
        if len(basis_d) != expected:
            raise DimensionMismatchWithMolien(
                f"degree {d}: fixed space has dimension {len(basis_d)}, Molien says {expected}"
            )
        if not basis_d:
            continue
        basis_monos = monomials_of_degree(group.n, d)
        span = Echelon()
        for a in weighted_monomials(degrees, d):
            span.add(poly_to_vector(power_product(gens, a), basis_monos))
        for b in basis_d:
            if span.add(poly_to_vector(b, basis_monos)):
                gens.append(b)
                degrees.append(d)
    result = InvariantGens(group, gens, degrees)
    _check_products_match_molien(result, series, bound)
    return result


def _check_products_match_molien(inv: InvariantGens, series: MolienSeries, bound: int) -> None:
    for d in range(1, bound + 1):
        basis_monos = monomials_of_degree(inv.group.n, d)
        span = Echelon()
        for a in weighted_monomials(inv.degrees, d):
            span.add(poly_to_vector(power_product(inv.gens, a), basis_monos))
        expected = series.coefficient(d)
        if span.rank != expected:
            raise DimensionMismatchWithMolien(
                f"degree {d}: generator products span dimension {span.rank}, Molien says {expected}"
            )


def express(inv: InvariantGens, q: MultiPoly) -> MultiPoly:
    """Write an invariant polynomial as a polynomial in the generators.

    Returns f in k variables with f(p_1(x), ..., p_k(x)) == q(x) exactly.
    Solved degree by degree; when relations make the system underdetermined,
    the free P-monomial coordinates (descending graded-lex order) are set to
    zero.  Raises NotInvariant if q is not invariant, NoSolution if the
    generators cannot reach q (which means they are incomplete).
    """
    chk = is_invariant(inv.group, q, PHI_DAGGER)
    if not chk:
        raise NotInvariant("polynomial is not invariant", chk.generator_index, chk.difference)
    result = MultiPoly.zero(inv.k)
    for d, q_d in q.homogeneous_components().items():
        candidates = weighted_monomials(inv.degrees, d)
        if not candidates:
            raise NoSolution(f"no generator products exist at degree {d}")
        basis_monos = monomials_of_degree(inv.group.n, d)
        columns = [
            poly_to_vector(power_product(inv.gens, a), basis_monos) for a in candidates
        ]
        rows = [[col[r] for col in columns] for r in range(len(basis_monos))]
        rhs = poly_to_vector(q_d, basis_monos)
        sol = solve_free_zero(rows, rhs)
        if sol is None:
            raise NoSolution(f"degree-{d} component is outside the generator span")
        result = result + MultiPoly(inv.k, {a: c for a, c in zip(candidates, sol)})
    return result


class RelationSet:
    """Polynomial relations among invariant generators.

    Each relation r satisfies r(p_1, ..., p_k) == 0 identically; together
    they cut out the image of the Hilbert map at the computed degrees.
    """

    __slots__ = ("gens", "rels", "weighted_degrees")

    def __init__(
        self, gens: InvariantGens, rels: Sequence[MultiPoly], weighted_degrees: Sequence[int]
    ) -> None:
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "rels", tuple(rels))
        object.__setattr__(self, "weighted_degrees", tuple(weighted_degrees))

    def __setattr__(self, name, value):
        raise AttributeError("RelationSet is immutable")

    def __len__(self) -> int:
        return len(self.rels)

    def __iter__(self):
        return iter(self.rels)

    def __repr__(self) -> str:
        inner = ", ".join(r.format(names=[f"P{i + 1}" for i in range(self.gens.k)]) for r in self.rels)
        return f"RelationSet([{inner}])"


def relations(inv: InvariantGens, weighted_degree_bound: int) -> RelationSet:
    """Kernel of the substitution map, weighted degree by weighted degree.

    At each weighted degree d the kernel of (P-monomials of weight d) ->
    (degree-d polynomials in x) is computed exactly; relations that are
    P-polynomial multiples of lower-degree ones are dropped.  Relations are
    normalized monic in graded-lex on P-exponents.
    """
    if not inv.gens:
        return RelationSet(inv, [], [])
    if weighted_degree_bound < 2 * min(inv.degrees):
        raise ValueError(
            f"weighted degree bound {weighted_degree_bound} is below twice the minimal "
            f"generator degree {min(inv.degrees)}"
        )
    rels: list[MultiPoly] = []
    rel_degrees: list[int] = []
    for d in range(1, weighted_degree_bound + 1):
        candidates = weighted_monomials(inv.degrees, d)
        if len(candidates) < 2:
            continue
        basis_monos = monomials_of_degree(inv.group.n, d)
        columns = [
            poly_to_vector(power_product(inv.gens, a), basis_monos) for a in candidates
        ]
        rows = [[col[r] for col in columns] for r in range(len(basis_monos))]
        kernel = kernel_basis(rows, len(candidates))
        if not kernel:
            continue
        cand_index = {a: i for i, a in enumerate(candidates)}
        known = Echelon()
        for rel, rd in zip(rels, rel_degrees):
            for m in weighted_monomials(inv.degrees, d - rd):
                multiple = MultiPoly.monomial(m) * rel
                vec = [Fraction(0)] * len(candidates)
                for a, c in multiple.sorted_terms():
                    vec[cand_index[a]] = c
                known.add(vec)
        for v in kernel:
            if known.add(v):
                rel = MultiPoly(inv.k, {a: c for a, c in zip(candidates, v)}).monic()
                rels.append(rel)
                rel_degrees.append(d)
    return RelationSet(inv, rels, rel_degrees)
