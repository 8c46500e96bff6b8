"""Pushing invariant dynamics down to the orbit space.

For an equivariant polynomial field X and invariant generators p_1..p_k, the
functions X(p_i) = sum_j X_j dp_i/dx_j are again invariant, so each can be
written as a polynomial Y_i in the generators.  The resulting k-dimensional
system Y is the reduced dynamics: sigma-images of X-trajectories solve it.

check_related verifies the defining identity for a given (X, Y) pair, and
integrate_pair witnesses it numerically by running classical fixed-step RK4
on both systems in double precision.  Exact arithmetic stops at that
boundary: coefficients are converted to floats only inside the integrator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .actions import THETA, PolyVectorField, is_invariant
from .errors import DimensionMismatch, NoSolution, NonFiniteState, NotInvariant
from .invariants import InvariantGens, express
from .poly import MultiPoly


class ReducedSystem:
    """Polynomial dynamics in the orbit-space coordinates P_1..P_k."""

    __slots__ = ("k", "comps", "source")

    def __init__(
        self,
        comps: Sequence[MultiPoly],
        source: tuple[PolyVectorField, InvariantGens] | None = None,
    ) -> None:
        comps = tuple(comps)
        k = len(comps)
        for c in comps:
            if c.nvars != k:
                raise DimensionMismatch(
                    f"component has {c.nvars} variables, expected {k}"
                )
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "comps", comps)
        object.__setattr__(self, "source", source)

    def __setattr__(self, name, value):
        raise AttributeError("ReducedSystem is immutable")

    def __getitem__(self, i: int) -> MultiPoly:
        return self.comps[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReducedSystem):
            return NotImplemented
        return self.comps == other.comps

    def __repr__(self) -> str:
        names = [f"P{i + 1}" for i in range(self.k)]
        inner = ", ".join(c.format(names) for c in self.comps)
        return f"ReducedSystem({inner})"


def directional_derivatives(field: PolyVectorField, inv: InvariantGens) -> list[MultiPoly]:
    """The polynomials X(p_i) = sum_j X_j dp_i/dx_j, one per generator."""
    n = field.n
    out = []
    for p in inv.gens:
        acc = MultiPoly.zero(n)
        for j in range(n):
            acc = acc + field[j] * p.diff(j)
        out.append(acc)
    return out


def reduce_field(field: PolyVectorField, inv: InvariantGens) -> ReducedSystem:
    """Reduce an equivariant field to the orbit space.

    Requires the field to be equivariant (raises NotInvariant otherwise).
    The identity comps_i(p_1(x),..,p_k(x)) == X(p_i)(x) is re-verified by
    substitution before returning.
    """
    if field.n != inv.group.n:
        raise DimensionMismatch("field dimension does not match the group")
    chk = is_invariant(inv.group, field, THETA)
    if not chk:
        raise NotInvariant("field is not equivariant", chk.generator_index, chk.difference)
    derivs = directional_derivatives(field, inv)
    comps = []
    for i, q in enumerate(derivs):
        f = express(inv, q)
        if inv.substitute(f) != q:
            raise NoSolution(f"internal: reduced component {i} fails the defining identity")
        comps.append(f)
    return ReducedSystem(comps, source=(field, inv))


class RelatednessCheck:
    """Truthy iff the pair is related through the Hilbert map; otherwise
    carries the failing component index and the exact difference."""

    __slots__ = ("related", "index", "difference")

    def __init__(self, related: bool, index: int | None = None, difference=None) -> None:
        self.related = related
        self.index = index
        self.difference = difference

    def __bool__(self) -> bool:
        return self.related

    def __repr__(self) -> str:
        if self.related:
            return "RelatednessCheck(related=True)"
        return f"RelatednessCheck(related=False, index={self.index}, difference={self.difference!r})"


def check_related(
    field: PolyVectorField,
    reduced: ReducedSystem | Sequence[MultiPoly],
    inv: InvariantGens,
) -> RelatednessCheck:
    """Verify sum_j X_j dp_i/dx_j == Y_i(p_1,..,p_k) for every i, exactly."""
    comps = reduced.comps if isinstance(reduced, ReducedSystem) else tuple(reduced)
    if len(comps) != inv.k:
        raise DimensionMismatch(f"reduced system has {len(comps)} components, expected {inv.k}")
    derivs = directional_derivatives(field, inv)
    for i, (lhs, y_i) in enumerate(zip(derivs, comps)):
        diff = lhs - inv.substitute(y_i)
        if not diff.is_zero:
            return RelatednessCheck(False, i, diff)
    return RelatednessCheck(True)


class TrajectoryReport:
    """Sampled trajectories of the full and reduced systems.

    max_defect is the sup-norm distance between the Hilbert-map image of the
    full trajectory and the reduced trajectory over the whole grid.
    """

    __slots__ = ("t_grid", "x_path", "p_path", "max_defect")

    def __init__(self, t_grid, x_path, p_path, max_defect: float) -> None:
        self.t_grid = t_grid
        self.x_path = x_path
        self.p_path = p_path
        self.max_defect = max_defect

    def __repr__(self) -> str:
        return (
            f"TrajectoryReport({len(self.t_grid)} samples, "
            f"max_defect={self.max_defect:.3e})"
        )


def _compile_polys(polys: Sequence[MultiPoly]):
    """Turn exact polynomials into a float numpy evaluator of a vector map."""
    compiled = []
    for p in polys:
        terms = p.sorted_terms()
        coeffs = np.array([float(c) for _, c in terms], dtype=float)
        exps = np.array([e for e, _ in terms], dtype=np.int64).reshape(len(terms), p.nvars)
        compiled.append((coeffs, exps))

    def evaluate(v: np.ndarray) -> np.ndarray:
        out = np.empty(len(compiled), dtype=float)
        for i, (coeffs, exps) in enumerate(compiled):
            if coeffs.size == 0:
                out[i] = 0.0
            else:
                out[i] = coeffs @ np.prod(v[np.newaxis, :] ** exps, axis=1)
        return out

    return evaluate


def _rk4_path(f, y0: np.ndarray, nsteps: int, h: float, label: str) -> np.ndarray:
    path = np.empty((nsteps + 1, y0.size), dtype=float)
    path[0] = y0
    y = y0
    # divergence is reported through NonFiniteState, not numpy warnings
    with np.errstate(over="ignore", invalid="ignore"):
        for i in range(nsteps):
            k1 = f(y)
            k2 = f(y + 0.5 * h * k1)
            k3 = f(y + 0.5 * h * k2)
            k4 = f(y + h * k3)
            y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            if not np.all(np.isfinite(y)):
                raise NonFiniteState(
                    f"{label} trajectory became non-finite at t={(i + 1) * h}", (i + 1) * h
                )
            path[i + 1] = y
    return path


def integrate_pair(
    field: PolyVectorField,
    reduced: ReducedSystem | Sequence[MultiPoly],
    inv: InvariantGens,
    x0: Sequence,
    t_end: float,
    step: float,
) -> TrajectoryReport:
    """Integrate dx/dt = X(x) and dp/dt = Y(p) from matched starts.

    Classical fixed-step RK4 in double precision for both systems; exact
    coefficients are converted to floats only at this boundary.  The reduced
    trajectory starts from the (float) Hilbert-map image of the float start,
    so a constant pair has defect exactly zero.  Raises NonFiniteState on
    overflow or NaN.
    """
    if step <= 0 or t_end <= 0:
        raise ValueError("step and t_end must be positive")
    comps = reduced.comps if isinstance(reduced, ReducedSystem) else tuple(reduced)
    if len(comps) != inv.k:
        raise DimensionMismatch(f"reduced system has {len(comps)} components, expected {inv.k}")
    if len(x0) != field.n:
        raise DimensionMismatch(f"x0 has length {len(x0)}, field dimension is {field.n}")
    x0_exact = [v if isinstance(v, Fraction) else Fraction(v) for v in x0]

    nsteps = int(round(t_end / step))
    t_grid = np.arange(nsteps + 1, dtype=float) * step
    f_x = _compile_polys(field.comps)
    f_p = _compile_polys(comps)
    sigma = _compile_polys(inv.gens)
    x0_float = np.array([float(v) for v in x0_exact])
    x_path = _rk4_path(f_x, x0_float, nsteps, step, "full")
    p_path = _rk4_path(f_p, sigma(x0_float), nsteps, step, "reduced")
    defect = 0.0
    for xi, pi in zip(x_path, p_path):
        defect = max(defect, float(np.max(np.abs(sigma(xi) - pi))))
    return TrajectoryReport(t_grid, x_path, p_path, defect)
