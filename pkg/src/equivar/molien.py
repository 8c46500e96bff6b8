"""Dimension-counting series for invariant and equivariant spaces.

For a finite matrix group G the series

    M(t)    = (1/|G|) sum_g 1 / det(I - t g^-1)
    M_eq(t) = (1/|G|) sum_g trace(g) / det(I - t g^-1)

have d-th coefficients equal to the dimensions of the degree-d invariant
polynomials and of the degree-d equivariant polynomial vector fields.  They
are the cross-checks for every fixed-space computation in this library.

Univariate polynomials over Fraction are plain coefficient lists, lowest
degree first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .groups import MatGroup
from .linalg import RatMatrix

UPoly = list[Fraction]


def _utrim(p: UPoly) -> UPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _uadd(a: UPoly, b: UPoly) -> UPoly:
    n = max(len(a), len(b))
    return _utrim([
        (a[i] if i < len(a) else Fraction(0)) + (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ])


def _umul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _utrim(out)


def _uscale(a: UPoly, c: Fraction) -> UPoly:
    return _utrim([x * c for x in a])


def _udivmod(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    if not b:
        raise ZeroDivisionError("univariate division by zero polynomial")
    rem = list(a)
    quot = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(rem) >= len(b) and _utrim(rem):
        shift = len(rem) - len(b)
        factor = rem[-1] * inv_lead
        quot[shift] = factor
        for i, cb in enumerate(b):
            rem[shift + i] -= factor * cb
        _utrim(rem)
    return _utrim(quot), rem


def _ugcd(a: UPoly, b: UPoly) -> UPoly:
    a, b = list(a), list(b)
    while b:
        a, b = b, _udivmod(a, b)[1]
    if a:
        a = _uscale(a, 1 / a[-1])  # monic
    return a


def _plus_scaled_identity(m: RatMatrix, c: Fraction) -> RatMatrix:
    n = m.rows
    return RatMatrix(n, n, (m[i, j] + (c if i == j else 0) for i in range(n) for j in range(n)))


def det_one_minus_t(m: RatMatrix) -> UPoly:
    """Coefficients of det(I - t M) via the Faddeev-LeVerrier recursion.

    With char(M) = lambda^n + c_1 lambda^(n-1) + ... + c_n, one has
    det(I - t M) = 1 + c_1 t + ... + c_n t^n.
    """
    n = m.rows
    coeffs = [Fraction(1)]
    aux = RatMatrix.identity(n)
    c = -(m @ aux).trace()
    coeffs.append(c)
    for k in range(2, n + 1):
        aux = _plus_scaled_identity(m @ aux, c)
        c = -(m @ aux).trace() / k
        coeffs.append(c)
    return _utrim(coeffs)


class MolienSeries:
    """A reduced rational function of t with memoized power-series expansion."""

    __slots__ = ("numer", "denom", "_coeffs")

    def __init__(self, numer: Sequence[Fraction], denom: Sequence[Fraction]) -> None:
        num = _utrim([Fraction(x) for x in numer])
        den = _utrim([Fraction(x) for x in denom])
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = _ugcd(num, den) if num else []
        if g and len(g) > 1:
            num = _udivmod(num, g)[0]
            den = _udivmod(den, g)[0]
        if den[0] == 0:
            raise ValueError("denominator vanishes at t=0; series expansion undefined")
        # normalize the constant term of the denominator to one
        scale = 1 / den[0]
        num = _uscale(num, scale)
        den = _uscale(den, scale)
        object.__setattr__(self, "numer", tuple(num))
        object.__setattr__(self, "denom", tuple(den))
        object.__setattr__(self, "_coeffs", [])

    def __setattr__(self, name, value):
        raise AttributeError("MolienSeries is immutable")

    def coefficient(self, d: int) -> int:
        """The t^d coefficient; an exact non-negative dimension count."""
        if d < 0:
            raise ValueError("degree must be non-negative")
        coeffs: list[Fraction] = self._coeffs
        while len(coeffs) <= d:
            k = len(coeffs)
            num_k = self.numer[k] if k < len(self.numer) else Fraction(0)
            acc = num_k
            for j in range(1, min(k, len(self.denom) - 1) + 1):
                acc -= self.denom[j] * coeffs[k - j]
            coeffs.append(acc)  # denom[0] == 1
        value = coeffs[d]
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"series coefficient {value} at degree {d} is not a dimension")
        return int(value)

    def coefficients(self, upto: int) -> list[int]:
        return [self.coefficient(d) for d in range(upto + 1)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MolienSeries):
            return NotImplemented
        return self.numer == other.numer and self.denom == other.denom

    def __repr__(self) -> str:
        def fmt(p: tuple) -> str:
            if not p:
                return "0"
            parts = []
            for i, c in enumerate(p):
                if c == 0:
                    continue
                if i == 0:
                    parts.append(str(c))
                elif i == 1:
                    parts.append(f"{c}*t" if c != 1 else "t")
                else:
                    parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
            return " + ".join(parts).replace("+ -", "- ")

        return f"MolienSeries(({fmt(self.numer)}) / ({fmt(self.denom)}))"


def _averaged_series(group: MatGroup, weights: Sequence[Fraction]) -> MolienSeries:
    """(1/|G|) sum_g weight_g / det(I - t g^-1) as one reduced fraction."""
    num: UPoly = []
    den: UPoly = [Fraction(1)]
    for g in range(group.order):
        inv = group.matrix(group.inverse_index(g))
        d_g = det_one_minus_t(inv)
        num = _uadd(_umul(num, d_g), _uscale(den, weights[g]))
        den = _umul(den, d_g)
    num = _uscale(num, Fraction(1, group.order))
    return MolienSeries(num, den)


def molien(group: MatGroup) -> MolienSeries:
    """Series whose t^d coefficient is dim of the degree-d invariants."""
    return _averaged_series(group, [Fraction(1)] * group.order)


def molien_equivariant(group: MatGroup) -> MolienSeries:
    """Series whose t^d coefficient is dim of the degree-d equivariant fields."""
    return _averaged_series(group, [group.matrix(g).trace() for g in range(group.order)])
