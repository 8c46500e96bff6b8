"""Sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero Fraction coefficients.
The variable count is fixed per polynomial: n for ordinary polynomials in
x_1..x_n, 2n for phase polynomials in x_1..x_n, xi_1..xi_n (x block first).

The canonical monomial order everywhere is graded lexicographic: compare
total degree, then the exponent tuple itself (earlier variables weigh more).
All iteration, serialization, and pivoting follow that order, which is what
makes every result of this library reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DimensionMismatch
from .linalg import RatMatrix

Exponents = tuple[int, ...]


def grlex_key(exps: Exponents) -> tuple[int, Exponents]:
    """Sort key realizing graded lexicographic order (ascending)."""
    return (sum(exps), exps)


def monomials_of_degree(nvars: int, degree: int) -> list[Exponents]:
    """All exponent tuples of the given total degree, in descending grlex order."""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    out = []
    for e0 in range(degree, -1, -1):
        out.extend((e0,) + rest for rest in monomials_of_degree(nvars - 1, degree - e0))
    return out


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


class MultiPoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, object] | Iterable = ()) -> None:
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, Fraction] = {}
        for exps, c in items:
            e = tuple(int(x) for x in exps)
            if len(e) != nvars:
                raise DimensionMismatch(f"exponent tuple {e} has length {len(e)}, expected {nvars}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = _coerce(c)
            if c == 0:
                continue
            c0 = acc.get(e)
            if c0 is None:
                acc[e] = c
            else:
                s = c0 + c
                if s == 0:
                    del acc[e]
                else:
                    acc[e] = s
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): c})

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self.sorted_terms())

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def leading_term(self) -> tuple[Exponents, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    # -- arithmetic ---------------------------------------------------------

    def _check_same_vars(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatch(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_vars(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.nvars, out)

    def __radd__(self, other) -> "MultiPoly":
        if other == 0:  # lets sum() start from 0
            return self
        return NotImplemented

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_vars(other)
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.nvars, out)

    def __rmul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def monic(self) -> "MultiPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if self.is_zero:
            return self
        _, c = self.leading_term()
        return self * (1 / c)

    # -- calculus and structure --------------------------------------------

    def diff(self, index: int) -> "MultiPoly":
        """Formal partial derivative with respect to variable `index`."""
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range for {self.nvars} variables")
        out: dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            k = e[index]
            if k == 0:
                continue
            e2 = e[:index] + (k - 1,) + e[index + 1 :]
            out[e2] = out.get(e2, Fraction(0)) + c * k
        return MultiPoly(self.nvars, out)

    def homogeneous_part(self, degree: int) -> "MultiPoly":
        """Sum of terms of total degree exactly `degree`."""
        if degree < 0:
            raise ValueError("degree must be non-negative")
        return MultiPoly(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def homogeneous_components(self) -> dict[int, "MultiPoly"]:
        """Nonzero homogeneous components keyed by degree, ascending."""
        by_deg: dict[int, dict[Exponents, Fraction]] = {}
        for e, c in self._terms.items():
            by_deg.setdefault(sum(e), {})[e] = c
        return {d: MultiPoly(self.nvars, t) for d, t in sorted(by_deg.items())}

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.nvars:
            raise DimensionMismatch(f"point length {len(point)} != {self.nvars} variables")
        vals = [_coerce(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
            total += term
        return total

    def substitute(self, values: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute a polynomial for each variable.

        All substituted polynomials must share a variable count m; the result
        lives in m variables.
        """
        if len(values) != self.nvars:
            raise DimensionMismatch(f"{len(values)} values for {self.nvars} variables")
        if self.nvars == 0:
            raise ValueError("cannot substitute into a polynomial with no variables")
        m = values[0].nvars
        if any(v.nvars != m for v in values):
            raise DimensionMismatch("substituted polynomials disagree on variable count")
        powers: dict[tuple[int, int], MultiPoly] = {}

        def pw(i: int, k: int) -> MultiPoly:
            got = powers.get((i, k))
            if got is None:
                got = values[i] ** k
                powers[(i, k)] = got
            return got

        acc = MultiPoly.zero(m)
        for e, c in self.sorted_terms():
            term = MultiPoly.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            acc = acc + term
        return acc

    def compose_linear(self, matrix: RatMatrix) -> "MultiPoly":
        """Return q with q(x) = p(M x).

        Maps homogeneous degree-d components to degree d.
        """
        if not matrix.is_square or matrix.rows != self.nvars:
            raise DimensionMismatch(
                f"matrix is {matrix.rows}x{matrix.cols}, polynomial has {self.nvars} variables"
            )
        n = self.nvars
        linear = [
            MultiPoly(n, {tuple(int(j == k) for k in range(n)): matrix[i, j] for j in range(n)})
            for i in range(n)
        ]
        return self.substitute(linear)

    # -- display ------------------------------------------------------------

    def format(self, names: Sequence[str] | None = None) -> str:
        if self.is_zero:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            factors = [
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            ]
            if not factors:
                body = str(abs(c))
            else:
                mag = abs(c)
                body = "*".join(([] if mag == 1 else [str(mag)]) + factors)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"MultiPoly({self.format()})"


def variables(nvars: int) -> tuple[MultiPoly, ...]:
    """Convenience: the n coordinate polynomials."""
    return tuple(MultiPoly.variable(nvars, i) for i in range(nvars))


def poly_to_vector(p: MultiPoly, basis: Sequence[Exponents]) -> list[Fraction]:
    """Coefficient vector of p over an explicit monomial basis.

    Raises if p has support outside the basis.
    """
    index = {e: i for i, e in enumerate(basis)}
    v = [Fraction(0)] * len(basis)
    for e, c in p._terms.items():
        if e not in index:
            raise ValueError(f"monomial {e} outside the given basis")
        v[index[e]] = c
    return v


def vector_to_poly(vec: Sequence[Fraction], basis: Sequence[Exponents], nvars: int) -> MultiPoly:
    return MultiPoly(nvars, {e: c for e, c in zip(basis, vec)})
