"""Exception hierarchy.

Everything raised on bad mathematical input derives from EquivarError so the
CLI can map domain failures to one exit code.  Malformed files raise
ParseError instead (a usage problem, not a domain one).
"""

from __future__ import annotations


class EquivarError(Exception):
    """Base class for domain errors."""


class DimensionMismatch(EquivarError):
    """Operands disagree on variable count or matrix dimensions."""


class NonInvertibleGenerator(EquivarError):
    """A supplied generator matrix is singular over the rationals."""


class ClosureExceedsCap(EquivarError):
    """Group closure grew past the element cap (group not finite, or cap too low)."""


class NotXiLinear(EquivarError):
    """Phase polynomial has terms whose dual-block degree is not exactly 1."""


class NotInvariant(EquivarError):
    """Object is not fixed by the group action.

    Carries the index of a violating generator and the exact difference
    (original object minus acted object).
    """

    def __init__(self, message: str, generator_index: int, difference) -> None:
        super().__init__(message)
        self.generator_index = generator_index
        self.difference = difference


class NoSolution(EquivarError):
    """An exact linear solve that must succeed did not; indicates a bug or
    an incomplete generating set."""


class DimensionMismatchWithMolien(EquivarError):
    """Computed fixed-space dimension disagrees with the Molien coefficient.

    Internal consistency failure: surfaced, never swallowed.
    """


class NonFiniteState(EquivarError):
    """Numeric integration produced an overflow or NaN."""

    def __init__(self, message: str, time: float) -> None:
        super().__init__(message)
        self.time = time


class ParseError(Exception):
    """Malformed input file or value (not a domain error)."""
