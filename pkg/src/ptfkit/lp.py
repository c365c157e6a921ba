"""Exact rational feasibility of linear inequality systems.

This is the decision engine behind every realizability question in the
package: systems of ``>=`` / ``<=`` constraints over sign-unrestricted
rational variables are answered Feasible (with an exact witness) or
Infeasible, deterministically for a fixed constraint order.  Strict
inequalities never reach this module; callers rescale them into closed
constraints first.

Arithmetic is exact throughout: rational inputs are cleared to integers
row by row, and the simplex kernels in :mod:`ptfkit._simplex` pivot on an
integer tableau.  Every witness is re-substituted into every original
constraint before being returned; a violation would be a kernel bug and
raises immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from . import _simplex

Rational = Fraction

GE = ">="
LE = "<="


@dataclass(frozen=True)
class LinearConstraint:
    """A single constraint ``coeffs . x  (>=|<=)  rhs``."""

    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def __post_init__(self) -> None:
        if self.relation not in (GE, LE):
            raise ValueError(f"relation must be {GE!r} or {LE!r}, got {self.relation!r}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        value = sum((c * v for c, v in zip(self.coeffs, x)), Fraction(0))
        return value >= self.rhs if self.relation == GE else value <= self.rhs


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple[Fraction, ...] | None


def feasible(constraints: Sequence[LinearConstraint], nvars: int) -> FeasibilityResult:
    """Decide feasibility of a constraint system over ``nvars`` free variables.

    An empty system is feasible with the zero witness.  When feasible, the
    returned witness satisfies every constraint exactly.
    """
    for c in constraints:
        if len(c.coeffs) != nvars:
            raise ValueError(
                f"constraint has {len(c.coeffs)} coefficients, system has {nvars} variables"
            )
    if not constraints:
        return FeasibilityResult(True, (Fraction(0),) * nvars)

    rows = []
    rhs = []
    for c in constraints:
        scale = lcm(c.rhs.denominator, *(v.denominator for v in c.coeffs))
        sign = -1 if c.relation == GE else 1
        rows.append([sign * int(v * scale) for v in c.coeffs])
        rhs.append(sign * int(c.rhs * scale))
    A = np.array(rows, dtype=object)
    b = np.array(rhs, dtype=object)
    ok, witness = _simplex.solve_free_le(A, b, nvars)
    if not ok:
        return FeasibilityResult(False, None)
    for c in constraints:
        if not c.satisfied_by(witness):
            raise AssertionError("simplex produced a witness violating a constraint")
    return FeasibilityResult(True, witness)


def feasible_le_int(A, b, nvars: int) -> FeasibilityResult:
    """Feasibility of integer ``A x <= b`` rows over free variables.

    Fast entry point for callers that already hold an integer system (all
    realizability encodings do).  Same contract as :func:`feasible`,
    including the exact witness re-check.
    """
    A = np.asarray(A)
    ok, witness = _simplex.solve_free_le(A, b, nvars)
    if not ok:
        return FeasibilityResult(False, None)
    for i in range(A.shape[0]):
        value = sum((Fraction(int(A[i, j])) * witness[j] for j in range(nvars)), Fraction(0))
        if value > int(b[i]):
            raise AssertionError("simplex produced a witness violating a constraint")
    return FeasibilityResult(True, witness)
