"""Integer-tableau simplex kernels behind the exact LP engine.

The tableau is stored as ``delta`` times the true rational tableau, where
``delta`` is the (always positive) determinant of the current basis.  A
one-step fraction-free pivot

    T'[i][j] = (T[p][q] * T[i][j] - T[i][q] * T[p][j]) // delta

keeps every entry an exact integer (the division is exact), so sign tests,
Bland's rule and the ratio test are all exact integer comparisons and the
feasibility answer carries no rounding error.

Two interchangeable implementations of the pivot loop exist:

* a numba ``@njit`` kernel on int64 arrays (the fast path), and
* a numpy implementation of the same loop, used both as the int64 fallback
  when numba is unavailable and, with an object-dtype tableau of Python
  ints, as the unbounded-precision escape hatch.

The int64 kernels bail out with an OVERFLOW status whenever any entry
passes 2**30 (products then stay below 2**61), and the caller retries on
an object-dtype tableau, which cannot overflow.  Set ``PTFKIT_BACKEND`` to
``numba`` or ``numpy`` to pick the fast path; the default is numba when it
imports.
"""

from __future__ import annotations

import os
from fractions import Fraction

import numpy as np

try:
    from numba import njit

    _HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAS_NUMBA = False

FEASIBLE = 0
INFEASIBLE = 1
OVERFLOW = 2
UNBOUNDED = 3

# Entries above this make the next pivot's intermediates unsafe for int64.
_INT64_GUARD = 1 << 30

_VALID_BACKENDS = ("numba", "numpy")


def _initial_backend() -> str:
    choice = os.environ.get("PTFKIT_BACKEND", "").lower()
    if choice in _VALID_BACKENDS:
        if choice == "numba" and not _HAS_NUMBA:
            return "numpy"
        return choice
    return "numba" if _HAS_NUMBA else "numpy"


_backend = _initial_backend()


def get_backend() -> str:
    """Name of the fast-path kernel currently in use."""
    return _backend


def set_backend(name: str) -> None:
    """Select the fast-path kernel ("numba" or "numpy")."""
    global _backend
    if name not in _VALID_BACKENDS:
        raise ValueError(f"backend must be one of {_VALID_BACKENDS}, got {name!r}")
    if name == "numba" and not _HAS_NUMBA:
        raise ValueError("numba backend requested but numba is not importable")
    _backend = name


def _pivot_loop_numpy(T, basis, guarded: bool):
    """Pivot to phase-1 optimality on a numpy tableau (int64 or object)."""
    m = T.shape[0] - 1
    last = T.shape[1] - 1
    delta = T.dtype.type(1) if T.dtype != object else 1
    while True:
        if guarded and np.abs(T).max() > _INT64_GUARD:
            return OVERFLOW, delta
        negative = np.nonzero(T[m, :last] < 0)[0]
        if negative.size == 0:
            break
        q = int(negative[0])
        candidates = np.nonzero(T[:m, q] > 0)[0]
        if candidates.size == 0:
            return UNBOUNDED, delta
        p = int(candidates[0])
        for i in candidates[1:]:
            i = int(i)
            lhs = T[i, last] * T[p, q]
            rhs = T[p, last] * T[i, q]
            if lhs < rhs or (lhs == rhs and basis[i] < basis[p]):
                p = i
        piv = T[p, q]
        row_p = T[p].copy()
        col_q = T[:, q].copy()
        T *= piv
        T -= np.outer(col_q, row_p)
        T //= delta
        T[p] = row_p
        delta = piv
        basis[p] = q
    if T[m, last] < 0:
        return INFEASIBLE, delta
    return FEASIBLE, delta


if _HAS_NUMBA:

    @njit(cache=True)
    def _pivot_loop_numba(T, basis):  # pragma: no cover - compiled
        m = T.shape[0] - 1
        ncols = T.shape[1]
        last = ncols - 1
        delta = np.int64(1)
        while True:
            biggest = np.int64(0)
            for i in range(m + 1):
                for j in range(ncols):
                    v = T[i, j]
                    if v < 0:
                        v = -v
                    if v > biggest:
                        biggest = v
            if biggest > _INT64_GUARD:
                return OVERFLOW, delta
            q = -1
            for j in range(last):
                if T[m, j] < 0:
                    q = j
                    break
            if q == -1:
                break
            p = -1
            for i in range(m):
                if T[i, q] > 0:
                    if p == -1:
                        p = i
                    else:
                        lhs = T[i, last] * T[p, q]
                        rhs = T[p, last] * T[i, q]
                        if lhs < rhs or (lhs == rhs and basis[i] < basis[p]):
                            p = i
            if p == -1:
                return UNBOUNDED, delta
            piv = T[p, q]
            for i in range(m + 1):
                if i == p:
                    continue
                t_iq = T[i, q]
                for j in range(ncols):
                    T[i, j] = (piv * T[i, j] - t_iq * T[p, j]) // delta
            delta = piv
            basis[p] = q
        if T[m, last] < 0:
            return INFEASIBLE, delta
        return FEASIBLE, delta


def _build_tableau(A, b, dtype):
    """Phase-1 tableau for ``A z <= b, z >= 0``.

    Rows with negative right-hand side are negated and given an artificial
    basic variable; the objective row prices out those artificials so the
    phase-1 objective (their sum) starts correctly reduced.
    """
    m, ns = A.shape
    neg = [i for i in range(m) if b[i] < 0]
    n_art = len(neg)
    ncols = ns + m + n_art + 1
    T = np.zeros((m + 1, ncols), dtype=dtype)
    basis = np.empty(m, dtype=np.int64)
    art_at = 0
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        for j in range(ns):
            T[i, j] = sign * int(A[i, j])
        T[i, ns + i] = sign
        T[i, ncols - 1] = sign * int(b[i])
        if sign < 0:
            T[i, ns + m + art_at] = 1
            basis[i] = ns + m + art_at
            art_at += 1
        else:
            basis[i] = ns + i
    for i in neg:
        T[m] -= T[i]
    for t in range(n_art):
        T[m, ns + m + t] += 1
    return T, basis


def solve_free_le(A, b, nvars: int):
    """Feasibility of ``A x <= b`` over free (sign-unrestricted) variables.

    ``A`` is an integer matrix with ``nvars`` columns, ``b`` an integer
    vector.  Returns ``(feasible, witness)`` where the witness is a tuple
    of exact Fractions.  Runs phase 1 of the two-phase simplex with
    Bland's rule; with no objective to optimize, phase 2 is vacuous.
    """
    A = np.asarray(A)
    b = np.asarray(b)
    m = A.shape[0]
    if m == 0:
        return True, (Fraction(0),) * nvars
    split = np.hstack([A, -A]).astype(object)

    small = max(int(abs(split).max(initial=0)), int(abs(b).max(initial=0))) <= _INT64_GUARD
    status = OVERFLOW
    if small:
        T, basis = _build_tableau(split, b, np.int64)
        if _backend == "numba" and _HAS_NUMBA:
            status, delta = _pivot_loop_numba(T, basis)
        else:
            status, delta = _pivot_loop_numpy(T, basis, guarded=True)
    if status == OVERFLOW:
        T, basis = _build_tableau(split, b, object)
        status, delta = _pivot_loop_numpy(T, basis, guarded=False)
    if status == UNBOUNDED:
        # Phase 1 minimizes a sum of nonnegative variables; it cannot be
        # unbounded, so this would be a kernel bug.
        raise AssertionError("phase-1 simplex reported unbounded")
    if status == INFEASIBLE:
        return False, None

    values = {}
    last = T.shape[1] - 1
    for i in range(m):
        values[int(basis[i])] = Fraction(int(T[i, last]), int(delta))
    witness = tuple(
        values.get(j, Fraction(0)) - values.get(nvars + j, Fraction(0)) for j in range(nvars)
    )
    return True, witness
