"""Fibonacci-specific transition-matrix law: construction, recognition, inversion.

For a shift-with-feedback system the transition matrix is forced by the
feedback's structure matrix: column j goes to 2j-2+i_j on the first half
and column 2^(n-1)+j to 2j-2+i_(2^(n-1)+j) on the second.
"""

from __future__ import annotations

from .stp import StructureMatrix, TransitionMatrix


def fib_transition(M_f: StructureMatrix) -> TransitionMatrix:
    """Transition matrix of the Fibonacci FSR with feedback structure M_f."""
    n = M_f.n
    half = 1 << (n - 1)
    cols = [0] * (1 << n)
    for j in range(1, half + 1):
        cols[j - 1] = 2 * j - 2 + M_f.rows[j - 1]
        cols[half + j - 1] = 2 * j - 2 + M_f.rows[half + j - 1]
    return TransitionMatrix(n, tuple(cols))


def is_fibonacci(L: TransitionMatrix) -> bool:
    """True iff every column obeys the shift law (column j in {2j-1, 2j})."""
    half = 1 << (L.n - 1)
    for j in range(1, half + 1):
        lo, hi = 2 * j - 1, 2 * j
        if L.cols[j - 1] not in (lo, hi):
            return False
        if L.cols[half + j - 1] not in (lo, hi):
            return False
    return True


def feedback_of(L: TransitionMatrix) -> StructureMatrix:
    """Recover the feedback structure matrix; rejects non-Fibonacci input."""
    if not is_fibonacci(L):
        raise ValueError("transition matrix does not satisfy the Fibonacci law")
    half = 1 << (L.n - 1)
    rows = [0] * (1 << L.n)
    for j in range(1, half + 1):
        rows[j - 1] = L.cols[j - 1] - 2 * j + 2
        rows[half + j - 1] = L.cols[half + j - 1] - 2 * j + 2
    return StructureMatrix(L.n, tuple(rows))
