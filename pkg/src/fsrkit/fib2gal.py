"""Fibonacci to Galois: pair classification, conjugation, enumeration, selection.

Every same-stage equivalent Galois FSR arises by relabeling states with a
permutation that fixes the output partition (first half onto first half);
the new matrix satisfies L_g . pi = pi . L as column rewiring.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .expr import BoolExpr, GateCostModel, CMOS_90NM, gate_cost, substitute
from .fib import is_fibonacci
from .stp import (
    PermutationTransform,
    TransitionMatrix,
    coordinate_structure,
    restrict_support,
    synthesize_expr,
)


@dataclass(frozen=True)
class PairClasses:
    """(state, successor) index pairs grouped by the output transition."""

    s11: tuple[tuple[int, int], ...]
    s10: tuple[tuple[int, int], ...]
    s01: tuple[tuple[int, int], ...]
    s00: tuple[tuple[int, int], ...]


def classify_pairs(L: TransitionMatrix) -> PairClasses:
    if L.n < 2:
        raise ValueError("pair classification needs at least 2 registers")
    half = 1 << (L.n - 1)
    buckets: dict[tuple[int, int], list[tuple[int, int]]] = {
        (1, 1): [], (1, 0): [], (0, 1): [], (0, 0): []
    }
    for i in range(1, (1 << L.n) + 1):
        j = L.column(i)
        key = (1 if i <= half else 0, 1 if j <= half else 0)
        buckets[key].append((i, j))
    return PairClasses(
        s11=tuple(buckets[(1, 1)]),
        s10=tuple(buckets[(1, 0)]),
        s01=tuple(buckets[(0, 1)]),
        s00=tuple(buckets[(0, 0)]),
    )


def conjugate(L: TransitionMatrix, pi: PermutationTransform) -> TransitionMatrix:
    """Relabel states by pi: new column pi(i) is pi(old column i)."""
    if pi.n != L.n:
        raise ValueError("permutation and matrix sizes differ")
    if not pi.is_partition_preserving():
        raise ValueError("permutation does not preserve the output partition")
    cols = [0] * (1 << L.n)
    for i in range(1, (1 << L.n) + 1):
        cols[pi(i) - 1] = pi(L.column(i))
    return TransitionMatrix(L.n, tuple(cols))


@dataclass(frozen=True)
class GaloisCandidate:
    matrix: TransitionMatrix
    transform: PermutationTransform


def partition_permutations(n: int) -> Iterator[PermutationTransform]:
    """All partition-preserving permutations, (top half) x (bottom half) lexicographic."""
    half = 1 << (n - 1)
    for top in itertools.permutations(range(1, half + 1)):
        for bottom in itertools.permutations(range(half + 1, 2 * half + 1)):
            yield PermutationTransform(n, top + bottom)


def enumerate_equivalents(
    L_f: TransitionMatrix,
    budget: int | None = None,
    seed: int | None = None,
) -> Iterator[GaloisCandidate]:
    """Conjugates of L_f by partition-preserving permutations, skipping L_f itself.

    Exhaustive when the permutation count fits in the budget (or budget is
    None); otherwise a deterministic seeded sample of `budget` permutations.
    """
    if not is_fibonacci(L_f):
        raise ValueError("source matrix is not Fibonacci")
    half = 1 << (L_f.n - 1)
    total = math.factorial(half) ** 2
    if budget is None or total <= budget:
        for pi in partition_permutations(L_f.n):
            L_g = conjugate(L_f, pi)
            if L_g.cols != L_f.cols:
                yield GaloisCandidate(L_g, pi)
        return
    if seed is None:
        raise ValueError(f"{total} permutations exceed budget {budget}: a seed is required")
    rng = random.Random(seed)
    for _ in range(budget):
        top = list(range(1, half + 1))
        bottom = list(range(half + 1, 2 * half + 1))
        rng.shuffle(top)
        rng.shuffle(bottom)
        pi = PermutationTransform(L_f.n, tuple(top + bottom))
        L_g = conjugate(L_f, pi)
        if L_g.cols != L_f.cols:
            yield GaloisCandidate(L_g, pi)


@dataclass(frozen=True)
class CountAudit:
    """Exhaustive count of conjugates, reported two ways (see select docs)."""

    permutations: int
    distinct_matrices: int
    distinct_galois: int  # distinct conjugates different from the source


def count_distinct_equivalents(L_f: TransitionMatrix) -> CountAudit:
    """Audit the (2^(n-1))!^2 - 1 count by exhaustion; only feasible for n <= 3."""
    if L_f.n > 3:
        raise ValueError("exhaustive count is only supported for n <= 3")
    if not is_fibonacci(L_f):
        raise ValueError("source matrix is not Fibonacci")
    seen: set[tuple[int, ...]] = set()
    total = 0
    for pi in partition_permutations(L_f.n):
        total += 1
        seen.add(conjugate(L_f, pi).cols)
    return CountAudit(
        permutations=total,
        distinct_matrices=len(seen),
        distinct_galois=len(seen - {L_f.cols}),
    )


@dataclass(frozen=True)
class SelectedCandidate:
    candidate: GaloisCandidate
    updates: tuple[BoolExpr, ...]  # reduced, over original variable indices
    supports: tuple[tuple[int, ...], ...]
    support_sum: int
    area_um2: float
    delay_ps: float
    gate_count: int


def reduce_candidate(
    L_g: TransitionMatrix, model: GateCostModel = CMOS_90NM
) -> tuple[tuple[BoolExpr, ...], tuple[tuple[int, ...], ...], int, float, float, int]:
    """Per-coordinate support reduction and synthesis with cost totals."""
    updates = []
    supports = []
    area = delay = 0.0
    gates = 0
    for k in range(1, L_g.n + 1):
        support, reduced = restrict_support(coordinate_structure(L_g, k))
        e = synthesize_expr(reduced)
        # reduced expression speaks positions 1..|support|; map back
        e = substitute(e, {pos + 1: j for pos, j in enumerate(support)})
        cost = gate_cost(e, model)
        updates.append(e)
        supports.append(support)
        area += cost.area_um2
        delay += cost.delay_ps
        gates += cost.gate_count
    support_sum = sum(len(s) for s in supports)
    return tuple(updates), tuple(supports), support_sum, area, delay, gates


def select_minimal(
    candidates: Iterable[GaloisCandidate],
    model: GateCostModel = CMOS_90NM,
) -> SelectedCandidate:
    """Pick the candidate with the fewest dependent variables overall.

    Primary key is the summed support size over coordinates, then total gate
    area, then the column sequence (so parallel folds agree with sequential).
    """
    best: SelectedCandidate | None = None
    best_key: tuple | None = None
    for cand in candidates:
        updates, supports, support_sum, area, delay, gates = reduce_candidate(
            cand.matrix, model
        )
        key = (support_sum, area, cand.matrix.cols)
        if best_key is None or key < best_key:
            best_key = key
            best = SelectedCandidate(
                candidate=cand,
                updates=updates,
                supports=supports,
                support_sum=support_sum,
                area_um2=area,
                delay_ps=delay,
                gate_count=gates,
            )
    if best is None:
        raise ValueError("no candidates to select from")
    return best
