"""Galois to Fibonacci: simulation, output sequences, derived digraphs,
minimal-stage reconstruction, and the brute-force equivalence oracle."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .stp import TransitionMatrix, encode_state, output_bit


# ---------------------------------------------------------------------------
# Output sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OutputSeq:
    """Eventually periodic bit sequence in normalized form.

    The period is primitive and the preperiod is minimal: its last bit (if
    any) differs from the bit one period earlier.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be non-empty")
        bits = set(self.preperiod) | set(self.period)
        if bits - {0, 1}:
            raise ValueError("sequence entries must be bits")
        d = len(self.period)
        for k in range(1, d):
            if d % k == 0 and all(self.period[i] == self.period[i % k] for i in range(d)):
                raise ValueError("period is not primitive")
        if self.preperiod and self.preperiod[-1] == self.period[-1]:
            raise ValueError("preperiod is not minimal")

    def bits(self, length: int) -> tuple[int, ...]:
        """First `length` bits of the unrolled sequence."""
        out = list(self.preperiod[:length])
        p, d = len(self.preperiod), len(self.period)
        for t in range(len(out), length):
            out.append(self.period[(t - p) % d])
        return tuple(out)


def normalize_sequence(pre: Sequence[int], per: Sequence[int]) -> OutputSeq:
    """Reduce to primitive period and minimal preperiod."""
    if not per:
        raise ValueError("period must be non-empty")
    bits = list(pre) + list(per)
    p, q = len(pre), len(per)
    cycle = bits[p:]
    d = q
    for k in range(1, q):
        if q % k == 0 and all(cycle[i] == cycle[i % k] for i in range(q)):
            d = k
            break
    while p > 0 and bits[p - 1] == bits[p - 1 + d]:
        p -= 1
    return OutputSeq(tuple(bits[:p]), tuple(bits[p:p + d]))


_SEQ_RE = re.compile(r"^\s*pre=([01]*)\s+per=([01]+)\s*$")


def format_sequence(seq: OutputSeq) -> str:
    pre = "".join(map(str, seq.preperiod))
    per = "".join(map(str, seq.period))
    return f"pre={pre} per={per}"


def parse_sequence(text: str) -> OutputSeq:
    m = _SEQ_RE.match(text)
    if m is None:
        raise ValueError(f"not a sequence literal: {text!r}")
    return normalize_sequence(
        [int(c) for c in m.group(1)], [int(c) for c in m.group(2)]
    )


# ---------------------------------------------------------------------------
# Simulation
# ---------------------------------------------------------------------------

def simulate(L: TransitionMatrix, x0: int, steps: int) -> tuple[int, ...]:
    """Output bits from state x0; the bit at t=0 is the output of x0 itself."""
    if not 1 <= x0 <= (1 << L.n):
        raise ValueError(f"initial state {x0} out of range [1, {1 << L.n}]")
    out = []
    state = x0
    for _ in range(steps):
        out.append(output_bit(state, L.n))
        state = L.column(state)
    return tuple(out)


def output_sequence(L: TransitionMatrix, x0: int) -> OutputSeq:
    """Exact eventually-periodic decomposition via state-cycle detection."""
    seen: dict[int, int] = {}
    states = []
    state = x0
    while state not in seen:
        seen[state] = len(states)
        states.append(state)
        state = L.column(state)
    p = seen[state]
    bits = [output_bit(s, L.n) for s in states]
    return normalize_sequence(bits[:p], bits[p:])


def all_output_sequences(L: TransitionMatrix) -> dict[int, OutputSeq]:
    return {i: output_sequence(L, i) for i in range(1, (1 << L.n) + 1)}


# ---------------------------------------------------------------------------
# Derived digraph and realizability
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DerivedDigraph:
    """Windows of l consecutive output bits, with consecutive-window edges."""

    l: int
    successors: dict[int, frozenset[int]] = field(hash=False)

    @property
    def nodes(self) -> frozenset[int]:
        out = set(self.successors)
        for targets in self.successors.values():
            out |= targets
        return frozenset(out)


def derived_digraph(seqs: Iterable[OutputSeq], l: int) -> DerivedDigraph:
    """Unroll each sequence one full period beyond window repetition."""
    if l < 1:
        raise ValueError("window length must be >= 1")
    succ: dict[int, set[int]] = {}
    for seq in seqs:
        p, d = len(seq.preperiod), len(seq.period)
        horizon = p + d  # windows repeat from t=p on, with period d
        bits = seq.bits(horizon + l)
        windows = [
            encode_state(bits[t:t + l]) for t in range(horizon + 1)
        ]
        for t in range(horizon):
            succ.setdefault(windows[t], set()).add(windows[t + 1])
    return DerivedDigraph(l, {w: frozenset(s) for w, s in succ.items()})


def realizable(G: DerivedDigraph) -> bool:
    """Fibonacci-realizability: every node has exactly one successor."""
    return all(len(s) == 1 for s in G.successors.values())


# ---------------------------------------------------------------------------
# Minimal-stage Fibonacci reconstruction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartialTransition:
    """Column sequence with free entries (None) still to satisfy the shift law."""

    n: int
    cols: tuple[int | None, ...]

    def __post_init__(self):
        size = 1 << self.n
        if len(self.cols) != size:
            raise ValueError(f"expected {size} columns, got {len(self.cols)}")
        for c in self.cols:
            if c is not None and not 1 <= c <= size:
                raise ValueError(f"column value {c} out of range")


def _free_choices(j: int, l: int) -> tuple[int, int]:
    # legal values for column j under the shift law
    half = 1 << (l - 1)
    j0 = (j - 1) % half
    return (2 * j0 + 1, 2 * j0 + 2)


@dataclass(frozen=True)
class MinStageResult:
    l: int
    partial: PartialTransition
    window_map: tuple[int, ...]  # Galois state index -> window index over 2^l
    completions: tuple[TransitionMatrix, ...]
    free_columns: tuple[int, ...]
    total_completions: int
    sequences: tuple[OutputSeq, ...]


def min_stage_fibonacci(L_g: TransitionMatrix, max_free: int = 20) -> MinStageResult:
    """Smallest window length whose derived digraph is deterministic,
    plus the partial Fibonacci matrix and all its shift-law completions.

    Completions are enumerated exhaustively while the free-column count is
    at most max_free; beyond that only the lexicographically least
    completion is returned alongside the total count.
    """
    n = L_g.n
    seqs = sorted(
        set(all_output_sequences(L_g).values()),
        key=lambda s: (s.preperiod, s.period),
    )
    r = max(len(s.period) for s in seqs)
    l = max(1, (r - 1).bit_length())  # ceil(log2(r)), at least 1
    bound = max(len(s.preperiod) + len(s.period) for s in seqs)
    while True:
        G = derived_digraph(seqs, l)
        if realizable(G):
            break
        l += 1
        if l > bound + 1:  # at this length windows are distinct per sequence
            raise AssertionError("window search failed to terminate")

    size = 1 << l
    cols: list[int | None] = [None] * size
    for w, targets in G.successors.items():
        (t,) = tuple(targets)
        cols[w - 1] = t
    partial = PartialTransition(l, tuple(cols))

    window_map = tuple(
        encode_state(simulate(L_g, z, l)) for z in range(1, (1 << n) + 1)
    )

    free = tuple(j for j in range(1, size + 1) if cols[j - 1] is None)
    for j in range(1, size + 1):
        if cols[j - 1] is not None and cols[j - 1] not in _free_choices(j, l):
            raise AssertionError("fixed column violates the Fibonacci law")
    total = 1 << len(free)
    completions = []
    if len(free) <= max_free:
        for picks in itertools.product(*(_free_choices(j, l) for j in free)):
            filled = list(cols)
            for j, v in zip(free, picks):
                filled[j - 1] = v
            completions.append(TransitionMatrix(l, tuple(filled)))  # type: ignore[arg-type]
    else:
        filled = list(cols)
        for j in free:
            filled[j - 1] = _free_choices(j, l)[0]
        completions.append(TransitionMatrix(l, tuple(filled)))  # type: ignore[arg-type]

    return MinStageResult(
        l=l,
        partial=partial,
        window_map=window_map,
        completions=tuple(completions),
        free_columns=free,
        total_completions=total,
        sequences=tuple(seqs),
    )


# ---------------------------------------------------------------------------
# Realizing sequences directly as a Galois FSR
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaloisRealization:
    n: int
    matrix: TransitionMatrix
    initial_states: tuple[int, ...]  # aligned with the input sequences


def galois_from_sequences(seqs: Sequence[OutputSeq]) -> GaloisRealization:
    """A Galois FSR reproducing each sequence from a dedicated initial state.

    Each time step of each sequence gets a fresh state whose output half
    matches the bit; the cycle closes after preperiod+period steps and
    unassigned columns become self-loops.
    """
    if not seqs:
        raise ValueError("at least one sequence is required")
    lengths = [len(s.preperiod) + len(s.period) for s in seqs]
    ones = sum(b for s in seqs for b in s.bits(len(s.preperiod) + len(s.period)))
    zeros = sum(lengths) - ones
    n = 1
    # least n fitting the longest sequence; the per-half terms keep the
    # fresh-state assignment feasible
    while (1 << (n - 1)) < max(lengths) or (1 << (n - 1)) < ones or (1 << (n - 1)) < zeros:
        n += 1
    size = 1 << n
    half = size // 2
    next_one = 1
    next_zero = half + 1
    cols: list[int | None] = [None] * size
    initials = []
    for seq in seqs:
        p, d = len(seq.preperiod), len(seq.period)
        states = []
        for b in seq.bits(p + d):
            if b:
                state, next_one = next_one, next_one + 1
            else:
                state, next_zero = next_zero, next_zero + 1
            states.append(state)
        for t in range(len(states) - 1):
            cols[states[t] - 1] = states[t + 1]
        cols[states[-1] - 1] = states[p]
        initials.append(states[0])
    for k in range(size):
        if cols[k] is None:
            cols[k] = k + 1
    return GaloisRealization(
        n, TransitionMatrix(n, tuple(cols)), tuple(initials)  # type: ignore[arg-type]
    )


# ---------------------------------------------------------------------------
# Equivalence oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceResult:
    equal: bool
    forward: dict[int, int | None] = field(hash=False)  # A state -> matching B state
    backward: dict[int, int | None] = field(hash=False)

    def __bool__(self) -> bool:
        return self.equal


def equivalent(A: TransitionMatrix, B: TransitionMatrix) -> EquivalenceResult:
    """Set equality of normalized output sequences over all initial states."""
    seq_a = all_output_sequences(A)
    seq_b = all_output_sequences(B)
    by_seq_b: dict[OutputSeq, int] = {}
    for j in sorted(seq_b):
        by_seq_b.setdefault(seq_b[j], j)
    by_seq_a: dict[OutputSeq, int] = {}
    for i in sorted(seq_a):
        by_seq_a.setdefault(seq_a[i], i)
    forward = {i: by_seq_b.get(s) for i, s in seq_a.items()}
    backward = {j: by_seq_a.get(s) for j, s in seq_b.items()}
    equal = set(seq_a.values()) == set(seq_b.values())
    return EquivalenceResult(equal, forward, backward)
