"""Command-line front end: parse FSR files, transform, verify, simulate.

Exit codes: 0 success (verify: equivalent), 1 verify mismatch, 2 any error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from . import expr as ex
from .fib import fib_transition, is_fibonacci
from .fib2gal import (
    GaloisCandidate,
    conjugate,
    enumerate_equivalents,
    reduce_candidate,
    select_minimal,
)
from .gal2fib import equivalent, min_stage_fibonacci, simulate
from .stp import (
    FsrSpec,
    PermutationTransform,
    TransitionMatrix,
    encode_state,
    format_delta,
    galois_transition,
    parse_delta,
    structure_matrix,
    transition_from_delta,
    transition_to_delta,
)


class FsrFileError(Exception):
    pass


@dataclass
class FsrFile:
    n: int
    kind: str  # "fibonacci" | "galois"
    functions: dict[int, ex.BoolExpr]
    matrices: dict[str, TransitionMatrix]

    def spec(self) -> FsrSpec:
        if self.kind == "fibonacci":
            return FsrSpec.fibonacci(self.n, self.functions[self.n])
        return FsrSpec.galois(self.n, [self.functions[k] for k in range(1, self.n + 1)])

    def transition(self) -> TransitionMatrix:
        return galois_transition(self.spec())


def parse_fsr_file(text: str) -> FsrFile:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FsrFileError("empty file")
    header = dict(
        item.split("=", 1) for item in lines[0].split() if "=" in item
    )
    if "n" not in header or "type" not in header:
        raise FsrFileError("header must be `n=<int> type=<fib|gal>`")
    try:
        n = int(header["n"])
    except ValueError:
        raise FsrFileError(f"bad register count {header['n']!r}") from None
    kind = {"fib": "fibonacci", "gal": "galois"}.get(header["type"])
    if kind is None or n < 1:
        raise FsrFileError("header must be `n=<int> type=<fib|gal>` with n >= 1")
    functions: dict[int, ex.BoolExpr] = {}
    matrices: dict[str, TransitionMatrix] = {}
    for ln in lines[1:]:
        if "=" not in ln:
            raise FsrFileError(f"unrecognized line: {ln!r}")
        name, rhs = (part.strip() for part in ln.split("=", 1))
        if name.startswith("f") and name[1:].isdigit():
            k = int(name[1:])
            if not 1 <= k <= n:
                raise FsrFileError(f"register {name} out of range for n={n}")
            if k in functions:
                raise FsrFileError(f"duplicate definition of {name}")
            functions[k] = ex.parse(rhs, n)
        elif rhs.startswith("d"):
            matrices[name] = transition_from_delta(rhs)
        else:
            raise FsrFileError(f"unrecognized line: {ln!r}")
    if kind == "fibonacci":
        if set(functions) != {n}:
            raise FsrFileError(f"Fibonacci files must define exactly f{n}")
    else:
        if set(functions) != set(range(1, n + 1)):
            missing = sorted(set(range(1, n + 1)) - set(functions))
            raise FsrFileError(f"missing update functions: {missing}")
    return FsrFile(n, kind, functions, matrices)


def load_fsr_file(path: str) -> FsrFile:
    with open(path) as fh:
        return parse_fsr_file(fh.read())


def load_matrix(path: str) -> TransitionMatrix:
    """A path holding either an FSR file or a bare delta-format matrix."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.strip()
    if stripped.startswith("d") and "[" in stripped:
        return transition_from_delta(stripped)
    return parse_fsr_file(text).transition()


def _emit_logic(n: int, updates) -> str:
    lines = [f"n={n} type=gal"]
    for k, e in enumerate(updates, start=1):
        lines.append(f"f{k} = {ex.render(e)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_to_matrix(args) -> int:
    fsr = load_fsr_file(args.input)
    print(transition_to_delta(fsr.transition()))
    return 0


def cmd_fib2gal(args) -> int:
    fsr = load_fsr_file(args.input)
    if fsr.kind != "fibonacci":
        raise FsrFileError("fib2gal needs a Fibonacci input file")
    L_f = fib_transition(structure_matrix(fsr.functions[fsr.n], fsr.n))

    if args.perm is not None:
        size, entries = parse_delta(args.perm)
        if size != 1 << fsr.n or any(e is None for e in entries):
            raise FsrFileError(f"permutation must be a complete d{1 << fsr.n}[...] sequence")
        pi = PermutationTransform(fsr.n, entries)  # type: ignore[arg-type]
        L_g = conjugate(L_f, pi)
        print(f"L_g = {transition_to_delta(L_g)}")
        print(f"T = {format_delta(size, pi.perm)}")
        if args.emit in ("logic", "all"):
            updates, _, _, _, _, _ = reduce_candidate(L_g)
            print(_emit_logic(fsr.n, updates))
        return 0

    budget = None if args.budget == "full" else int(args.budget)
    total = math.factorial(1 << (fsr.n - 1)) ** 2
    if budget == 0:
        print(f"# examined=0 emitted=0 total_permutations={total}")
        return 0
    candidates = enumerate_equivalents(L_f, budget=budget, seed=args.seed)

    if args.minimize:
        best = select_minimal(candidates)
        print(f"L_g = {transition_to_delta(best.candidate.matrix)}")
        size = 1 << fsr.n
        print(f"T = {format_delta(size, best.candidate.transform.perm)}")
        print(f"support_sum = {best.support_sum}")
        print(f"area_um2 = {best.area_um2:g}")
        print(f"delay_ps = {best.delay_ps:g}")
        print(f"gates = {best.gate_count}")
        if args.emit in ("logic", "all"):
            print(_emit_logic(fsr.n, best.updates))
        return 0

    examined = emitted = 0
    for cand in candidates:
        emitted += 1
        if args.emit in ("matrix", "all"):
            print(transition_to_delta(cand.matrix))
        if args.emit in ("logic", "all"):
            updates, _, _, _, _, _ = reduce_candidate(cand.matrix)
            print(_emit_logic(fsr.n, updates))
    examined = total if budget is None or total <= budget else budget
    print(f"# examined={examined} emitted={emitted}")
    return 0


def cmd_gal2fib(args) -> int:
    fsr = load_fsr_file(args.input)
    L_g = fsr.transition()
    result = min_stage_fibonacci(L_g, max_free=args.max_free)
    print(f"l = {result.l}")
    print(f"P = {format_delta(1 << result.l, result.partial.cols)}")
    print(f"T' = {format_delta(1 << result.l, result.window_map)}")
    print(f"completions = {result.total_completions}")
    shown = result.completions if args.all_completions else result.completions[:1]
    for L_c in shown:
        print(transition_to_delta(L_c))
    return 0


def cmd_verify(args) -> int:
    A = load_matrix(args.a)
    B = load_matrix(args.b)
    result = equivalent(A, B)
    print("equivalent" if result else "not equivalent")
    for i in sorted(result.forward):
        print(f"A {i} -> B {result.forward[i]}")
    for j in sorted(result.backward):
        print(f"B {j} -> A {result.backward[j]}")
    return 0 if result else 1


def cmd_simulate(args) -> int:
    L = load_matrix(args.input)
    init = args.init
    if set(init) <= {"0", "1"} and len(init) == L.n:
        x0 = encode_state([int(c) for c in init])
    else:
        x0 = int(init)
    bits = simulate(L, x0, args.steps)
    print("".join(map(str, bits)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fsrkit",
        description="Transform feedback shift registers between Fibonacci and "
                    "Galois configurations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("to-matrix", help="print the transition matrix of an FSR file")
    p.add_argument("input")
    p.set_defaults(func=cmd_to_matrix)

    p = sub.add_parser("fib2gal", help="construct equivalent Galois FSRs")
    p.add_argument("input")
    p.add_argument("--budget", default="full",
                   help="max permutations to examine (integer or 'full')")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for sampled enumeration (required when the "
                        "budget truncates the search)")
    p.add_argument("--emit", choices=["matrix", "logic", "all"], default="matrix")
    p.add_argument("--minimize", action="store_true",
                   help="print only the support/cost-minimal candidate")
    p.add_argument("--perm", default=None,
                   help="apply one fixed permutation, delta format (d16[...])")
    p.set_defaults(func=cmd_fib2gal)

    p = sub.add_parser("gal2fib", help="minimal-stage Fibonacci reconstruction")
    p.add_argument("input")
    p.add_argument("--all-completions", action="store_true")
    p.add_argument("--max-free", type=int, default=20)
    p.set_defaults(func=cmd_gal2fib)

    p = sub.add_parser("verify", help="output-sequence equivalence oracle")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="print the output bit stream")
    p.add_argument("input")
    p.add_argument("--init", required=True, help="initial state: index or bit string")
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FsrFileError, ex.ParseError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
