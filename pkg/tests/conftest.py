import pathlib

import pytest

from fsrkit import (
    StructureMatrix,
    TransitionMatrix,
    fib_transition,
    parse,
    structure_matrix,
)

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

# 4-stage full-cycle example, reference matrices
MF4_ROWS = (2, 2, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1, 1, 2, 2)
LF4_COLS = (2, 4, 6, 8, 10, 12, 13, 16, 1, 3, 5, 7, 9, 11, 14, 15)
LG4_COLS = (3, 5, 4, 8, 10, 16, 9, 13, 2, 6, 12, 7, 15, 1, 11, 14)
PI4 = (1, 3, 2, 4, 7, 5, 6, 8, 14, 9, 12, 10, 16, 11, 15, 13)

# feedback of the committed 4-stage fixture: full 16-cycle dynamics
FIB4_FEEDBACK = "(x1 & !x2 & !x3 & x4) | (!x1 & (x2 | x3)) | (!x1 & !x2 & !x3 & !x4)"

# 3-stage Galois reference matrices
LG3_SHRINKABLE_COLS = (3, 4, 2, 3, 6, 6, 4, 4)
LG3_TWO_ATTRACTORS_COLS = (5, 3, 7, 6, 4, 1, 8, 7)


@pytest.fixture
def lf4() -> TransitionMatrix:
    return TransitionMatrix(4, LF4_COLS)


@pytest.fixture
def lg4() -> TransitionMatrix:
    return TransitionMatrix(4, LG4_COLS)


@pytest.fixture
def fib4_transition() -> TransitionMatrix:
    fb = parse(FIB4_FEEDBACK, 4)
    return fib_transition(structure_matrix(fb, 4))


def debruijn3() -> TransitionMatrix:
    """A 3-stage Fibonacci FSR whose state graph is a single 8-cycle."""
    return fib_transition(StructureMatrix(3, (2, 2, 1, 2, 1, 1, 2, 1)))
