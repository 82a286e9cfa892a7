"""The acceptance matrix, one test per criterion.

Each criterion prints its pass/fail line; the same matrix backs
`posetkernel selftest`.  The stated time bounds are part of the contract
and asserted here.
"""

import pytest

from posetkernel.acceptance import CRITERIA, _result

TIME_BOUNDS = {
    "C1": 30.0,  # finite oracle equivalence
    "C2": 1.0,   # non-continuity witness
    "C3": 5.0,   # proper approximable part
    "C4": 30.0,  # kernel laws / equivalence / Scott
    "C5": 20.0,  # largest retract
    "C6": 10.0,  # double approximation
    "C7": 5.0,   # infima preservation
    "C8": 5.0,   # quotient structure
    "C9": 1.0,   # harness sanity
    "C10": 5.0,  # CLI contract
}


@pytest.mark.parametrize("ident,title,fn", CRITERIA,
                         ids=[c[0] for c in CRITERIA])
def test_criterion(ident, title, fn):
    result = _result(ident, title, lambda: fn(quick=False))
    print(result.line())
    assert result.passed, result.detail
    assert result.seconds < TIME_BOUNDS[ident], \
        f"{ident} took {result.seconds:.2f}s, bound {TIME_BOUNDS[ident]}s"
