"""One test per acceptance criterion; each prints a single pass/fail line."""

from __future__ import annotations

import pytest

from cosegal import suite
from cosegal.suite import CRITERIA, run_criterion

SEED = 0


def test_tolerances_are_pinned():
    assert suite.DEC_MAX_DEGREE == 10 and suite.DEC_SECONDS == 1.0
    assert suite.NORMAL_FORM_MAX == 8 and suite.REWRITE_MAX == 6
    assert suite.ADJUNCTION_INSTANCES >= 20 and suite.ADJUNCTION_SECONDS == 60.0
    assert suite.COHERENT_INSTANCES >= 20
    assert suite.HOM_BUDGET == 1000
    assert [k for k, _, _ in CRITERIA] == list(range(1, 12))


@pytest.mark.parametrize("number", [k for k, _, _ in CRITERIA],
                         ids=[f"{k:02d}-{name.replace(' ', '-')}" for k, name, _ in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number, SEED)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
    if number == 1:
        assert result.seconds < suite.DEC_SECONDS
    if number == 3:
        assert result.seconds < suite.ADJUNCTION_SECONDS
