"""Acceptance gate: one test per verification check, one printed line each.

Every check compares exact values (ints, Fractions, rational functions in t);
there are no tolerances anywhere.
"""

import pytest

from hankelpath import verify


@pytest.mark.parametrize("name", list(verify.CHECKS), ids=list(verify.CHECKS))
def test_check(name, capsys):
    # the filter matches substrings; pick the exact check
    result = next(r for r in verify.run_checks(only=name) if r.name == name)
    status = "PASS" if result.passed else "FAIL"
    with capsys.disabled():
        print(f"\n[{status}] {name}: {result.detail}")
    assert result.passed, f"{name}: {result.detail}"
