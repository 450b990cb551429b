"""Acceptance gate: every criterion runs exactly (no tolerances) and prints
one pass/fail line.  Run with `pytest -s tests/test_acceptance.py` to see
the lines, or `hopflab suite` for the standalone report.
"""

import pytest

from hopflab.fields import QQ
from hopflab.suite import CRITERIA, SuiteContext


@pytest.fixture(scope="module")
def ctx():
    return SuiteContext(QQ, (-2, -1, 0, 1, 2, 3), seed=0)


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(ctx, name, fn):
    rep = fn(ctx)
    status = "PASS" if rep.ok else "FAIL"
    print("%s  %s (%d checks)" % (status, name, len(rep.checks)))
    if not rep.ok:
        print(rep.render_text())
    assert rep.ok, "criterion %s failed:\n%s" % (name, rep.render_text())
