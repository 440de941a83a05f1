"""Acceptance criteria, one test per criterion at full corpus size.

Run ``pytest tests/test_acceptance.py -s`` to see the pass/fail lines, or
``python3 tests/test_acceptance.py`` for a plain summary.
"""

import sys

import pytest

from qrankwidth.sweeps import SWEEPS


@pytest.mark.parametrize("sweep", SWEEPS, ids=lambda s: s.__name__.removeprefix("sweep_"))
def test_criterion(sweep):
    res = sweep()
    print(res.line())
    assert res.checks > 0
    assert res.passed, "\n".join(res.failures[:10])


if __name__ == "__main__":
    results = [sweep() for sweep in SWEEPS]
    for res in results:
        print(res.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
