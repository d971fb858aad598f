"""The ten named verification suites; a pass/fail line per criterion is printed in the summary."""

import pytest

from supercrystal.verify import SUITES, run_suite


@pytest.mark.parametrize("number, name", list(enumerate(SUITES, 1)), ids=list(SUITES))
def test_criterion(number, name, acceptance_log):
    res = run_suite(name)
    acceptance_log.append(f"[{number:2d}] {res.line()}")
    acceptance_log.extend(f"       {msg}" for msg in res.failures[:5])
    assert res.ok, res.failures[:5]
    assert res.in_time, f"{name} took {res.elapsed:.1f}s, limit {res.limit:g}s"
