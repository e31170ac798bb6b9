import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from tsalg.catalog import load_spec  # noqa: E402


@pytest.fixture(scope="session")
def c4():
    return load_spec("c4-paper").action


@pytest.fixture(scope="session")
def c4_dehom():
    return load_spec("c4-dehom").action


@pytest.fixture(scope="session")
def c2_dreg():
    return load_spec("c2-dreg").action


@pytest.fixture(scope="session")
def c3_dreg():
    return load_spec("c3-dreg").action


@pytest.fixture(scope="session")
def s3_perm():
    return load_spec("s3-perm").action


@pytest.fixture(scope="session")
def s3_a3():
    spec = load_spec("c3-dreg-in-s3")
    return spec.action, spec.section


@pytest.fixture(scope="session")
def c6_c3():
    spec = load_spec("c3-dreg-in-c6")
    return spec.action, spec.section


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    outcomes: dict[str, list[str]] = {}
    for key in ("passed", "failed", "xfailed", "xpassed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            crit = nodeid.split("test_criterion_")[1].split("_")[0]
            outcomes.setdefault(crit, []).append(key)
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(outcomes, key=int):
        keys = outcomes[crit]
        if any(k in ("failed", "error", "xpassed") for k in keys):
            status = "FAIL"
        elif "xfailed" in keys:
            status = "FAIL (known, see xfail reason)"
        else:
            status = "PASS"
        terminalreporter.write_line(f"criterion {crit}: {status} ({len(keys)} test(s))")
