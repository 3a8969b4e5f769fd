from __future__ import annotations

from pathlib import Path

import pytest

from argus import Assessment, parse_model, transform

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

VALID_FIXTURES = ("alt_example", "hazard_avoidance", "mixed_fig9", "nested_groups")


def fixture_text(name: str) -> str:
    return (FIXTURES / f"{name}.yaml").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def alt_model():
    return parse_model(fixture_text("alt_example"))


@pytest.fixture(scope="session")
def alt_network(alt_model):
    return transform(alt_model)


@pytest.fixture(scope="session")
def alt_assessment(alt_model):
    return Assessment(values=dict(alt_model.leaf_confidences))


@pytest.fixture(scope="session")
def fig9_model():
    return parse_model(fixture_text("mixed_fig9"))


@pytest.fixture(scope="session")
def fig9_network(fig9_model):
    return transform(fig9_model)


@pytest.fixture(scope="session")
def hazard_model():
    return parse_model(fixture_text("hazard_avoidance"))


@pytest.fixture(scope="session")
def nested_model():
    return parse_model(fixture_text("nested_groups"))


@pytest.fixture(scope="session")
def corpus_models():
    return {name: parse_model(fixture_text(name)) for name in VALID_FIXTURES}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    reports = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion" in rep.nodeid:
                reports.append(rep)
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for rep in sorted(reports, key=lambda r: r.nodeid):
        status = "PASS" if rep.passed else "FAIL"
        name = rep.nodeid.split("::")[-1]
        terminalreporter.write_line(f"{status}  {name}")
