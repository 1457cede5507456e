import json
from pathlib import Path

import pytest

from boxtakeoff import load_catalogs

FIXTURES = Path(__file__).parent / "fixtures"
MODULE_SAMPLE = FIXTURES / "module_sample"


@pytest.fixture(scope="session")
def sample_paths() -> dict[str, Path]:
    return {
        "scene": MODULE_SAMPLE / "scene.json",
        "sections": MODULE_SAMPLE / "sections.csv",
        "pipes": MODULE_SAMPLE / "pipes.csv",
        "materials": MODULE_SAMPLE / "materials.csv",
        "filters": MODULE_SAMPLE / "filters.json",
        "workareas": MODULE_SAMPLE / "workareas.json",
    }


@pytest.fixture(scope="session")
def sample_catalogs(sample_paths):
    return load_catalogs(
        sample_paths["sections"].read_text(encoding="utf-8"),
        sample_paths["pipes"].read_text(encoding="utf-8"),
        sample_paths["materials"].read_text(encoding="utf-8"),
    )


@pytest.fixture(scope="session")
def expected_totals():
    return json.loads((MODULE_SAMPLE / "expected_totals.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def rotation_oracle():
    return json.loads((FIXTURES / "rotation_oracle.json").read_text(encoding="utf-8"))


# One visible pass/fail line per acceptance criterion at the end of the run.
_acceptance_results: list[tuple[str, bool]] = []


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    if report.when == "call" and "test_acceptance" in item.nodeid:
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance_results.append((doc, report.passed))
    return report


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")
