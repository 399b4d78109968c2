import os
from pathlib import Path

import pytest

from eda.lexicon import build_from_wordnet

FIXTURES = Path(__file__).parent / "fixtures"
WNDB_FIXTURE = FIXTURES / "wndb"
# a full WordNet 3.x dict directory, used by the optional full-build tests
FULL_WORDNET = Path(os.environ.get("EDA_WORDNET_DIR", "/root/wordnet-3.0"))


@pytest.fixture(scope="session")
def fixture_lexicon():
    return build_from_wordnet(WNDB_FIXTURE)


@pytest.fixture(scope="session")
def full_wordnet():
    if not (FULL_WORDNET / "data.noun").is_file():
        pytest.skip("full WordNet not available (set EDA_WORDNET_DIR)")
    return FULL_WORDNET


@pytest.fixture(scope="session")
def full_wordnet_optional():
    return FULL_WORDNET if (FULL_WORDNET / "data.noun").is_file() else None


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance.py" in report.nodeid and name.startswith("test_criterion_"):
        detail = dict(report.user_properties).get("detail", "")
        if report.outcome != "passed" and not detail:
            detail = str(report.longrepr).strip().splitlines()[-1] if report.longrepr else ""
        _ACCEPTANCE[name] = (report.outcome, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda n: int(n.split("_")[2])):
        outcome, detail = _ACCEPTANCE[name]
        status = "PASS" if outcome == "passed" else "FAIL"
        number = name.split("_")[2]
        label = " ".join(name.split("_")[3:])
        terminalreporter.write_line(f"criterion {number} [{status}] {label}: {detail}")
