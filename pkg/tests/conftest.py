"""Shared pytest plumbing: acceptance criteria report one line each."""

import pytest

acceptance_lines: list[str] = []


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    setattr(item, "outcome_" + report.when, report)


@pytest.fixture
def criterion(request):
    """Record 'criterion N: PASS/FAIL — description' for the final summary.

    The test calls the returned function once with its number and a short
    description; the verdict is taken from the test outcome afterwards.
    """
    slot = {}

    def declare(number: int, description: str) -> None:
        slot["number"] = number
        slot["description"] = description

    yield declare
    if not slot:
        return
    report = getattr(request.node, "outcome_call", None)
    verdict = "PASS" if report is not None and report.passed else "FAIL"
    acceptance_lines.append(
        f"criterion {slot['number']:2d}: {verdict} — {slot['description']}"
    )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(acceptance_lines):
        terminalreporter.write_line(line)
