import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("dskg", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("dskg")

_ACCEPTANCE = {}


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line per acceptance criterion and print it."""
    def report(number, title, passed, detail, elapsed, limit):
        ok = bool(passed) and elapsed <= limit
        line = f"{'PASS' if ok else 'FAIL'} [{number:2d}] {title}: {detail} ({elapsed:.1f} s, limit {limit:g} s)"
        _ACCEPTANCE[number] = line
        print(line)
        return ok
    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.write_sep("=", "acceptance criteria")
        for number in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[number])
