import pytest

# criterion number -> (title, passed); filled in by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {k}: {title}")


@pytest.fixture
def record_criterion():
    def record(k, title, ok):
        ACCEPTANCE[k] = (title, bool(ok))
        print(f"{'PASS' if ok else 'FAIL'} criterion {k}: {title}")
        return ok
    return record
