import pytest

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    name = item.name
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria[name] = (report.passed, (item.function.__doc__ or "").strip())


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split("_")[2])):
        ok, doc = _criteria[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name[len('test_'):]}: {doc}")
