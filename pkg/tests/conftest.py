import re

_verdicts = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_acceptance\.py::test_ac(\d+)_(\w+)", report.nodeid)
    if not match:
        return
    key = (int(match.group(1)), match.group(2))
    if report.when == "call" or report.failed:
        _verdicts[key] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for (number, name), verdict in sorted(_verdicts.items()):
        terminalreporter.write_line(f"AC{number:02d} {verdict} {name.replace('_', ' ')}")
