import pytest

RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and hasattr(report, "user_properties"):
        props = dict(report.user_properties)
        if "criterion" in props:
            RESULTS[props["criterion"]] = (props["title"], report.passed)


@pytest.fixture
def criterion(record_property):
    def mark(num, title):
        record_property("criterion", num)
        record_property("title", title)
    return mark


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        title, ok = RESULTS[num]
        terminalreporter.write_line("%s criterion %2d: %s" % ("PASS" if ok else "FAIL", num, title))
