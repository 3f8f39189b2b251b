import pytest

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): an exit criterion, reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        _acceptance[item.nodeid] = (marker.args[0], rep.outcome, rep.duration, detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label, outcome, duration, detail in sorted(_acceptance.values()):
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"{status}  {label}  ({duration * 1000:.1f} ms)"
        if detail:
            line += f"  [{detail}]"
        tr.write_line(line)
