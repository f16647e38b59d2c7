import pytest

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        detail = "; ".join(f"{k}={v}" for k, v in item.user_properties)
        _criteria.append((marker.args[0], marker.args[1], rep.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    merged = {}
    for number, title, ok, detail in _criteria:
        prev = merged.get(number)
        if prev is None:
            merged[number] = [title, ok, [detail] if detail else [], 1]
        else:
            prev[1] = prev[1] and ok
            prev[3] += 1
            if detail:
                prev[2].append(detail)
    for number in sorted(merged):
        title, ok, details, cases = merged[number]
        if cases > 1:
            details = [f"cases={cases}"] + details
        line = f"[{'PASS' if ok else 'FAIL'}] AC{number} {title}"
        if details:
            line += f"  ({'; '.join(details)})"
        terminalreporter.write_line(line)
