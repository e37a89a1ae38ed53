from collections import defaultdict

_outcomes: dict[int, list[tuple[str, bool]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number k")


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker:
            item.user_properties.append(("criterion", marker.args[0]))


def pytest_runtest_logreport(report):
    criterion = dict(report.user_properties).get("criterion")
    if criterion is None:
        return
    if report.when == "call" or report.failed:
        _outcomes[criterion].append((report.nodeid, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_outcomes):
        results = _outcomes[k]
        ok = all(passed for _, passed in results)
        names = ", ".join(sorted({nodeid.split("::")[-1].split("[")[0] for nodeid, _ in results}))
        terminalreporter.write_line(f"ACCEPTANCE {k} {'PASS' if ok else 'FAIL'} ({len(results)} test(s): {names})")
