CRITERIA = {
    1: "homogeneous candidate search and hit list",
    2: "Darboux eigenvalue triples against a numeric oracle",
    3: "Lame coefficients, residual identity and case II1 classification",
    4: "golden first- and second-level series coefficients",
    5: "residue certificates and their vanishing locus",
    6: "involution of the quartic and rotation integrals",
    7: "verdict table and randomized off-variety certificates",
    8: "randomized property suites",
}

_criterion_of = {}
_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criterion_of[item.nodeid] = m.args[0]


def pytest_runtest_logreport(report):
    n = _criterion_of.get(report.nodeid)
    if n is None:
        return
    ok = report.passed or (report.when != "call" and not report.failed and not report.skipped)
    bucket = _outcomes.setdefault(n, {"passed": 0, "failed": []})
    if report.when == "call" and report.passed:
        bucket["passed"] += 1
    elif not ok:
        bucket["failed"].append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in _outcomes:
            continue
        b = _outcomes[n]
        verdict = "FAIL" if b["failed"] else "PASS"
        line = f"criterion {n}: {verdict} - {CRITERIA[n]} ({b['passed']} passed"
        line += f", failing: {', '.join(b['failed'])})" if b["failed"] else ")"
        terminalreporter.write_line(line)
