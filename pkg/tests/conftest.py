def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and report.when == "call":
                name = nodeid.split("::")[-1]
                number = int(name.split("_")[2])
                rows.append((number, "PASS" if outcome == "passed" else "FAIL", name))
    if rows:
        terminalreporter.section("acceptance criteria")
        for number, status, name in sorted(rows):
            terminalreporter.write_line(f"criterion {number}: {status}  {name}")
