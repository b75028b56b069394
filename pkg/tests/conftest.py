import _criteria


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria.RESULTS):
        ok, detail = _criteria.RESULTS[num]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[criterion {num}] {verdict} - {detail}")
