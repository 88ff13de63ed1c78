def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # surface the acceptance criterion lines even when capture is on
    try:
        import test_acceptance
    except ImportError:
        return
    lines = getattr(test_acceptance, "RESULT_LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
