"""Shared pytest hooks: derandomized fuzzing, acceptance-gate verdict lines."""

import sys

from hypothesis import settings

settings.register_profile("derandomized", derandomize=True)
settings.load_profile("derandomized")


def pytest_terminal_summary(terminalreporter):
    gate = sys.modules.get("test_acceptance")
    if gate is None or not getattr(gate, "VERDICTS", None):
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance gate")
    for number in sorted(gate.VERDICTS):
        terminalreporter.write_line(gate.VERDICTS[number])
