import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    from torifan.fan2d import sum_law_checks

    terminalreporter.write_line(f"weight-sum law checked in the fan constructor {sum_law_checks()} times")
