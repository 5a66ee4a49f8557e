import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[0][2:])):
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    def emit(number: int, passed: bool, summary: str) -> None:
        line = f"AC{number} {'PASS' if passed else 'FAIL'} {summary}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return emit
