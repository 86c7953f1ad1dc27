import pytest

_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def record(request):
    """Record one acceptance criterion outcome for the terminal summary."""
    lines = request.config.stash[_ACCEPTANCE_KEY]

    def _record(criterion: str, passed: bool, detail: str = "") -> None:
        lines.append(f"{'PASS' if passed else 'FAIL'}  {criterion}  {detail}".rstrip())

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

