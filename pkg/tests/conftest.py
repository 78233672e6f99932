import pytest

from nestedcodes.variety import validate_sequence

# Sequences small enough for every rank oracle.
ORACLE_SUITE = [
    (2, 2),
    (2, 2, 2),
    (2, 2, 4),
    (2, 4, 4),
    (3, 3, 3),
    (3, 3, 9),
    (2, 2, 2, 2),
    (2, 2, 2, 4),
]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def ex224():
    return validate_sequence(2, (2, 2, 4), 4)


@pytest.fixture(params=ORACLE_SUITE, ids=lambda s: ",".join(map(str, s)))
def suite_seq(request):
    return validate_sequence(None, request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
