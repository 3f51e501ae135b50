import pytest

from ddc.objects import CategoryParams, parse_object


@pytest.fixture
def p230():
    return CategoryParams(2, 3, 0)


@pytest.fixture
def obj(p230):
    return lambda text, params=None: parse_object(params or p230, text)


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_record():
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda text: int(text.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
