import pytest

from genlogistic import _kernels

BACKENDS = [_kernels.numpy_kernels] + ([_kernels.numba_kernels] if _kernels.numba_kernels else [])


@pytest.fixture(params=BACKENDS, ids=lambda k: k.name)
def backend(request, monkeypatch):
    """Run the test once per kernel backend."""
    monkeypatch.setattr(_kernels, "ACTIVE", request.param)
    return request.param


ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one acceptance line: report(tag, description, value, tolerance, passed)."""
    def record(tag, text, value, tol, passed):
        line = f"{tag:<4} {'PASS' if passed else 'FAIL'}  {text}: {value:.3e} (gate {tol:.0e})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
