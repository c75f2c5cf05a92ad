import numpy as np
import pytest

ALPHAS = (0.5, np.pi / 2, 3.0)

#: lines reported by the acceptance tests, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def random_points(alpha, count, seed=0):
    return np.random.default_rng(seed).dirichlet([1.0, 1.0, 1.0], count) * alpha


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
