import random

import pytest

from rcng import _kernels_py

try:
    from rcng import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    BACKENDS.append(pytest.param(_kernels_c, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_connected(rng, n, p=0.4):
    from rcng.graph import Graph, is_connected

    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


ACCEPTANCE_LINES = []


def record_criterion(number, title, budget_s, check):
    """Run ``check``, time it against ``budget_s`` and log one PASS/FAIL line."""
    import time

    t0 = time.perf_counter()
    error = None
    try:
        check()
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - t0
    ok = error is None and elapsed < budget_s
    status = "PASS" if ok else "FAIL"
    line = f"{status}  criterion {number}: {title}  [{elapsed:.1f}s / budget {budget_s:.0f}s]"
    if error is not None:
        line += f"  ({error})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    if error is not None:
        raise error
    assert elapsed < budget_s, f"criterion {number} took {elapsed:.1f}s, budget {budget_s}s"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
