import pytest

from cayleysync import cayley_digraph, make_cyclic
from cayleysync.groups import generating_set

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


def cyclic_cayley(n, exponents):
    group = make_cyclic(n)
    return cayley_digraph(group, generating_set(group, exponents))


@pytest.fixture
def c7_triangle():
    """Cay(C_7, {a, a2, a3})."""
    return cyclic_cayley(7, [1, 2, 3])


@pytest.fixture
def c11_girth6():
    return cyclic_cayley(11, [1, 6])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        desc, ok = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {desc}")
