import sys

import pytest

from posetcount import Permutation, poset_from_permutation
from posetcount.instances import random_dag, random_permutation


@pytest.fixture
def two_plus_two():
    return poset_from_permutation(Permutation((2, 1, 4, 3)))


def perm_posets(count, n_lo, n_hi, seed0=0):
    """Seeded permutation posets with n cycling through [n_lo, n_hi]."""
    span = n_hi - n_lo + 1
    for s in range(count):
        perm = random_permutation(n_lo + s % span, seed0 + s)
        yield perm, poset_from_permutation(perm)


def dag_posets(count, n_lo, n_hi, seed0=0):
    span = n_hi - n_lo + 1
    for s in range(count):
        density = (0.15, 0.3, 0.5, 0.7)[s % 4]
        yield random_dag(n_lo + s % span, seed0 + s, density)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
