import itertools

import pytest

from flagflow import build_flag, build_root_system, build_theorem_a, build_theorem_b

# (criterion number, description, "PASS"/"FAIL") filled in by test_acceptance
ACCEPTANCE_LINES: list[tuple[int, str, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n, desc, status in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"{status} criterion {n}: {desc}")


def a2_full():
    return build_flag(build_root_system("A", 2), ())


def e_ab(a, b, lam=1):
    return build_theorem_b(a2_full(), lam, [(-a, a), (-b, b)])


def e_kl(k, l, lam=1):
    return build_theorem_a(a2_full(), lam, k, [(-l, l)])


def all_flags(types):
    """Every flag manifold (every parabolic subset) of the given simple types."""
    for family, rank in types:
        rs = build_root_system(family, rank)
        for size in range(rank + 1):
            for par in itertools.combinations(range(1, rank + 1), size):
                yield build_flag(rs, par)


SMALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
               ("C", 3), ("C", 4), ("D", 4)]


@pytest.fixture
def A2():
    return a2_full()


@pytest.fixture
def P2():
    return build_flag(build_root_system("A", 2), (2,))
