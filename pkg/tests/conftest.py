import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from prealg.algebra import Algebra, a2, zero_algebra
from prealg.coefficients import PrimeField, Rationals

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

Q = Rationals()
F2, F3, F5, F7 = (PrimeField(p) for p in (2, 3, 5, 7))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def A2():
    return a2()


@st.composite
def algebras(draw, domains=(Q, F2, F3, F5), max_dim=3):
    d = draw(st.sampled_from(domains))
    n = draw(st.integers(1, max_dim))
    if d.kind == "Q":
        coef = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    else:
        coef = st.integers(0, d.modulus - 1)
    flat = draw(st.lists(coef, min_size=n ** 3, max_size=n ** 3))
    sc = tuple(tuple(tuple(flat[(i * n + j) * n:(i * n + j + 1) * n]) for j in range(n)) for i in range(n))
    return Algebra.from_sc(d, sc, name="H")


def non_pre_lie_example() -> Algebra:
    """e1 e1 = e2, e2 e1 = e1, other products zero."""
    return Algebra.from_table(Q, 2, {(0, 0): (0, 1), (1, 0): (1, 0)}, name="NPL")


__all__ = ["Q", "F2", "F3", "F5", "F7", "algebras", "non_pre_lie_example", "zero_algebra", "FIXTURES", "GOLDEN"]


def pytest_terminal_summary(terminalreporter):
    lines = [value for key in ("passed", "failed") for rep in terminalreporter.stats.get(key, [])
             if rep.when == "call" for name, value in rep.user_properties if name == "acceptance"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
