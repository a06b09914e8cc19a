import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ppinv.field import make_field
from ppinv.poly import Poly

settings.register_profile(
    "repo", deadline=None, max_examples=60, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)]


@st.composite
def fields(draw, choices=SMALL_FIELDS):
    p, n = draw(st.sampled_from(choices))
    return make_field(p, n)


@st.composite
def polys(draw, spec, max_degree=None):
    max_degree = 2 * spec.q if max_degree is None else max_degree
    enc = draw(st.lists(st.integers(0, spec.q - 1), max_size=max_degree + 1))
    return Poly.from_encodings(spec, enc)


@pytest.fixture
def rng():
    return random.Random(20240601)


# acceptance lines collected by tests/test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
