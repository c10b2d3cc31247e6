import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from taxicab.geometry import Configuration
from taxicab.similarity import SimilarityTransform

N_NUM = 100
MAX_DEN = 10


def rand_rational(rng: random.Random, num: int = N_NUM, den: int = MAX_DEN) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_point(rng: random.Random, d: int, **kw) -> tuple:
    return tuple(rand_rational(rng, **kw) for _ in range(d))


def rand_config(rng: random.Random, d: int, max_points: int = 12, **kw) -> Configuration:
    n = rng.randint(0, max_points)
    return Configuration([rand_point(rng, d, **kw) for _ in range(n)], dimension=d)


def rand_transform(rng: random.Random, d: int) -> SimilarityTransform:
    perm = list(range(d))
    rng.shuffle(perm)
    signs = tuple(rng.choice((1, -1)) for _ in range(d))
    scale = Fraction(rng.randint(1, 20), rng.randint(1, 20))
    return SimilarityTransform(tuple(perm), signs, scale, rand_point(rng, d))


@pytest.fixture
def rng():
    return random.Random(20240611)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def points(d):
    return st.tuples(*([rationals] * d))


# One PASS/FAIL line per acceptance criterion in the terminal summary.
_ACCEPTANCE: dict[str, bool] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.outcome == "failed":
        name = report.nodeid.split("::")[-1]
        criterion = name.split("[")[0].replace("test_", "")
        ok = report.outcome == "passed"
        _ACCEPTANCE[criterion] = _ACCEPTANCE.get(criterion, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_ACCEPTANCE):
        verdict = "PASS" if _ACCEPTANCE[criterion] else "FAIL"
        terminalreporter.write_line(f"{verdict}  {criterion}")
