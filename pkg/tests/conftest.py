import random
from fractions import Fraction

import pytest

from metriclie import catalog
from metriclie.linalg import determinant, mat


@pytest.fixture(scope="session")
def g0():
    return catalog.get("g0").algebra


@pytest.fixture(scope="session")
def g1():
    return catalog.get("g1").algebra


@pytest.fixture(scope="session")
def h3():
    return catalog.get("h3").algebra


@pytest.fixture(scope="session")
def gmatrix0_g0():
    return catalog.get("g0").invariant_forms["gmatrix0"]


@pytest.fixture(scope="session")
def gmatrix0_g1():
    return catalog.get("g1").invariant_forms["gmatrix0"]


@pytest.fixture(scope="session")
def h3_metrics():
    return dict(catalog.get("h3").left_metrics)


def random_rational(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice((1, 1, 2)))


def random_invertible(rng: random.Random, n: int):
    while True:
        P = [[random_rational(rng) for _ in range(n)] for _ in range(n)]
        if determinant(mat(P)) != 0:
            return mat(P)
