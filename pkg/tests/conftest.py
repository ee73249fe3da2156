from __future__ import annotations

import sys
from pathlib import Path

import pytest

from coxkit import enumerate_ball, named_matrix, reflections_in_ball

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def ball_a2():
    return enumerate_ball(named_matrix("A2"), 3)


@pytest.fixture(scope="session")
def ball_a3():
    return enumerate_ball(named_matrix("A3"), 6)


@pytest.fixture(scope="session")
def ball_b3():
    return enumerate_ball(named_matrix("B3"), 9)


@pytest.fixture(scope="session")
def table_a2(ball_a2):
    return reflections_in_ball(ball_a2)


@pytest.fixture(scope="session")
def table_a3(ball_a3):
    return reflections_in_ball(ball_a3)


@pytest.fixture(scope="session")
def table_b3(ball_b3):
    return reflections_in_ball(ball_b3)
