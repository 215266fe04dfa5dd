import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from knotfloer import models
from knotfloer.cfk import dual, tensor


def base_zoo():
    return [
        models.torus_staircase(2, 3),
        models.torus_staircase(2, 5),
        models.torus_staircase(3, 4),
        models.box(0, 0, 1),
        models.box(1, -1, 1),
    ] + [models.cable_model(n) for n in range(2, 6)]


def knotlike_base():
    return [c for c in base_zoo() if not c.name.startswith("box")]


def full_zoo():
    """Base models, their duals, and every pairwise tensor of base models."""
    base = base_zoo()
    out = list(base) + [dual(c) for c in base]
    out += [tensor(a, b) for a, b in itertools.combinations_with_replacement(base, 2)]
    return out


@pytest.fixture(scope="session")
def zoo():
    return full_zoo()


@pytest.fixture(scope="session")
def knot_zoo():
    base = knotlike_base()
    small = base[:4]
    return base + [dual(c) for c in base] + [tensor(a, b) for a, b in itertools.combinations_with_replacement(small, 2)]


@pytest.fixture
def trefoil():
    return models.torus_staircase(2, 3)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
