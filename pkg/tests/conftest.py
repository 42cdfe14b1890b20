"""Shared generators for the test suite."""
from __future__ import annotations

import random
from pathlib import Path

import pytest

from starkindex.gmodule import ModulePresentation
from starkindex.grouping import ring_by_name

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
EXAMPLE_FIXTURES = FIXTURES / "examples"

MAXIMAL_RINGS = ("Z", "Z[i]", "Z[w]", "O")

_ACCEPTANCE_LINES: list[str] = []


def random_presentation(rng: random.Random, ring: str, max_order: int = 2000, max_gens: int = 2,
                        tries: int = 1000) -> ModulePresentation:
    """A random finite presentation over ``ring`` with 1 < |M| <= max_order (or the zero module rarely)."""
    R = ring_by_name(ring)
    for _ in range(tries):
        a = rng.randint(1, max_gens)
        nrel = a + rng.randint(0, 1)
        rels = []
        for i in range(nrel):
            row = []
            for j in range(a):
                if i == j:
                    x = [rng.randint(-4, 4) for _ in range(R.deg)]
                    x[0] += rng.choice((-1, 1)) * rng.randint(1, 4)
                else:
                    x = [rng.randint(-1, 1) if rng.random() < 0.5 else 0 for _ in range(R.deg)]
                row.append(x)
            rels.append(row)
        p = ModulePresentation.build(R, a, rels)
        if not p.is_finite():
            continue
        if p.cardinality() <= max_order:
            return p
    raise RuntimeError("no presentation found")


def acceptance_line(criterion: int, passed: bool, detail: str) -> str:
    line = f"criterion {criterion:>2}: {'PASS' if passed else 'FAIL'}  {detail}"
    _ACCEPTANCE_LINES.append(line)
    print(line)
    return line


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
