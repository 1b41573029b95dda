import random

import pytest

ACCEPTANCE_LINES: list[str] = []


class SimpleTree:
    """Plain rooted tree with the attributes the marking functions read."""

    def __init__(self, parent):
        self.parent = list(parent)
        n = len(self.parent)
        self.children = [dict() for _ in range(n)]
        self.level = [0] * n
        for v in range(1, n):
            p = self.parent[v]
            self.children[p][len(self.children[p])] = v
        for v in range(1, n):  # parents precede children in all generated trees
            self.level[v] = self.level[self.parent[v]] + 1

    def __len__(self):
        return len(self.parent)


def random_tree(rng: random.Random, n: int, shape: str = "mixed") -> SimpleTree:
    parent = [-1]
    for v in range(1, n):
        if shape == "deep":
            parent.append(rng.randint(max(0, v - 3), v - 1))
        elif shape == "bushy":
            parent.append(rng.randint(0, min(v - 1, 5)))
        else:
            parent.append(rng.randint(0, v - 1))
    return SimpleTree(parent)


def chain(n):
    return SimpleTree([-1] + list(range(n - 1)))


def star(leaves):
    return SimpleTree([-1] + [0] * leaves)


def ancestors_or_self(parent, v):
    out = []
    while v >= 0:
        out.append(v)
        v = parent[v]
    return out


@pytest.fixture
def record_acceptance():
    def record(criterion: int, ok: bool, detail: str):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
