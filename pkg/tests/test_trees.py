import random

import pytest

from esdom.exceptions import InvalidGraphError
from esdom.generators import cycle, path, star, subdivided_star
from esdom.graph import Graph, is_tree
from esdom.solver import gamma_esp
from esdom.trees import (
    Color,
    TreeBuildScript,
    TwoColoredTree,
    build,
    deconstruct,
    esd_set_from_coloring,
    recognize,
)
from esdom.verify import check_esd

from .conftest import random_tree


def random_script(rng: random.Random, steps: int) -> TreeBuildScript:
    colors = [Color.BLUE, Color.AMBER, Color.AMBER, Color.BLUE]
    ops = []
    for _ in range(steps):
        op = rng.choice(("O1", "O2"))
        want = Color.AMBER if op == "O1" else Color.BLUE
        v = rng.choice([i for i, c in enumerate(colors) if c is want])
        ops.append((op, v))
        colors += [Color.AMBER, Color.BLUE] if op == "O1" else [Color.BLUE, Color.AMBER, Color.AMBER, Color.BLUE]
    return TreeBuildScript(tuple(ops))


def test_base_is_coloured_p4():
    t = build(TreeBuildScript())
    assert t.tree == path(4)
    assert t.coloring_string() == "B,A,A,B"
    assert t.blue == [0, 3]


def test_script_parse_and_print():
    text = "base\nO1@1\nO2@5  # attach at the new blue vertex\n"
    script = TreeBuildScript.parse(text)
    assert script.steps == (("O1", 1), ("O2", 5))
    assert TreeBuildScript.parse(str(script)) == script
    assert build(script).tree.n == 10


@pytest.mark.parametrize("text", ["O1@1", "base\nO3@1", "base\nO1@x", "base\nO1@0", "base\nO2@1", "base\nO1@9"])
def test_bad_scripts(text):
    with pytest.raises(InvalidGraphError):
        build(TreeBuildScript.parse(text))


def test_colouring_validated():
    with pytest.raises(InvalidGraphError):
        TwoColoredTree(path(4), (Color.AMBER, Color.BLUE, Color.BLUE, Color.AMBER))


@pytest.mark.parametrize("seed", range(40))
def test_scripted_members_roundtrip(seed):
    rng = random.Random(seed)
    t = build(random_script(rng, rng.randint(0, 6)))
    assert is_tree(t.tree)
    assert 2 * gamma_esp(t.tree) == t.tree.n
    assert check_esd(t.tree, esd_set_from_coloring(t)) is not None
    found = recognize(t.tree)
    assert found is not None and found.color == t.color
    script, order = deconstruct(t)
    rebuilt = build(script)
    # order maps built labels back onto the input tree
    assert sorted(order) == list(range(t.tree.n))
    for u, v in rebuilt.tree.edges():
        assert t.tree.has_edge(order[u], order[v])
    assert all(rebuilt.color[i] == t.color[order[i]] for i in range(t.tree.n))


def test_non_members():
    assert recognize(star(4)) is None
    assert recognize(path(6)) is None  # gamma_esp(P6) = 4 > 3
    assert recognize(subdivided_star(3)) is None
    assert recognize(path(8)) is not None


def test_recognize_needs_tree():
    with pytest.raises(InvalidGraphError):
        recognize(cycle(4))
    with pytest.raises(InvalidGraphError):
        recognize(Graph.empty(1))


def test_recognizer_agrees_with_solver_on_random_trees():
    rng = random.Random(99)
    for _ in range(300):
        t = random_tree(rng, rng.randint(2, 11))
        assert (recognize(t) is not None) == (2 * gamma_esp(t) == t.n)
