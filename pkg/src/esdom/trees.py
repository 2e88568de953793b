"""Two-coloured trees grown from a coloured ``P4``, and their recognition.

A member starts as the path ``0-1-2-3`` coloured blue, amber, amber, blue and
grows by two operations:

``O1@v``  attach a new amber vertex to amber ``v`` and hang a new blue leaf on it;
``O2@v``  attach a new blue-amber-amber-blue path to blue ``v`` by its first end.

New vertices get the next free labels in the order listed above. Members are
exactly the trees with ``gamma_esp = n/2``, and the blue vertices form an
optimal ESD-set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .exceptions import InvalidGraphError
from .graph import Graph, VertexSet, is_tree


class Color(str, Enum):
    AMBER = "A"
    BLUE = "B"


BASE_COLORS = (Color.BLUE, Color.AMBER, Color.AMBER, Color.BLUE)


@dataclass(frozen=True)
class TwoColoredTree:
    tree: Graph
    color: tuple[Color, ...]

    def __post_init__(self):
        problem = coloring_problem(self.tree, self.color)
        if problem:
            raise InvalidGraphError(f"not a valid two-coloured member: {problem}")

    @property
    def blue(self) -> list[int]:
        return [v for v, c in enumerate(self.color) if c is Color.BLUE]

    @property
    def amber(self) -> list[int]:
        return [v for v, c in enumerate(self.color) if c is Color.AMBER]

    def coloring_string(self) -> str:
        return ",".join(c.value for c in self.color)


def coloring_problem(tree: Graph, color) -> Optional[str]:
    """Describe why ``color`` is not a family colouring of ``tree``, if it isn't."""
    n = tree.n
    if not is_tree(tree):
        return "graph is not a tree"
    if len(color) != n:
        return "colour list length differs from n"
    if n < 4:
        return "order below 4"
    for v in range(n):
        if tree.degree(v) == 1 and color[v] is not Color.BLUE:
            return f"leaf {v} is not blue"
        opposite = sum(1 for u in tree.neighbors(v) if color[u] is not color[v])
        if opposite != 1:
            return f"vertex {v} has {opposite} neighbours of the other colour"
    return None


@dataclass(frozen=True)
class TreeBuildScript:
    """Operations applied, in order, after the base path."""

    steps: tuple[tuple[str, int], ...] = ()

    @classmethod
    def parse(cls, text: str) -> TreeBuildScript:
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines or lines[0] != "base":
            raise InvalidGraphError("script must start with a 'base' line")
        steps = []
        for ln in lines[1:]:
            op, sep, where = ln.partition("@")
            if op not in ("O1", "O2") or not sep:
                raise InvalidGraphError(f"bad script line {ln!r}; expected O1@v or O2@v")
            try:
                steps.append((op, int(where)))
            except ValueError:
                raise InvalidGraphError(f"bad attach vertex in {ln!r}") from None
        return cls(tuple(steps))

    def __str__(self):
        return "\n".join(["base"] + [f"{op}@{v}" for op, v in self.steps]) + "\n"


def build(script: TreeBuildScript) -> TwoColoredTree:
    edges = [(0, 1), (1, 2), (2, 3)]
    colors = list(BASE_COLORS)
    for i, (op, v) in enumerate(script.steps, start=1):
        n = len(colors)
        if not 0 <= v < n:
            raise InvalidGraphError(f"step {i} ({op}@{v}): vertex {v} does not exist yet")
        if op == "O1":
            if colors[v] is not Color.AMBER:
                raise InvalidGraphError(f"step {i} (O1@{v}): attach point must be amber")
            edges += [(v, n), (n, n + 1)]
            colors += [Color.AMBER, Color.BLUE]
        elif op == "O2":
            if colors[v] is not Color.BLUE:
                raise InvalidGraphError(f"step {i} (O2@{v}): attach point must be blue")
            edges += [(v, n), (n, n + 1), (n + 1, n + 2), (n + 2, n + 3)]
            colors += list(BASE_COLORS)
        else:
            raise InvalidGraphError(f"step {i}: unknown operation {op!r}")
    return TwoColoredTree(Graph.from_edges(len(colors), edges), tuple(colors))


def _perfect_matching(tree: Graph) -> Optional[list[int]]:
    # A tree has at most one perfect matching; match bottom-up from the leaves.
    n = tree.n
    parent = [-1] * n
    order = [0]
    seen = {0}
    for v in order:
        for u in tree.neighbors(v):
            if u not in seen:
                seen.add(u)
                parent[u] = v
                order.append(u)
    mate = [-1] * n
    for v in reversed(order[1:]):
        if mate[v] == -1:
            p = parent[v]
            if mate[p] != -1:
                return None
            mate[v], mate[p] = p, v
    if mate[0] == -1:
        return None
    return mate


def _coloring_from_matching(tree: Graph, mate: list[int]) -> Optional[tuple[Color, ...]]:
    # Matching edges join opposite colours, every other edge joins equal ones.
    n = tree.n
    side = [-1] * n
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in tree.neighbors(v):
            if side[u] == -1:
                side[u] = side[v] ^ (u == mate[v])
                queue.append(u)
    leaf_sides = {side[v] for v in range(n) if tree.degree(v) == 1}
    if len(leaf_sides) != 1:
        return None
    blue_side = leaf_sides.pop()
    return tuple(Color.BLUE if s == blue_side else Color.AMBER for s in side)


def _bfs_dist(adj: dict[int, set[int]], src: int) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _diametral_path(adj: dict[int, set[int]]) -> list[int]:
    # Smallest vertex of maximum eccentricity, walked to its smallest farthest vertex.
    best = None
    for v in sorted(adj):
        dist = _bfs_dist(adj, v)
        ecc = max(dist.values())
        if best is None or ecc > best[0]:
            best = (ecc, v, dist)
    ecc, start, dist = best
    end = min(u for u, d in dist.items() if d == ecc)
    back = _bfs_dist(adj, end)
    path = [start]
    while path[-1] != end:
        v = path[-1]
        path.append(min(u for u in adj[v] if back[u] == back[v] - 1))
    return path


def deconstruct(t: TwoColoredTree) -> tuple[TreeBuildScript, list[int]]:
    """Peel a coloured member back to its base path.

    Repeatedly takes a longest path ``v0 v1 v2 ...`` and removes ``v0 v1``
    (undoing ``O1`` at ``v2``) when ``v2`` has degree at least three, otherwise
    ``v0..v3`` (undoing ``O2`` at ``v4``). Returns a script and the list
    ``order`` with ``order[i]`` the vertex of ``t`` that gets label ``i`` when
    the script is built, so that ``build(script)`` is ``t`` relabelled.
    """
    color = t.color
    adj = {v: set(t.tree.neighbors(v)) for v in range(t.tree.n)}
    peeled = []
    while len(adj) > 4:
        path = _diametral_path(adj)
        if len(path) < 4:
            raise InvalidGraphError("tree cannot be peeled: diameter below 3")
        v0, v1, v2 = path[:3]
        if len(adj[v1]) != 2:
            raise InvalidGraphError(f"tree cannot be peeled at {v0}: its neighbour {v1} branches")
        if len(adj[v2]) >= 3:
            removed, attach, op = [v1, v0], v2, "O1"
            want = [Color.AMBER, Color.BLUE]
            if color[v2] is not Color.AMBER:
                raise InvalidGraphError(f"O1 undo at {v2}: attach point is not amber")
        else:
            if len(path) < 5 or len(adj[path[3]]) != 2:
                raise InvalidGraphError(f"tree cannot be peeled at {v0}: no pendant P4")
            removed, attach, op = [path[3], v2, v1, v0], path[4], "O2"
            want = list(BASE_COLORS)
            if color[attach] is not Color.BLUE:
                raise InvalidGraphError(f"O2 undo at {attach}: attach point is not blue")
        if [color[v] for v in removed] != want:
            raise InvalidGraphError(f"{op} undo at {attach}: removed vertices have wrong colours")
        peeled.append((op, attach, removed))
        for v in removed:
            for u in adj.pop(v):
                if u in adj:
                    adj[u].discard(v)
    leaves = sorted(v for v in adj if len(adj[v]) == 1)
    if len(adj) != 4 or len(leaves) != 2:
        raise InvalidGraphError("peeling did not end at a path on four vertices")
    base = [leaves[0]]
    while len(base) < 4:
        base.append(next(u for u in adj[base[-1]] if u not in base))
    if tuple(color[v] for v in base) != BASE_COLORS:
        raise InvalidGraphError("remaining path is not coloured blue, amber, amber, blue")
    order = list(base)
    label = {v: i for i, v in enumerate(order)}
    steps = []
    for op, attach, removed in reversed(peeled):
        steps.append((op, label[attach]))
        for v in removed:
            label[v] = len(order)
            order.append(v)
    return TreeBuildScript(tuple(steps)), order


def recognize(t: Graph) -> Optional[TwoColoredTree]:
    """A family colouring of the tree ``t``, or ``None`` if it has none."""
    if not is_tree(t):
        raise InvalidGraphError("input is not a tree")
    if t.n < 2:
        raise InvalidGraphError("recognition needs n >= 2")
    if t.n % 2 or t.n < 4:
        return None
    mate = _perfect_matching(t)
    if mate is None:
        return None
    color = _coloring_from_matching(t, mate)
    if color is None or coloring_problem(t, color):
        return None
    colored = TwoColoredTree(t, color)
    try:
        deconstruct(colored)
    except InvalidGraphError:
        return None
    return colored


def esd_set_from_coloring(t: TwoColoredTree) -> VertexSet:
    """The blue vertices, an ESD-set of size ``n/2``."""
    return VertexSet.from_iterable(t.blue, t.tree.n)
