"""Input coercion for the estimator layer.

Graphs may be given as :class:`~esdom.graph.Graph`, as a square 0/1 adjacency
matrix (nested lists or a numpy array), as an edge-list string, or as any
networkx-style undirected simple graph (nodes are relabelled in sorted order).
"""

from __future__ import annotations

import numpy as np

from .edgelist import parse_edge_list
from .exceptions import InvalidGraphError
from .generators import FamilyQuery, generate
from .graph import Graph, VertexSet


def _from_networkx(X) -> Graph:
    if X.is_directed() or X.is_multigraph():
        raise InvalidGraphError("only simple undirected graphs are supported")
    nodes = sorted(X.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    edges = []
    for u, v in X.edges():
        if u == v:
            raise InvalidGraphError(f"self-loop at node {u!r}")
        edges.append((index[u], index[v]))
    return Graph.from_edges(len(nodes), edges)


def _from_matrix(X) -> Graph:
    a = np.asarray(X)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidGraphError(f"adjacency matrix must be square, got shape {a.shape}")
    if not np.isin(a, (0, 1)).all():
        raise InvalidGraphError("adjacency matrix entries must be 0 or 1")
    if a.shape[0] and np.diag(a).any():
        raise InvalidGraphError("adjacency matrix must have a zero diagonal")
    if not (a == a.T).all():
        raise InvalidGraphError("adjacency matrix must be symmetric")
    rows = [sum(1 << int(j) for j in np.flatnonzero(row)) for row in a]
    return Graph(a.shape[0], rows)


def check_graph(X) -> Graph:
    if isinstance(X, Graph):
        return X
    if isinstance(X, FamilyQuery):
        return generate(X)
    if isinstance(X, str):
        if ":" in X.split("\n", 1)[0]:
            return generate(X)
        return parse_edge_list(X)
    if hasattr(X, "is_directed") and hasattr(X, "edges"):
        return _from_networkx(X)
    return _from_matrix(X)


def check_vertex_set(s, g: Graph) -> VertexSet:
    """Coerce ``"0,3"``, an iterable of labels or a boolean mask of length n."""
    if isinstance(s, VertexSet):
        if s.n != g.n:
            raise InvalidGraphError(f"vertex set is over n={s.n}, graph has n={g.n}")
        return s
    if isinstance(s, str):
        return VertexSet.parse(s, g.n)
    arr = np.asarray(list(s))
    if arr.dtype == bool:
        if arr.shape != (g.n,):
            raise InvalidGraphError(f"boolean mask must have length {g.n}")
        return VertexSet.from_iterable(np.flatnonzero(arr).tolist(), g.n)
    return VertexSet.from_iterable([int(v) for v in arr.tolist()], g.n)


def check_cap(cap) -> int:
    if not isinstance(cap, (int, np.integer)) or isinstance(cap, bool) or cap < 1:
        raise InvalidGraphError(f"cap must be a positive integer, got {cap!r}")
    return int(cap)
