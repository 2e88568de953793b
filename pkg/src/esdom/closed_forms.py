"""Exact values of the end super domination number and of the number of
minimum ESD-sets for named families, plus explicit optimal sets.

Everything is integer arithmetic. Vertex labels follow
:mod:`esdom.generators`; where a construction is naturally written with
1-based path indices ``v_1..v_n`` the code uses ``v_i -> i - 1``.
"""

from __future__ import annotations

from .exceptions import InvalidGraphError
from .generators import FamilyQuery
from .graph import VertexSet


def _query(q) -> FamilyQuery:
    return FamilyQuery.parse(q) if isinstance(q, str) else q


def _out_of_range(q: FamilyQuery, need: str):
    raise InvalidGraphError(f"{q}: no closed form; requires {need}")


def order(q) -> int:
    q = _query(q)
    if q.family == "complete_bipartite":
        return q.params[0] + q.params[1]
    if q.family == "size_extremal":
        return q.params[0]
    if q.family == "subdivided_star":
        return 2 * q.params[0] + 1
    return q.params[0]


def gamma_esp_formula(q) -> int:
    q = _query(q)
    fam, p = q.family, q.params
    if fam == "path":
        n = p[0]
        if n < 2:
            _out_of_range(q, "n >= 2")
        k, r = divmod(n, 4)
        return (2 * k, 2 * k + 1, 2 * k + 2, 2 * k + 2)[r]
    if fam == "cycle":
        n = p[0]
        if n < 3:
            _out_of_range(q, "n >= 3")
        if n % 4 in (0, 3):
            return (n + 1) // 2
        return (n + 2) // 2
    if fam == "complete":
        n = p[0]
        if n < 1:
            _out_of_range(q, "n >= 1")
        return n if n <= 2 else n - 1
    if fam == "complete_bipartite":
        a, b = p
        if min(a, b) < 2:
            _out_of_range(q, "both parts >= 2 (use star for K_1,m)")
        return a + b - 2
    if fam == "star":
        n = p[0]
        if n < 3:
            _out_of_range(q, "n >= 3 (star:2 is complete:2)")
        return n - 1
    _out_of_range(q, "a path, cycle, complete, complete bipartite or star family")


def n_esp_formula(q) -> int:
    q = _query(q)
    fam, p = q.family, q.params
    if fam == "path":
        n = p[0]
        if n < 2:
            _out_of_range(q, "n >= 2")
        k, r = divmod(n, 4)
        if r == 0:
            return 1
        if r == 1:
            return 2 * k + 1
        if r == 2:
            num = 5 * k * k + 5 * k + 2
            assert num % 2 == 0
            return num // 2
        return k + 1
    if fam == "cycle":
        n = p[0]
        if n < 3:
            _out_of_range(q, "n >= 3")
        r = n % 4
        if r == 0:
            return 4
        if r == 1:
            return 2 * n
        if r == 2:
            num = 5 * n * (n - 2)
            assert num % 8 == 0
            return num // 8
        return n
    if fam == "complete":
        n = p[0]
        if n < 3:
            _out_of_range(q, "n >= 3")
        return n
    if fam == "complete_bipartite":
        a, b = p
        if min(a, b) < 2:
            _out_of_range(q, "both parts >= 2")
        return a * b
    if fam == "star":
        if p[0] < 2:
            _out_of_range(q, "n >= 2")
        return 1
    _out_of_range(q, "a path, cycle, complete, complete bipartite or star family")


def _block_pattern(n: int) -> list[int]:
    # Blocks {v_{4i+1}, v_{4i+4}}, then a tail fixed by n mod 4.
    k, r = divmod(n, 4)
    members = []
    for i in range(k):
        members += [4 * i, 4 * i + 3]
    tail = {0: [], 1: [4 * k], 2: [4 * k, 4 * k + 1], 3: [4 * k, 4 * k + 2]}[r]
    return members + tail


def construct_optimal_set(q) -> VertexSet:
    """An optimal ESD-set built directly from the family's structure.

    Paths and cycles take ``v_1, v_4`` out of every block of four consecutive
    vertices and finish with ``v_{4k+1}`` (n = 4k+1), ``v_{4k+1}, v_{4k+2}``
    (n = 4k+2) or ``v_{4k+1}, v_{4k+3}`` (n = 4k+3). Complete graphs drop
    vertex ``n-1``, complete bipartite graphs drop the last vertex of each
    part and stars keep all leaves.
    """
    q = _query(q)
    gamma_esp_formula(q)  # range check
    fam, p = q.family, q.params
    n = order(q)
    if fam in ("path", "cycle"):
        members = _block_pattern(n)
    elif fam == "complete":
        members = list(range(n)) if n <= 2 else list(range(n - 1))
    elif fam == "complete_bipartite":
        a, b = p
        members = [v for v in range(n) if v not in (a - 1, a + b - 1)]
    else:
        members = list(range(1, n))
    return VertexSet.from_iterable(members, n)
