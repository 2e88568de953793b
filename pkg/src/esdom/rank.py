"""Exact rank of integer matrices, and the adjacency-rank lower bound
``rank(A) >= n - gamma_esp`` for connected graphs.

Rank is taken over the rationals using fraction-free (Bareiss) elimination on
Python integers, so no tolerance is involved anywhere.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .exceptions import InvalidGraphError
from .graph import Graph, complete_bipartite_parts

IntMatrix = list[list[int]]

_CHECK_PRIMES = (2_147_483_647, 1_000_000_007, 998_244_353)


def adjacency_matrix(g: Graph) -> IntMatrix:
    if g.n < 1:
        raise InvalidGraphError("adjacency matrix needs n >= 1")
    return [[(g.adj[i] >> j) & 1 for j in range(g.n)] for i in range(g.n)]


def rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination.

    Pivots are the first non-zero entry of each column, scanning columns left
    to right. Every update ``(p*a - b*c) // prev`` divides exactly.
    """
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        top = a[r]
        for i in range(r + 1, rows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, cols):
                row[j] = (p * row[j] - f * top[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == rows:
            break
    return r


def rank_mod_p(m: Sequence[Sequence[int]], p: int) -> int:
    a = [[int(x) % p for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        top = [x * inv % p for x in a[r]]
        a[r] = top
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], top)]
        r += 1
    return r


def modular_rank(m: Sequence[Sequence[int]], primes=_CHECK_PRIMES) -> int:
    """Cross-check oracle: the largest rank over several prime fields.

    Rank mod ``p`` never exceeds the rational rank and equals it unless ``p``
    divides every maximal non-zero minor.
    """
    return max(rank_mod_p(m, p) for p in primes)


class RankBound(NamedTuple):
    rank: int
    n_minus_gamma: int
    holds: bool
    equality: bool
    complete_bipartite: bool

    @property
    def characterization_ok(self) -> bool:
        """Equality happens exactly on complete bipartite graphs with parts >= 2."""
        return self.equality == self.complete_bipartite


def rank_bound_check(g: Graph, gamma_esp: int) -> RankBound:
    if g.n < 1 or not g.is_connected():
        raise InvalidGraphError("rank bound needs a connected graph")
    rk = rank(adjacency_matrix(g))
    bound = g.n - gamma_esp
    parts = complete_bipartite_parts(g)
    kbip = parts is not None and min(len(parts[0]), len(parts[1])) >= 2
    return RankBound(rk, bound, rk >= bound, rk == bound, kbip)
