"""Exact minimum dominating, super dominating and end super dominating sets.

The search works one connected component at a time. For a target size ``k``
it walks the vertices in label order, deciding for each one whether it joins
the set (tried first) or the complement. A complement vertex is only admitted
while every complement vertex still has a neighbour that can become its
private witness, so dead branches are cut as soon as they appear. Target
sizes are tried from a per-component lower bound upwards; the first size
with a solution is the optimum, and the include-first order makes the first
solution found the lexicographically smallest one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from .exceptions import CapExceededError, InvalidGraphError
from .graph import Graph, VertexSet, components, iter_bits, popcount
from .verify import EsdCertificate, check_esd

DEFAULT_CAP = 24
ORACLE_CAP = 16


class Mode(str, Enum):
    DOM = "dom"
    SUPER = "super"
    ESD = "esd"


@dataclass(frozen=True)
class SolveResult:
    mode: Mode
    value: int
    witness_set: VertexSet
    certificate: Optional[EsdCertificate] = None


@dataclass(frozen=True)
class EnumerationResult:
    value: int
    count: int
    sets: Optional[list[VertexSet]] = None


class _Search:
    def __init__(self, g: Graph, mode: Mode):
        self.adj = g.adj
        self.n = g.n
        self.mode = mode
        if mode is Mode.ESD:
            self.forced = sum(1 << v for v in range(g.n) if popcount(g.adj[v]) <= 1)
        else:
            self.forced = 0

    def _has_witness(self, u: int, out: int) -> bool:
        bu = 1 << u
        adj = self.adj
        for w in iter_bits(adj[u] & ~out):
            if adj[w] & out == bu:
                return True
        return False

    def _can_exclude(self, v: int, out: int) -> bool:
        adj = self.adj
        bv = 1 << v
        out2 = out | bv
        if self.mode is Mode.DOM:
            for u in iter_bits((adj[v] & out) | bv):
                if not adj[u] & ~out2:
                    return False
            return True
        affected = adj[v] | bv
        for w in iter_bits(adj[v]):
            affected |= adj[w]
        for u in iter_bits(affected & out2):
            if not self._has_witness(u, out2):
                return False
        return True

    def run(self, k: int, first_only: bool) -> list[int]:
        n = self.n
        found: list[int] = []
        out_target = n - k
        forced = self.forced

        def dfs(i, inside, out, n_in, n_out):
            if i == n:
                found.append(inside)
                return first_only
            bit = 1 << i
            if n_in < k:
                if dfs(i + 1, inside | bit, out, n_in + 1, n_out):
                    return True
            if n_out < out_target and not forced & bit and self._can_exclude(i, out):
                if dfs(i + 1, inside, out | bit, n_in, n_out + 1):
                    return True
            return False

        if popcount(forced) <= k:
            dfs(0, 0, 0, 0, 0)
        return found

    def lower_bound(self) -> int:
        n = self.n
        if self.mode is Mode.DOM:
            return 1
        if self.mode is Mode.ESD and n <= 2:
            return n
        return max((n + 1) // 2, popcount(self.forced))


@lru_cache(maxsize=4096)
def _optimal_component(g: Graph, mode: Mode, enumerate_all: bool) -> tuple[int, tuple[int, ...]]:
    search = _Search(g, mode)
    for k in range(search.lower_bound(), g.n + 1):
        found = search.run(k, first_only=not enumerate_all)
        if found:
            return k, tuple(found)
    raise AssertionError("the full vertex set is always feasible")


def _check_input(g: Graph, cap: int):
    if g.n < 1:
        raise InvalidGraphError("solver needs a graph with n >= 1")
    if g.n > cap:
        raise CapExceededError(g.n, cap)


def solve(g: Graph, mode=Mode.ESD, cap: int = DEFAULT_CAP) -> SolveResult:
    """Minimum set for ``mode`` with its lexicographically smallest optimum.

    The graph is split into connected components; optima add up and the union
    of per-component lexicographic minima is the global lexicographic minimum.
    """
    mode = Mode(mode)
    _check_input(g, cap)
    total = 0
    bits = 0
    for comp in components(g):
        sub, old = g.induced(comp.bits)
        k, found = _optimal_component(sub, mode, False)
        total += k
        bits |= sum(1 << old[v] for v in iter_bits(found[0]))
    witness = VertexSet(bits, g.n)
    cert = check_esd(g, witness) if mode is Mode.ESD else None
    return SolveResult(mode, total, witness, cert)


def gamma_esp(g: Graph, cap: int = DEFAULT_CAP) -> int:
    return solve(g, Mode.ESD, cap).value


def enumerate_minimum_esd(g: Graph, materialize: bool = False, cap: int = DEFAULT_CAP) -> EnumerationResult:
    """Count (and optionally list) every minimum end super dominating set.

    Listed sets are in lexicographic order of their sorted members.
    """
    _check_input(g, cap)
    value = 0
    count = 1
    per_comp = []
    for comp in components(g):
        sub, old = g.induced(comp.bits)
        k, found = _optimal_component(sub, Mode.ESD, True)
        value += k
        count *= len(found)
        if materialize:
            per_comp.append([sum(1 << old[v] for v in iter_bits(f)) for f in found])
    sets = None
    if materialize:
        masks = [sum(combo) for combo in itertools.product(*per_comp)]
        sets = sorted((VertexSet(b, g.n) for b in masks), key=VertexSet.to_list)
    return EnumerationResult(value, count, sets)


# Independent oracle: plain set arithmetic, no pruning, no bitmask tricks.

def _oracle_predicate(g: Graph, mode: Mode):
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    vertices = set(range(g.n))

    def dominating(s):
        return all(u in s or nbrs[u] & s for u in vertices)

    def super_dominating(s):
        if not dominating(s):
            return False
        for u in vertices - s:
            if not any(nbrs[v] - s == {u} for v in s):
                return False
        return True

    def end_super_dominating(s):
        return all(len(nbrs[u]) >= 2 for u in vertices - s) and super_dominating(s)

    return {Mode.DOM: dominating, Mode.SUPER: super_dominating, Mode.ESD: end_super_dominating}[mode]


def _oracle_check(g: Graph):
    if g.n < 1:
        raise InvalidGraphError("oracle needs a graph with n >= 1")
    if g.n > ORACLE_CAP:
        raise CapExceededError(g.n, ORACLE_CAP)


def brute_force_oracle(g: Graph, mode=Mode.ESD) -> SolveResult:
    """Exhaustive scan over subsets in increasing size (n <= 16)."""
    mode = Mode(mode)
    _oracle_check(g)
    pred = _oracle_predicate(g, mode)
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if pred(set(combo)):
                witness = VertexSet.from_iterable(combo, g.n)
                cert = check_esd(g, witness) if mode is Mode.ESD else None
                return SolveResult(mode, k, witness, cert)
    raise AssertionError("the full vertex set is always feasible")


def brute_force_enumerate(g: Graph) -> EnumerationResult:
    """All minimum ESD-sets by exhaustive scan (n <= 16)."""
    _oracle_check(g)
    pred = _oracle_predicate(g, Mode.ESD)
    for k in range(g.n + 1):
        hits = [combo for combo in itertools.combinations(range(g.n), k) if pred(set(combo))]
        if hits:
            sets = [VertexSet.from_iterable(c, g.n) for c in hits]
            return EnumerationResult(k, len(sets), sets)
    raise AssertionError("the full vertex set is always feasible")
