"""Simple undirected graphs on dense integer labels, stored as bitset rows.

Vertex ``v`` is bit ``1 << v``. Every graph is immutable; the modification
operators return new graphs and document how labels move so that vertex sets
found on the result can be mapped back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .exceptions import InvalidGraphError

MAX_VERTICES = 128


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def drop_bit(mask: int, pos: int) -> int:
    """Delete bit ``pos`` and shift every higher bit down by one."""
    low = mask & ((1 << pos) - 1)
    return low | ((mask >> (pos + 1)) << pos)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose set bits are the neighbours of ``v``.
    """

    __slots__ = ("n", "adj", "m", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0 or n > MAX_VERTICES:
            raise InvalidGraphError(f"n must be in 0..{MAX_VERTICES}, got {n}")
        if len(adj) != n:
            raise InvalidGraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        total = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise InvalidGraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise InvalidGraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise InvalidGraphError(f"asymmetric adjacency between {v} and {u}")
            total += popcount(row)
        self.n = n
        self.adj = adj
        self.m = total // 2
        self._hash = hash((n, adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge iterable; duplicate edges collapse."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def induced(self, mask: int) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``mask``, relabelled in increasing order.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        old = list(iter_bits(mask))
        index = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            rows.append(sum(1 << index[u] for u in iter_bits(self.adj[v] & mask)))
        return Graph(len(old), rows), old

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, edges={self.edges()})"


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices ``0..n-1`` of some graph, as a bitmask."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise InvalidGraphError(f"vertex set {self.bits:#x} has members >= n={self.n}")

    @classmethod
    def from_iterable(cls, vertices: Iterable[int], n: int) -> VertexSet:
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise InvalidGraphError(f"vertex {v} out of range for n={n}")
            bits |= 1 << v
        return cls(bits, n)

    @classmethod
    def parse(cls, text: str, n: int) -> VertexSet:
        """Parse the sorted comma-separated form, e.g. ``"0,3"``."""
        text = text.strip()
        if not text:
            return cls(0, n)
        try:
            vertices = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise InvalidGraphError(f"cannot parse vertex set {text!r}") from None
        return cls.from_iterable(vertices, n)

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __iter__(self):
        return iter_bits(self.bits)

    def __len__(self):
        return popcount(self.bits)

    def __contains__(self, v):
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __str__(self):
        return ",".join(str(v) for v in self)


def degree_profile(g: Graph) -> tuple[int, int]:
    """Return ``(min degree, max degree)``."""
    if g.n < 1:
        raise InvalidGraphError("degree profile needs n >= 1")
    degs = g.degrees()
    return min(degs), max(degs)


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(VertexSet(comp, g.n))
    return out


def has_universal_vertex(g: Graph) -> Optional[int]:
    """Smallest vertex adjacent to every other vertex, or ``None``."""
    for v in range(g.n):
        if g.adj[v] | (1 << v) == g.full_mask:
            return v
    return None


def find_induced_p4_or_c4(g: Graph) -> Optional[tuple[str, list[int]]]:
    """Find an induced ``P4`` or ``C4``.

    Both patterns are exactly the configurations ``a-b-c-d`` where ``bc`` is an
    edge, ``a`` sees ``b`` but not ``c`` and ``d`` sees ``c`` but not ``b``;
    the ``ad`` adjacency decides which one it is. Returns ``("P4", [a,b,c,d])``
    or ``("C4", [a,b,c,d])`` with vertices in path/cycle order.
    """
    for b, c in g.edges():
        left = g.adj[b] & ~g.adj[c] & ~(1 << c)
        right = g.adj[c] & ~g.adj[b] & ~(1 << b)
        if left and right:
            a = next(iter_bits(left))
            d = next(iter_bits(right))
            return ("C4" if g.has_edge(a, d) else "P4"), [a, b, c, d]
    return None


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidGraphError(f"cannot add edge ({u}, {v})")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, rows)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    """Graph minus the edge ``uv``; labels unchanged."""
    if not g.has_edge(u, v):
        raise InvalidGraphError(f"no such edge ({u}, {v})")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, rows)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract ``uv`` into one vertex and simplify.

    The merged vertex keeps label ``min(u, v)``; label ``max(u, v)`` is
    deleted and every higher label shifts down by one. Parallel edges merge
    and the loop from ``uv`` is dropped.
    """
    if not g.has_edge(u, v):
        raise InvalidGraphError(f"no such edge ({u}, {v})")
    keep, gone = min(u, v), max(u, v)
    merged = (g.adj[keep] | g.adj[gone]) & ~((1 << keep) | (1 << gone))
    rows = []
    for w in range(g.n):
        if w == gone:
            continue
        if w == keep:
            row = merged
        else:
            row = g.adj[w]
            if row >> gone & 1:
                row = (row & ~(1 << gone)) | (1 << keep)
        rows.append(drop_bit(row, gone))
    return Graph(g.n - 1, rows)


def remove_vertex(g: Graph, v: int) -> Graph:
    """Delete ``v``; labels above ``v`` shift down by one."""
    if not 0 <= v < g.n:
        raise InvalidGraphError(f"vertex {v} out of range for n={g.n}")
    rows = [drop_bit(g.adj[w], v) for w in range(g.n) if w != v]
    return Graph(g.n - 1, rows)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Place the graphs side by side, shifting labels of later ones."""
    rows = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.adj)
        offset += h.n
    return Graph(offset, rows)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and g.is_connected()


def complete_bipartite_parts(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """If ``g`` is complete bipartite with both parts non-empty, return the parts."""
    if g.n < 2 or g.adj[0] == 0:
        return None
    left = g.full_mask & ~g.adj[0]
    right = g.adj[0]
    for v in iter_bits(left):
        if g.adj[v] != right:
            return None
    for v in iter_bits(right):
        if g.adj[v] != left:
            return None
    return list(iter_bits(left)), list(iter_bits(right))
