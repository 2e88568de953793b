"""Named graph families and the ``family:params`` spec strings that select them.

Labelling conventions:

* ``path:n`` and ``cycle:n`` are labelled ``0..n-1`` in order.
* ``kbip:a,b`` puts the first part on ``0..a-1`` and the second on ``a..a+b-1``.
* ``star:n`` is ``K_{1,n-1}`` with centre ``0`` and leaves ``1..n-1``.
* ``extremal:n,g`` with ``t = n - g`` uses ``U = 0..t-1`` and ``W = t..2t-1``;
  ``u_i w_j`` is a non-edge exactly when ``i != j``, every other pair is an edge.
* ``substar:k`` has centre ``0``, subdivision vertices ``1..k`` and leaves
  ``k+1..2k`` with edges ``0-i`` and ``i-(k+i)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import InvalidGraphError
from .graph import Graph

ALIASES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "kbip": "complete_bipartite",
    "complete_bipartite": "complete_bipartite",
    "star": "star",
    "extremal": "size_extremal",
    "size_extremal": "size_extremal",
    "substar": "subdivided_star",
    "subdivided_star": "subdivided_star",
}

ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "star": 1,
    "size_extremal": 2,
    "subdivided_star": 1,
}

SHORT_NAMES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "complete_bipartite": "kbip",
    "star": "star",
    "size_extremal": "extremal",
    "subdivided_star": "substar",
}


@dataclass(frozen=True)
class FamilyQuery:
    """A graph family tag plus its integer parameters."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in ARITY:
            raise InvalidGraphError(f"unknown family {self.family!r}")
        if len(self.params) != ARITY[self.family]:
            raise InvalidGraphError(
                f"family {self.family} takes {ARITY[self.family]} parameter(s), got {len(self.params)}"
            )

    @classmethod
    def parse(cls, spec: str) -> FamilyQuery:
        """Parse strings such as ``"cycle:12"`` or ``"kbip:3,4"``."""
        name, sep, rest = spec.strip().partition(":")
        if not sep or name not in ALIASES:
            raise InvalidGraphError(f"cannot parse family spec {spec!r}")
        try:
            params = tuple(int(tok) for tok in rest.split(","))
        except ValueError:
            raise InvalidGraphError(f"non-integer parameter in {spec!r}") from None
        return cls(ALIASES[name], params)

    def __str__(self):
        return f"{SHORT_NAMES[self.family]}:{','.join(map(str, self.params))}"


def _require(cond: bool, message: str):
    if not cond:
        raise InvalidGraphError(message)


def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, "complete needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, "complete_bipartite needs a >= 1 and b >= 1")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star(n: int) -> Graph:
    _require(n >= 2, "star needs n >= 2")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def size_extremal(n: int, gamma: int) -> Graph:
    t = n - gamma
    _require(gamma <= n - 1, "size_extremal needs gamma <= n - 1")
    _require(2 * t <= n, "size_extremal needs 2(n - gamma) <= n, i.e. gamma >= ceil(n/2)")
    missing = {(i, t + j) for i in range(t) for j in range(t) if i != j}
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in missing]
    return Graph.from_edges(n, edges)


def subdivided_star(k: int) -> Graph:
    _require(k >= 2, "subdivided_star needs k >= 2")
    edges = [(0, i) for i in range(1, k + 1)] + [(i, k + i) for i in range(1, k + 1)]
    return Graph.from_edges(2 * k + 1, edges)


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "size_extremal": size_extremal,
    "subdivided_star": subdivided_star,
}


def generate(spec) -> Graph:
    """Build a family member from a ``FamilyQuery`` or a spec string."""
    if isinstance(spec, str):
        spec = FamilyQuery.parse(spec)
    return _BUILDERS[spec.family](*spec.params)
