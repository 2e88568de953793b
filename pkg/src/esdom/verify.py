"""Membership tests for dominating, super dominating and end super dominating sets.

For a set ``S`` with complement ``C``, a vertex ``v`` in ``S`` *privately
witnesses* ``u`` in ``C`` when ``u`` is the only neighbour of ``v`` inside
``C``. ``S`` is super dominating when every vertex of ``C`` has such a
witness, and end super dominating when in addition every vertex of ``C`` has
degree at least two.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .exceptions import InvalidGraphError, NotEsdSetError
from .graph import Graph, VertexSet, iter_bits, popcount


class Role(str, Enum):
    MAIN = "MAIN"
    TEMPORARY = "TEMPORARY"
    STANDALONE = "STANDALONE"
    BACKUP = "BACKUP"


@dataclass(frozen=True)
class EsdCertificate:
    """Witness map proving that a set is end super dominating.

    ``witness[u]`` is the smallest-labelled vertex of the set whose only
    outside neighbour is ``u``; ``degrees[u]`` records ``deg(u)``.
    """

    witness: dict[int, int]
    degrees: dict[int, int]

    def validate(self, g: Graph, s) -> bool:
        """Re-check every claim of the certificate against ``g`` and ``s``."""
        bits = as_mask(g, s)
        comp = g.full_mask & ~bits
        if set(self.witness) != set(iter_bits(comp)):
            return False
        if len(set(self.witness.values())) != len(self.witness):
            return False
        for u, v in self.witness.items():
            if not bits >> v & 1 or g.adj[v] & comp != 1 << u:
                return False
            if self.degrees.get(u) != g.degree(u) or g.degree(u) < 2:
                return False
        return True

    def __str__(self):
        return ",".join(f"{u}->{v}" for u, v in sorted(self.witness.items()))


def as_mask(g: Graph, s) -> int:
    """Accept a ``VertexSet``, a raw bitmask or an iterable of vertices."""
    if isinstance(s, VertexSet):
        if s.n != g.n:
            raise InvalidGraphError(f"vertex set is over n={s.n}, graph has n={g.n}")
        return s.bits
    if isinstance(s, int):
        if s < 0 or s >> g.n:
            raise InvalidGraphError("vertex set has members outside the graph")
        return s
    return VertexSet.from_iterable(s, g.n).bits


def private_witnesses(g: Graph, bits: int) -> dict[int, int]:
    """Map each privately witnessed outside vertex to its smallest witness."""
    comp = g.full_mask & ~bits
    out: dict[int, int] = {}
    for v in iter_bits(bits):
        outside = g.adj[v] & comp
        if outside and not outside & (outside - 1):
            u = outside.bit_length() - 1
            out.setdefault(u, v)
    return out


def is_dominating(g: Graph, s) -> bool:
    bits = as_mask(g, s)
    covered = bits
    for v in iter_bits(bits):
        covered |= g.adj[v]
    return covered == g.full_mask


def is_super_dominating(g: Graph, s) -> bool:
    bits = as_mask(g, s)
    comp = g.full_mask & ~bits
    return len(private_witnesses(g, bits)) == popcount(comp)


def esd_violation(g: Graph, s) -> Optional[str]:
    """First violated end super domination condition, or ``None``.

    Complement vertices are scanned in increasing order; for each one the
    degree condition is reported before domination and witness failures.
    """
    bits = as_mask(g, s)
    comp = g.full_mask & ~bits
    witnesses = private_witnesses(g, bits)
    for u in iter_bits(comp):
        if g.degree(u) < 2:
            return f"degree<2 in complement: vertex {u} has degree {g.degree(u)}"
        if not g.adj[u] & bits:
            return f"not dominated: vertex {u} has no neighbour in the set"
        if u not in witnesses:
            return f"no private witness: vertex {u}"
    return None


def check_esd(g: Graph, s) -> Optional[EsdCertificate]:
    """Certificate if ``s`` is an end super dominating set, else ``None``."""
    bits = as_mask(g, s)
    if esd_violation(g, bits) is not None:
        return None
    witness = private_witnesses(g, bits)
    degrees = {u: g.degree(u) for u in witness}
    return EsdCertificate(dict(sorted(witness.items())), degrees)


def classify_roles(g: Graph, s) -> dict[int, Role]:
    """Label every vertex by its role relative to an ESD-set ``s``.

    Set members with exactly one outside neighbour are ``MAIN``, with several
    ``TEMPORARY`` and with none ``STANDALONE``; outside vertices are ``BACKUP``.
    """
    bits = as_mask(g, s)
    reason = esd_violation(g, bits)
    if reason is not None:
        raise NotEsdSetError(reason)
    comp = g.full_mask & ~bits
    roles = {}
    for v in range(g.n):
        if not bits >> v & 1:
            roles[v] = Role.BACKUP
            continue
        k = popcount(g.adj[v] & comp)
        roles[v] = Role.MAIN if k == 1 else Role.TEMPORARY if k > 1 else Role.STANDALONE
    return roles
