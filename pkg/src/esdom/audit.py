"""Evaluate the known inequalities for end super domination on one graph.

Each check becomes a :class:`CheckRecord`. Checks whose hypotheses do not hold
for the graph are kept as ``SKIP`` records with the reason, so a report always
shows what was and was not covered. All comparisons are exact integers;
fractional bounds are cleared of denominators first (e.g. ``n/2 <= x`` is
recorded as ``n <= 2x``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Optional

from .graph import (
    Graph,
    complement,
    components,
    contract_edge,
    degree_profile,
    find_induced_p4_or_c4,
    has_universal_vertex,
    is_tree,
    iter_bits,
    remove_edge,
    remove_vertex,
)
from .rank import rank_bound_check
from .solver import DEFAULT_CAP, Mode, solve
from .trees import recognize


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    status: Status
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    sharp: bool = False
    reason: str = ""
    index: tuple[int, ...] = ()
    inputs: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def label(self) -> str:
        if not self.index:
            return self.check_id
        return f"{self.check_id}[{'-'.join(map(str, self.index))}]"

    def to_line(self) -> str:
        lhs = "-" if self.lhs is None else self.lhs
        rhs = "-" if self.rhs is None else self.rhs
        line = f"CHECK {self.label} {self.status.value} lhs={lhs} rhs={rhs} sharp={int(self.sharp)}"
        if self.reason:
            line += f" {self.reason}"
        return line


@dataclass
class AuditReport:
    records: list[CheckRecord] = field(default_factory=list)
    inputs: dict = field(default_factory=dict)

    def sort(self) -> AuditReport:
        self.records.sort(key=lambda r: (r.check_id, r.index))
        return self

    def extend(self, other: AuditReport) -> AuditReport:
        self.records.extend(other.records)
        self.inputs.update(other.inputs)
        return self.sort()

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status is Status.FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def by_id(self, check_id: str) -> list[CheckRecord]:
        return [r for r in self.records if r.check_id == check_id]

    def to_text(self) -> str:
        return "\n".join(r.to_line() for r in self.records) + ("\n" if self.records else "")


class _Recorder:
    def __init__(self, inputs: dict):
        self.report = AuditReport(inputs=inputs)

    def _add(self, check_id, status, lhs=None, rhs=None, sharp=False, reason="", index=()):
        self.report.records.append(
            CheckRecord(check_id, status, lhs, rhs, sharp, reason, tuple(index), self.report.inputs)
        )

    def le(self, check_id, lhs, rhs, index=()):
        """Record ``lhs <= rhs``; sharp when equal."""
        status = Status.PASS if lhs <= rhs else Status.FAIL
        self._add(check_id, status, lhs, rhs, lhs == rhs, index=index)

    def eq(self, check_id, lhs, rhs, sharp=None, reason="", index=()):
        status = Status.PASS if lhs == rhs else Status.FAIL
        self._add(check_id, status, lhs, rhs, lhs == rhs if sharp is None else sharp, reason, index)

    def skip(self, check_id, reason, index=()):
        self._add(check_id, Status.SKIP, reason=reason, index=index)


def _all_components_at_least(g: Graph, size: int) -> bool:
    return all(len(c) >= size for c in components(g))


def is_size_extremal(g: Graph, t: int) -> bool:
    """True when the non-edges of ``g`` are exactly ``K_{t,t}`` minus a perfect matching."""
    missing = complement(g)
    support = [v for v in range(g.n) if missing.adj[v]]
    if t <= 1:
        return not support
    if len(support) != 2 * t or missing.m != t * (t - 1):
        return False
    side = {}
    for start in support:
        if start in side:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in iter_bits(missing.adj[v]):
                if u not in side:
                    side[u] = side[v] ^ 1
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    # For t = 2 the missing graph is two disjoint edges and either side choice balances.
    if t > 2 and sum(side.values()) != t:
        return False
    return all(missing.degree(v) == t - 1 for v in support)


def audit_static(g: Graph, cap: int = DEFAULT_CAP) -> AuditReport:
    """Order, domination chain, degree, size, universal-vertex and rank checks."""
    n, m = g.n, g.m
    gamma = solve(g, Mode.DOM, cap).value
    gamma_sp = solve(g, Mode.SUPER, cap).value
    gamma_esp = solve(g, Mode.ESD, cap).value
    delta, big_delta = degree_profile(g)
    connected = g.is_connected()
    inputs = dict(n=n, m=m, gamma=gamma, gamma_sp=gamma_sp, gamma_esp=gamma_esp,
                  min_degree=delta, max_degree=big_delta, connected=connected)
    rec = _Recorder(inputs)

    rec.le("dom_le_super", gamma, gamma_sp)
    rec.le("super_le_esd", gamma_sp, gamma_esp)
    # Every ESD-set has at least as many members as non-members.
    rec.le("half_n_le_esd", n, 2 * gamma_esp)

    big_comps = _all_components_at_least(g, 3)
    chain = [
        ("dom_ge_one", 1, gamma),
        ("dom_le_half_n", 2 * gamma, n),
        ("half_n_le_super", n, 2 * gamma_sp),
        ("esd_le_n_minus_one", gamma_esp, n - 1),
    ]
    for check_id, lhs, rhs in chain:
        if big_comps:
            rec.le(check_id, lhs, rhs)
        else:
            rec.skip(check_id, "needs every component of order >= 3")

    if delta >= 2:
        rec.eq("esd_eq_super_min_degree_two", gamma_esp, gamma_sp)
        rec.le("esd_le_n_minus_dom", gamma_esp, n - gamma)
    else:
        rec.skip("esd_eq_super_min_degree_two", "needs min degree >= 2")
        rec.skip("esd_le_n_minus_dom", "needs min degree >= 2")

    if big_comps:
        rec.le("esd_le_degree_ratio", gamma_esp * (big_delta + 1), big_delta * n)
    else:
        rec.skip("esd_le_degree_ratio", "needs every component of order >= 3")

    t = n - gamma_esp
    size_bound = comb(n, 2) - t * (t - 1)
    rec.le("size_upper", m, size_bound)
    rec.eq("size_upper_equality_iff_extremal", int(m == size_bound), int(is_size_extremal(g, t)),
           sharp=m == size_bound)

    if connected:
        lower = 2 * t - 1
        rec.le("size_lower", lower, m)
        in_family = is_tree(g) and g.n >= 4 and recognize(g) is not None
        rec.eq("size_lower_equality_iff_tree_family", int(m == lower), int(in_family), sharp=m == lower)
    else:
        rec.skip("size_lower", "needs a connected graph")
        rec.skip("size_lower_equality_iff_tree_family", "needs a connected graph")

    if connected and n >= 3:
        universal = has_universal_vertex(g) is not None
        if gamma_esp == n - 1:
            rec.eq("universal_if_esd_n_minus_one", int(universal), 1, sharp=True)
        else:
            rec.eq("universal_if_esd_n_minus_one", 1, 1, sharp=False, reason="premise false")
        if find_induced_p4_or_c4(g) is None:
            rec.eq("universal_if_p4_c4_free", int(universal), 1, sharp=True)
        else:
            rec.eq("universal_if_p4_c4_free", 1, 1, sharp=False, reason="premise false")
    else:
        rec.skip("universal_if_esd_n_minus_one", "needs a connected graph with n >= 3")
        rec.skip("universal_if_p4_c4_free", "needs a connected graph with n >= 3")

    if connected and n >= 2:
        rb = rank_bound_check(g, gamma_esp)
        inputs["rank"] = rb.rank
        rec.le("rank_lower", rb.n_minus_gamma, rb.rank)
        rec.eq("rank_equality_iff_complete_bipartite", int(rb.equality), int(rb.complete_bipartite),
               sharp=rb.equality)
    else:
        rec.skip("rank_lower", "needs a connected graph with n >= 2")
        rec.skip("rank_equality_iff_complete_bipartite", "needs a connected graph with n >= 2")
    return rec.report.sort()


def audit_modifications(g: Graph, cap: int = DEFAULT_CAP) -> AuditReport:
    """Edge removal, edge contraction and vertex removal bounds for every edge and vertex."""
    base = solve(g, Mode.ESD, cap).value
    rec = _Recorder(dict(n=g.n, m=g.m, gamma_esp=base))
    degs = g.degrees()
    for u, v in g.edges():
        idx = (u, v)
        minus = solve(remove_edge(g, u, v), Mode.ESD, cap).value
        rec.le("edge_removal_lower", base - 1, minus, idx)
        rec.le("edge_removal_upper", minus, base + 2, idx)
        if max(degs[u], degs[v]) >= 3:
            rec.le("edge_removal_upper_high_degree", minus, base + 1, idx)
        else:
            rec.skip("edge_removal_upper_high_degree", "needs an endpoint of degree >= 3", idx)
        contracted = solve(contract_edge(g, u, v), Mode.ESD, cap).value
        rec.le("contraction_lower", base - 1, contracted, idx)
        rec.le("contraction_upper", contracted, base, idx)
    for v in range(g.n):
        if g.n < 2:
            rec.skip("vertex_removal_lower", "needs n >= 2", (v,))
            rec.skip("vertex_removal_upper", "needs n >= 2", (v,))
            continue
        minus = solve(remove_vertex(g, v), Mode.ESD, cap).value
        rec.le("vertex_removal_lower", base - 1, minus, (v,))
        rec.le("vertex_removal_upper", minus, base + degs[v] - 1, (v,))
    return rec.report.sort()


def audit_nordhaus_gaddum(g: Graph, cap: int = DEFAULT_CAP) -> AuditReport:
    """Sum and product bounds for a graph and its complement."""
    n = g.n
    if n < 3:
        rec = _Recorder(dict(n=n))
        for check_id in ("ng_product_lower", "ng_product_upper", "ng_sum_lower", "ng_sum_upper"):
            rec.skip(check_id, "needs n >= 3")
        return rec.report.sort()
    a = solve(g, Mode.ESD, cap).value
    b = solve(complement(g), Mode.ESD, cap).value
    rec = _Recorder(dict(n=n, gamma_esp=a, gamma_esp_complement=b))
    rec.le("ng_sum_lower", n, a + b)
    rec.le("ng_sum_upper", a + b, 2 * n - 1)
    rec.le("ng_product_lower", n * n, 4 * a * b)
    rec.le("ng_product_upper", a * b, n * (n - 1))
    return rec.report.sort()


def audit_all(g: Graph, cap: int = DEFAULT_CAP) -> AuditReport:
    report = audit_static(g, cap)
    report.extend(audit_modifications(g, cap))
    report.extend(audit_nordhaus_gaddum(g, cap))
    return report
