import random

import pytest

from esdom.audit import Status, audit_all, audit_modifications, audit_nordhaus_gaddum, audit_static, is_size_extremal
from esdom.generators import complete, complete_bipartite, cycle, path, size_extremal, star, subdivided_star
from esdom.graph import Graph, disjoint_union, remove_edge
from esdom.solver import gamma_esp

from .conftest import random_graph


def _record(report, check_id, index=()):
    (rec,) = [r for r in report.by_id(check_id) if r.index == tuple(index)]
    return rec


def test_records_render_as_lines():
    report = audit_static(path(4))
    line = _record(report, "half_n_le_esd").to_line()
    assert line == "CHECK half_n_le_esd PASS lhs=4 rhs=4 sharp=1"
    assert all(ln.startswith("CHECK ") for ln in report.to_text().splitlines())


def test_path4_edge_removal_hits_plus_two():
    rec = _record(audit_modifications(path(4)), "edge_removal_upper", (1, 2))
    assert rec.status is Status.PASS and rec.sharp
    assert rec.lhs == gamma_esp(path(4)) + 2


def test_k4_minus_edge_hits_minus_one():
    g = remove_edge(complete(4), 0, 1)
    rec = _record(audit_modifications(g), "edge_removal_lower", (2, 3))
    assert rec.sharp and rec.lhs == gamma_esp(g) - 1


@pytest.mark.parametrize("k", [2, 3, 4])
def test_subdivided_star_centre_removal(k):
    g = subdivided_star(k)
    rec = _record(audit_modifications(g), "vertex_removal_upper", (0,))
    assert rec.sharp and rec.lhs == gamma_esp(g) + k - 1


@pytest.mark.parametrize("n", range(6, 13))
def test_size_extremal_attains_upper_bound(n):
    for gamma in range((n + 1) // 2, n):
        g = size_extremal(n, gamma)
        assert gamma_esp(g) == gamma
        rec = _record(audit_static(g), "size_upper")
        assert rec.sharp
        assert is_size_extremal(g, n - gamma)


def test_size_extremal_recogniser_negative():
    assert not is_size_extremal(cycle(6), 3)
    assert is_size_extremal(complete(5), 1)


def test_skips_are_reported():
    report = audit_static(disjoint_union(path(2), cycle(4)))
    assert _record(report, "esd_le_degree_ratio").status is Status.SKIP
    assert _record(report, "size_lower").status is Status.SKIP
    assert _record(report, "rank_lower").status is Status.SKIP
    assert _record(audit_nordhaus_gaddum(path(2)), "ng_sum_lower").status is Status.SKIP


def test_tree_family_equality():
    report = audit_static(path(8))
    rec = _record(report, "size_lower_equality_iff_tree_family")
    assert rec.status is Status.PASS and rec.sharp


@pytest.mark.parametrize("g", [path(5), cycle(7), star(5), complete(5), complete_bipartite(3, 3), Graph.empty(4),
                               disjoint_union(path(2), Graph.empty(1))])
def test_named_graphs_pass(g):
    assert audit_all(g).ok


def test_random_graphs_pass():
    rng = random.Random(3)
    for _ in range(40):
        g = random_graph(rng, rng.randint(4, 9), rng.choice((0.3, 0.5, 0.7)))
        report = audit_all(g)
        assert report.ok, report.failures
