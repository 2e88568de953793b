import pytest

from esdom.exceptions import NotEsdSetError
from esdom.generators import complete, cycle, path, star
from esdom.graph import Graph
from esdom.verify import (
    EsdCertificate,
    Role,
    check_esd,
    classify_roles,
    esd_violation,
    is_dominating,
    is_super_dominating,
    private_witnesses,
)


def test_path4_ends_form_an_esd_set():
    cert = check_esd(path(4), [0, 3])
    assert cert is not None
    assert cert.witness == {1: 0, 2: 3}
    assert str(cert) == "1->0,2->3"
    assert cert.validate(path(4), [0, 3])


def test_violation_order_degree_first():
    # leaf 2 is outside: degree fails before domination or witnesses are looked at
    reason = esd_violation(star(4), [0, 1])
    assert reason.startswith("degree<2 in complement")
    assert esd_violation(star(4), [1, 2, 3]) is None


def test_not_dominated_and_no_witness():
    assert esd_violation(cycle(6), [0, 1, 2]) == "not dominated: vertex 4 has no neighbour in the set"
    # C4 with {0}: 1 and 3 dominated but 0 sees both of them
    assert esd_violation(cycle(4), [0, 2]).startswith("no private witness")


def test_dominating_chain_of_definitions():
    g = cycle(6)
    assert is_dominating(g, [0, 3])
    assert not is_super_dominating(g, [0, 3])
    assert is_super_dominating(g, [0, 1, 3, 4])
    assert private_witnesses(g, 0b011011) == {2: 1, 5: 0}


def test_certificate_rejects_wrong_witness():
    bad = EsdCertificate(witness={1: 3, 2: 0}, degrees={1: 2, 2: 2})
    assert not bad.validate(path(4), [0, 3])


def test_esd_on_complete_graph():
    assert check_esd(complete(4), [0, 1, 2]) is not None
    assert check_esd(complete(4), [0, 1]) is None


@pytest.mark.parametrize(
    "g, s, expected",
    [
        (path(4), [0, 3], {0: Role.MAIN, 3: Role.MAIN, 1: Role.BACKUP, 2: Role.BACKUP}),
        (star(4), [1, 2, 3], {1: Role.MAIN, 2: Role.MAIN, 3: Role.MAIN, 0: Role.BACKUP}),
        (cycle(6), [0, 1, 3, 4], {0: Role.MAIN, 1: Role.MAIN, 3: Role.MAIN, 4: Role.MAIN,
                                  2: Role.BACKUP, 5: Role.BACKUP}),
    ],
)
def test_roles(g, s, expected):
    assert classify_roles(g, s) == expected


def test_roles_temporary_and_standalone():
    g = Graph.from_edges(7, [(0, 1), (0, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 6), (5, 6)])
    roles = classify_roles(g, [0, 2, 3, 5, 6])
    assert roles == {0: Role.TEMPORARY, 2: Role.STANDALONE, 3: Role.STANDALONE, 5: Role.MAIN,
                     6: Role.MAIN, 1: Role.BACKUP, 4: Role.BACKUP}


def test_roles_reject_invalid_set():
    with pytest.raises(NotEsdSetError) as info:
        classify_roles(star(4), [0, 1])
    assert "degree<2" in info.value.reason
