import pytest

from zerolen import (
    c24_interval_witness,
    engine_for,
    family_branches,
    family_member,
    intersection_witness,
    interval_criterion_c24,
    is_aamp,
    make_group,
    match_family,
    presentation_equivalence,
    witness_sequence,
)
from zerolen.families import family_members_up_to


def test_member_examples():
    assert family_member("T46", "L6", y=0, k=0) == {3, 5, 6}
    assert family_member("T46", "L2", y=0, k=0) == {2, 4}
    assert family_member("P33-C3C22", y=0, k=1) == {2, 3}
    assert family_member("T48", "L2", y=0, k=1) == {2, 5}
    assert family_member("T47", "L4", y=0, k=1) == {2, 4, 5}
    with pytest.raises(ValueError):
        family_member("T46", "L5", y=0, k=3)  # excluded parameter
    with pytest.raises(ValueError):
        family_member("NOPE")


def test_match_examples():
    g5 = make_group([5])
    matches = match_family(g5, [2, 5])
    assert any(m.family == "T46" and m.branch == "L4" and (m.y, m.k) == (0, 1)
               for m in matches)
    assert match_family(g5, [2, 4])
    g16 = make_group([2, 2, 2, 2])
    assert any(m.branch.startswith("L3") for m in match_family(g16, range(4, 11)))
    assert not match_family(g16, [2, 5, 11])


def test_interval_criterion_examples():
    assert not interval_criterion_c24(2, 5)
    assert interval_criterion_c24(4, 10)
    assert not interval_criterion_c24(3, 8)
    assert interval_criterion_c24(2, 2)
    with pytest.raises(ValueError):
        interval_criterion_c24(1, 3)


def test_c24_interval_witnesses_small():
    eng = engine_for(make_group([2, 2, 2, 2]))
    for l1, l2 in ((2, 3), (2, 4), (3, 6), (3, 7), (4, 9), (4, 10), (5, 12)):
        wit = c24_interval_witness(l1, l2)
        assert eng.length_set(wit) == tuple(range(l1, l2 + 1))
    with pytest.raises(ValueError):
        c24_interval_witness(2, 5)


def test_witness_examples():
    g5 = make_group([5])
    wit = witness_sequence("T46", "L4", y=0, k=1)
    assert engine_for(g5).length_set(wit) == (2, 5)
    w2 = witness_sequence("T47", "L4", y=0, k=1)
    assert engine_for(make_group([2, 4])).length_set(w2) == (2, 4, 5)
    w3 = witness_sequence("T48", "L2", y=0, k=1)
    assert engine_for(make_group([2, 2, 2, 2])).length_set(w3) == (2, 5)


def test_intersection_witnesses_across_groups():
    for spec in ("3", "4", "2x2", "2x2x2", "5", "2x4", "3x3", "2x2x2x2"):
        G = make_group([int(t) for t in spec.split("x")])
        eng = engine_for(G)
        for (y, k) in ((0, 1), (1, 2), (0, 3), (2, 0)):
            wit = intersection_witness(G, y, k)
            assert eng.length_set(wit) == tuple(range(y + 2 * k, y + 3 * k + 1))


def test_presentation_equivalences():
    for pair in ("T41", "T47-L2", "T48-L3"):
        rep = presentation_equivalence(pair, bound=30)
        assert rep.equal, (pair, rep.only_first[:3], rep.only_second[:3])
    with pytest.raises(ValueError):
        presentation_equivalence("T99")


def test_identical_presentations_trivially_equal():
    from zerolen.families import _members_from_branches

    branches = [b for b in family_branches(make_group([5]))]
    a = _members_from_branches(branches, 20)
    b = _members_from_branches(branches, 20)
    assert a == b and len(a) > 10


def test_family_members_are_aamps():
    # every member with min >= 2 is an AAMP with difference in {1,2,3}, bound <= 4
    for spec in ("5", "2x4", "3x3", "2x2x2x2"):
        G = make_group([int(t) for t in spec.split("x")])
        for member in family_members_up_to(G, 14):
            if min(member) < 2:
                continue
            assert any(
                is_aamp(member, d, M) is not None
                for d in (1, 2, 3)
                for M in range(5)
            ), sorted(member)


def test_every_branch_witness_matches_member_on_grid():
    for br in family_branches():
        if br.witness_fn is None:
            continue
        eng = engine_for(br.group)
        for k in br.sweep_ks[:3]:
            for y in (0, 2):
                if br.try_member(y, k) is None:
                    continue
                assert eng.length_set(br.witness(y, k)) == tuple(
                    sorted(br.member(y, k))
                ), (br.id, y, k)
