import pytest

from tsalg.actions import trivial_action
from tsalg.fields import ExtField
from tsalg.galois import point_stabilizers, search_chr, stabilizer_of, verify_chr
from tsalg.groups import build_group, sylow_subgroup
from tsalg.trace import find_point


def test_hand_witness(c2_dreg):
    A = c2_dreg
    y, one = A.parse("y_1"), A.ring.one()
    G = A.group.whole()
    assert verify_chr(A, G, [(one, y), (one + y, one)])
    assert not verify_chr(A, G, [(one, y)])


def test_trivial_group_witness():
    A = trivial_action(2, ["x"], build_group([], degree=1))
    res = search_chr(A, A.group.whole(), 0, 0)
    assert res.found and res.witness.to_json() == [["1", "1"]]
    assert verify_chr(A, A.group.whole(), [(A.ring.one(), A.ring.one())])


def test_search_c2(c2_dreg):
    res = search_chr(c2_dreg, c2_dreg.group.whole(), 1, 1)
    assert res.found
    assert verify_chr(c2_dreg, c2_dreg.group.whole(), res.witness.pairs)


def test_search_c4_none(c4):
    assert search_chr(c4, c4.group.whole(), 2, 2).status == "none_at_bound"


def test_chr_for_sylow_implies_point():
    from tsalg.actions import d_reg, restrict_action
    from tsalg.groups import symmetric_group_s3
    A = d_reg(symmetric_group_s3(), 3)
    P = sylow_subgroup(A.group, 3)
    res = search_chr(A, P, 2, 1)
    assert res.found
    assert find_point(restrict_action(A, P), 1).found


def test_stabilizers_dehom(c4_dehom):
    rep = point_stabilizers(c4_dehom, 3)
    assert rep.p_locally_free and rep.worst_stabilizer_order == 1
    assert rep.points_checked == 4 + 16 + 64
    assert "k <= 3" in rep.to_json()["note"]


def test_stabilizers_level_one_dehom(c4_dehom):
    rep = point_stabilizers(c4_dehom, 1)
    assert rep.points_checked == 4 and rep.p_locally_free


def test_s3_perm_diagonal(s3_perm):
    assert len(stabilizer_of(s3_perm, (1, 1, 1), ExtField(3, 1))) == 6
    rep = point_stabilizers(s3_perm, 1)
    assert not rep.p_locally_free
    assert any(b["point"] == ["1", "1", "1"] for b in rep.levels[0].bad_points) or rep.levels[0].bad_points


def test_trivial_group_stabilizers():
    A = trivial_action(2, ["x"], build_group([], degree=1))
    rep = point_stabilizers(A, 2)
    assert rep.p_locally_free and rep.worst_stabilizer_order == 1


def test_kernel_counts_match_direct_evaluation(c4):
    F = ExtField(2, 2)
    from tsalg.galois import point_of_index, stabilizer_orders_at_level
    _, orders = stabilizer_orders_at_level(c4, 2)
    for idx in range(0, F.q ** 3, 7):
        pt = point_of_index(idx, F.q, 3)
        assert orders[idx] == len(stabilizer_of(c4, pt, F))


def test_cap():
    from tsalg.actions import d_reg
    from tsalg.groups import symmetric_group_s3
    A = d_reg(symmetric_group_s3(), 3)
    with pytest.raises(ValueError):
        point_stabilizers(A, 4)


def test_coupling(c2_dreg, c3_dreg, c4_dehom, c4, s3_perm):
    for A in (c2_dreg, c3_dreg, c4_dehom):
        assert find_point(A, 2).found
        assert point_stabilizers(A, 3 if A.nvars < 3 else 2).p_locally_free
    for A in (c4, s3_perm):
        assert not point_stabilizers(A, 1).p_locally_free
