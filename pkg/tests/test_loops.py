import json

import pytest

from conftest import DATA, elem, gen_subgroup
from oracles import all_right_loops, brute_induced_op
from nrtloops import (
    all_subgroups,
    build_lemma2_witness,
    c_groupoid,
    canonical_nrt,
    enumerate_nrts,
    has_rip,
    induced_loop,
    is_left_transversal,
    is_normal,
    is_rcc,
    nrt_count,
    parse_group_id,
    prop1_check,
    subgroup_generate,
)
from nrtloops.loops import (
    RightLoop,
    cgroupoid_problems,
    loop_problems,
    right_translation,
    sigma_surjective_all,
    sigma_surjective_fast,
    solves_unit_equation,
)
from nrtloops.named import named_group
from nrtloops.transversal import transversal_from_reps

C2 = RightLoop.from_table([[0, 1], [1, 0]])
C3 = RightLoop.from_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
ONE = RightLoop.from_table([[0]])


def group_loop(G):
    return RightLoop.from_table(G.table)


def test_trivial_subgroup_gives_group_table(sym3):
    S = canonical_nrt(sym3, subgroup_generate(sym3, []))
    assert induced_loop(S).op == sym3.table


def test_whole_group_gives_one_element_loop(sym3):
    S = canonical_nrt(sym3, subgroup_generate(sym3, range(6)))
    assert induced_loop(S).op == ((0,),)


def test_a3_loops_are_c2(sym3, a3):
    loops = [induced_loop(S) for S in enumerate_nrts(sym3, a3)]
    assert len(loops) == 3
    assert all(L.op == ((0, 1), (1, 0)) for L in loops)


@pytest.mark.parametrize("name", ["a3", "h12"])
def test_golden_loops(sym3, name):
    H = gen_subgroup(sym3, "(1 2 3)" if name == "a3" else "(1 2)")
    golden = json.loads((DATA / f"sym3_{name}_loops.json").read_text())
    got = [{"reps": list(S.reps), **induced_loop(S).to_dict()} for S in enumerate_nrts(sym3, H)]
    assert got == golden
    for S in enumerate_nrts(sym3, H):
        op = brute_induced_op(sym3.table, H.elems, S.reps)
        L = induced_loop(S)
        assert all(S.reps[L.op[i][j]] == op[x, y]
                   for i, x in enumerate(S.reps) for j, y in enumerate(S.reps))


def test_golden_cgroupoid(sym3, h12):
    S = canonical_nrt(sym3, h12)
    C = c_groupoid(S)
    assert C.to_json() + "\n" == (DATA / "sym3_h12_canonical_cgroupoid.json").read_text()
    assert cgroupoid_problems(S, C) == []
    t = sym3.table
    for i, x in enumerate(S.reps):
        for k, h in enumerate(h12.elems):
            assert t[C.sigma[i][k]][S.reps[C.theta[i][k]]] == t[x][h]


def test_cgroupoid_identity_row(sym3, h12):
    for S in enumerate_nrts(sym3, h12):
        C = c_groupoid(S)
        assert list(C.sigma[0]) == list(h12.elems)
        assert all(th == 0 for th in C.theta[0])


def test_cgroupoid_normal_theta_fixes(sym3, a3):
    for S in enumerate_nrts(sym3, a3):
        C = c_groupoid(S)
        assert all(C.theta[i][k] == i for i in range(2) for k in range(3))
        assert all(f in a3 for row in C.f for f in row)


@pytest.mark.parametrize("ident", ["sym:3", "dih:4", "q8", "alt:4", "sym:4", "dih:6"])
def test_axioms_on_catalog(ident):
    G = parse_group_id(ident)
    for H in all_subgroups(G):
        if nrt_count(G, H) > 256:
            continue
        for S in enumerate_nrts(G, H):
            L = induced_loop(S)
            assert loop_problems(L) == []
            C = c_groupoid(S, L)
            assert cgroupoid_problems(S, C, L) == []
            trip = prop1_check(S)
            assert trip[0] == trip[1] == trip[2]
            assert sigma_surjective_fast(S) == trip[0]
            rip, r = has_rip(L)
            if rip:
                assert is_left_transversal(S)
                assert all(L.op[x][r[x]] == 0 for x in range(L.size))
            if is_rcc(L):
                assert is_left_transversal(S)
            if is_normal(G, H):
                m = L.size
                assert all(L.op[L.op[a][b]][c] == L.op[a][L.op[b][c]]
                           for a in range(m) for b in range(m) for c in range(m))


def test_right_translation():
    assert right_translation(C3, 0) == (0, 1, 2)
    assert right_translation(C2, 1) == (1, 0)
    assert right_translation(C3, 1) == (1, 2, 0)
    assert right_translation(C3, 2) == (2, 0, 1)


def test_rip():
    for G in (named_group("symmetric", 3), named_group("quaternion8"), named_group("dihedral", 4)):
        ok, r = has_rip(group_loop(G))
        assert ok and r == G.inv
    assert has_rip(ONE) == (True, (0,))


def test_rip_and_rcc_fail_somewhere(sym3, h12):
    loops = [induced_loop(S) for S in enumerate_nrts(sym3, h12)]
    assert not all(has_rip(L)[0] for L in loops)
    assert not all(is_rcc(L) for L in loops)


def test_rcc_groups():
    assert is_rcc(ONE)
    assert is_rcc(group_loop(named_group("cyclic", 6)))
    assert is_rcc(group_loop(named_group("dihedral", 5)))


def test_unit_equation():
    assert solves_unit_equation(group_loop(named_group("alternating", 4)))
    assert solves_unit_equation(ONE)
    order3 = [RightLoop.from_table(t) for t in all_right_loops(3)]
    assert len(order3) == 4
    verdicts = [solves_unit_equation(L) for L in order3]
    assert verdicts == [all(0 in row for row in L.op) for L in order3]
    assert False in verdicts


def test_sigma_surjective(sym3, a3, h12):
    for S in enumerate_nrts(sym3, a3):
        assert sigma_surjective_all(c_groupoid(S))
    W = build_lemma2_witness(sym3, h12)
    assert not sigma_surjective_all(c_groupoid(W))


def test_prop1_examples(sym3, a3, h12):
    for S in enumerate_nrts(sym3, a3):
        assert prop1_check(S) == (True, True, True)
    assert prop1_check(build_lemma2_witness(sym3, h12)) == (False, False, False)
    S = transversal_from_reps(sym3, h12, [elem(sym3, c) for c in ("()", "(1 3)", "(2 3)")])
    assert prop1_check(S) == (True, True, True)


def test_from_table_rejects():
    with pytest.raises(ValueError):
        RightLoop.from_table([[0, 1], [1, 1]])
    with pytest.raises(ValueError):
        RightLoop.from_table([[1, 0], [0, 1]])


def test_order3_loops_have_single_idempotent():
    for t in all_right_loops(3):
        assert [x for x in range(3) if t[x][x] == x] == [0]
