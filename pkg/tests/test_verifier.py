import dataclasses

import pytest

from nrtloops import all_subgroups, analyze, named_group, parse_group_id, subgroup_generate, sweep, sweep_pairs
from nrtloops.errors import EnumerationTooLarge, SubgroupNotNormal
from nrtloops.transversal import Frame, nrt_at, is_left_transversal
from nrtloops.verifier import (
    check_prop2_and_remark1,
    check_theorem1,
    check_theorem2,
    quotient_iso_check,
    quotient_loop,
    remark1_witnesses,
)


def test_analyze_sym3_a3(sym3, a3):
    r = analyze(sym3, a3)
    assert r.is_normal and r.nrt_count == 3
    assert r.all_both_sided and r.all_isomorphic and r.all_rip and r.all_rcc
    assert not r.all_ar
    assert r.counts == {"bothSided": 3, "rip": 3, "rcc": 3, "ar": 0}
    assert r.witness is None
    assert check_theorem2(r) and check_theorem1(r) and check_prop2_and_remark1(r)
    assert r.passed


def test_analyze_sym3_h12(sym3, h12):
    r = analyze(sym3, h12)
    assert not r.is_normal and r.nrt_count == 4
    assert r.counts["bothSided"] == 2
    assert not r.all_isomorphic and r.iso_class_count == 3
    assert not (r.all_rip or r.all_rcc or r.all_ar)
    assert r.witness is not None and r.witness_is_left is False
    assert r.passed


def test_analyze_whole_group(sym3):
    r = analyze(sym3, subgroup_generate(sym3, range(6)))
    assert r.nrt_count == 1
    assert all(r.all_flags().values()) and r.is_normal


def test_negative_control(sym3, a3):
    r = dataclasses.replace(analyze(sym3, a3), is_normal=False)
    assert not check_theorem2(r)
    assert not check_theorem1(r)
    r2 = dataclasses.replace(analyze(sym3, subgroup_generate(sym3, range(6))), is_normal=False)
    assert not check_prop2_and_remark1(r2)
    assert not r2.passed


def test_cap(sym4):
    H = subgroup_generate(sym4, [1])
    with pytest.raises(EnumerationTooLarge):
        analyze(sym4, H, cap=100)


def test_early_exit(sym4):
    H = [h for h in all_subgroups(sym4) if len(h) == 2][0]
    r = analyze(sym4, H, early_exit=True)
    full = analyze(sym4, H)
    assert r.enumerated < r.nrt_count
    assert r.all_flags() == full.all_flags()
    assert check_theorem2(r)
    normal = analyze(sym4, all_subgroups(sym4)[-2], early_exit=True)
    assert normal.is_normal and normal.complete


def test_quotient(sym3, a3, h12):
    assert quotient_iso_check(sym3, a3)
    assert quotient_loop(Frame.of(sym3, a3)).op == ((0, 1), (1, 0))
    trivial = subgroup_generate(sym3, [])
    assert quotient_loop(Frame.of(sym3, trivial)).op == sym3.table
    assert quotient_iso_check(sym3, trivial)
    assert quotient_loop(Frame.of(sym3, subgroup_generate(sym3, range(6)))).op == ((0,),)
    with pytest.raises(SubgroupNotNormal):
        quotient_iso_check(sym3, h12)


def test_sweep_sym3():
    reports = sweep([named_group("symmetric", 3)], 6)
    assert len(reports) == 6
    assert all(r.passed for r in reports)
    assert remark1_witnesses(reports)


def test_sweep_empty():
    assert sweep([], 24) == []
    assert sweep([named_group("symmetric", 3)], 0) == []


def test_sweep_records_skips():
    entries = sweep_pairs([named_group("symmetric", 4)], 24, nrt_cap=500)
    skipped = [e for e in entries if e.skipped]
    assert skipped and all("EnumerationTooLarge" in e.skipped for e in skipped)
    assert len(entries) == 30
    big = sweep_pairs([named_group("symmetric", 5)], 200)
    assert len(big) == 1 and "GroupTooLarge" in big[0].skipped


def test_sweep_parallel_matches_serial():
    cat = [parse_group_id(i) for i in ("dih:4", "q8", "sym:3", "alt:4")]
    a = [e.to_json() for e in sweep_pairs(cat, 12)]
    b = [e.to_json() for e in sweep_pairs(cat, 12, jobs=2)]
    assert a == b


def test_counts_are_order_independent(sym4):
    H = [h for h in all_subgroups(sym4) if len(h) == 4][0]
    r = analyze(sym4, H)
    fr = Frame.of(sym4, H)
    idx = list(range(r.nrt_count))[::-1]
    assert sum(is_left_transversal(nrt_at(sym4, H, i, frame=fr)) for i in idx) == r.counts["bothSided"]


def test_report_key_order(sym3, a3):
    d = analyze(sym3, a3).to_dict()
    assert list(d)[:9] == ["group", "subgroup", "index", "isNormal", "nrtCount", "counts",
                           "allFlags", "isoClassCount", "checksPassed"]
