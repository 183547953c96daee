"""Per-(G, H) analysis reports and catalog sweeps over the normality criteria."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import EnumerationTooLarge, NRTError, SubgroupNotNormal
from .groups import DEFAULT_SUBGROUP_CAP, Group, Subgroup, all_subgroups
from .iso import Classifier, are_isomorphic
from .loops import (
    RightLoop,
    has_rip,
    induced_loop,
    is_rcc,
    sigma_surjective_fast,
    solves_unit_equation,
)
from .transversal import (
    DEFAULT_NRT_CAP,
    Frame,
    Transversal,
    build_lemma2_witness,
    enumerate_nrts,
    is_ar_transversal,
    is_left_transversal,
    nrt_count,
)

log = logging.getLogger(__name__)

PROPERTIES = ("bothSided", "rip", "rcc", "ar")


@dataclass
class AnalysisReport:
    group: str
    group_order: int
    subgroup: tuple[int, ...]
    index: int
    is_normal: bool
    nrt_count: int
    counts: dict[str, int] = field(default_factory=lambda: dict.fromkeys(PROPERTIES, 0))
    iso_class_count: int = 0
    iso_class_sizes: list[int] = field(default_factory=list)
    witness: Optional[tuple[int, ...]] = None
    witness_is_left: Optional[bool] = None
    prop1_violations: list[int] = field(default_factory=list)
    lemma1_violations: list[int] = field(default_factory=list)
    quotient_ok: Optional[bool] = None
    enumerated: int = 0

    @property
    def subgroup_order(self) -> int:
        return len(self.subgroup)

    def all_flag(self, prop: str) -> bool:
        return self.counts[prop] == self.nrt_count

    @property
    def all_both_sided(self) -> bool:
        return self.all_flag("bothSided")

    @property
    def all_rip(self) -> bool:
        return self.all_flag("rip")

    @property
    def all_rcc(self) -> bool:
        return self.all_flag("rcc")

    @property
    def all_ar(self) -> bool:
        return self.all_flag("ar")

    @property
    def all_isomorphic(self) -> bool:
        return self.iso_class_count == 1

    @property
    def complete(self) -> bool:
        return self.enumerated == self.nrt_count

    def all_flags(self) -> dict[str, bool]:
        return {
            "allBothSided": self.all_both_sided,
            "allIsomorphic": self.all_isomorphic,
            "allRip": self.all_rip,
            "allRcc": self.all_rcc,
            "allAr": self.all_ar,
        }

    def checks(self) -> dict[str, bool]:
        return {
            "theorem2": check_theorem2(self),
            "theorem1": check_theorem1(self),
            "prop2": check_prop2_and_remark1(self),
            "prop1": not self.prop1_violations,
            "lemma1": not self.lemma1_violations,
            "lemma2": self.is_normal == (self.witness is None) and not self.witness_is_left,
            "quotient": self.quotient_ok is not False,
        }

    @property
    def passed(self) -> bool:
        return all(self.checks().values())

    def to_dict(self) -> dict:
        d = {
            "group": self.group,
            "subgroup": list(self.subgroup),
            "index": self.index,
            "isNormal": self.is_normal,
            "nrtCount": self.nrt_count,
            "counts": dict(self.counts),
            "allFlags": self.all_flags(),
            "isoClassCount": self.iso_class_count,
            "checksPassed": self.checks(),
            "groupOrder": self.group_order,
            "subgroupOrder": self.subgroup_order,
            "isoClassSizes": list(self.iso_class_sizes),
            "witness": list(self.witness) if self.witness is not None else None,
        }
        if not self.complete:
            d["enumerated"] = self.enumerated
        if self.prop1_violations:
            d["prop1Violations"] = self.prop1_violations
        if self.lemma1_violations:
            d["lemma1Violations"] = self.lemma1_violations
        return d

    def to_json(self, pretty: bool = False) -> str:
        return json.dumps(self.to_dict(), indent=2 if pretty else None)


def check_theorem2(r: AnalysisReport) -> bool:
    """Five-way agreement of normality, both-sidedness, isomorphism, RIP and RCC."""
    return len({r.is_normal, r.all_both_sided, r.all_isomorphic, r.all_rip, r.all_rcc}) == 1


def check_theorem1(r: AnalysisReport) -> bool:
    return r.is_normal or not r.all_isomorphic


def check_prop2_and_remark1(r: AnalysisReport) -> bool:
    """allAr implies normal. The converse may fail; see :func:`remark1_witnesses`."""
    return r.is_normal or not r.all_ar


def remark1_witnesses(reports: Iterable[AnalysisReport]) -> list[AnalysisReport]:
    """Normal pairs with some NRT that is not an A_r-transversal."""
    return [r for r in reports if r.is_normal and not r.all_ar]


def quotient_loop(frame: Frame) -> RightLoop:
    """The group G/H on right cosets, numbered like induced loops."""
    if not frame.normal:
        raise SubgroupNotNormal("quotient needs a normal subgroup")
    G = frame.group
    rc = frame.right.coset_of
    reps = [c[0] for c in frame.right.cosets]
    op = tuple(tuple(rc[G.table[a][b]] for b in reps) for a in reps)
    return RightLoop(len(reps), op)


def quotient_iso_check(G: Group, H: Subgroup, cap: int = DEFAULT_NRT_CAP,
                       frame: Optional[Frame] = None) -> bool:
    fr = frame if frame is not None else Frame.of(G, H)
    Q = quotient_loop(fr)
    return all(are_isomorphic(Q, induced_loop(S)) is not None
               for S in enumerate_nrts(G, H, cap=cap, frame=fr))


def analyze(G: Group, H: Subgroup, cap: int = DEFAULT_NRT_CAP, early_exit: bool = False) -> AnalysisReport:
    """Enumerate every NRT of H in G once and tabulate its properties.

    With ``early_exit`` the scan stops as soon as every all-NRT flag has been
    refuted by some NRT. The flags stay exact; the counts are then partial.
    """
    total = nrt_count(G, H)
    if total > cap:
        raise EnumerationTooLarge(f"{total} NRTs exceed the cap {cap}")
    fr = Frame.of(G, H)
    normal = fr.normal
    rep = AnalysisReport(
        group=G.name or f"order{G.order}", group_order=G.order, subgroup=H.elems,
        index=fr.index, is_normal=normal, nrt_count=total,
    )
    quotient = quotient_loop(fr) if normal else None
    classifier = Classifier()
    class_both: dict[int, bool] = {}
    counts = rep.counts
    refuted: set[str] = set()
    for idx, S in enumerate(enumerate_nrts(G, H, cap=cap, frame=fr)):
        L = induced_loop(S)
        both = is_left_transversal(S)
        rip, _ = has_rip(L)
        rcc = is_rcc(L)
        counts["bothSided"] += both
        counts["rip"] += rip
        counts["rcc"] += rcc
        ar = is_ar_transversal(S)
        counts["ar"] += ar
        if not (sigma_surjective_fast(S) == solves_unit_equation(L) == both):
            rep.prop1_violations.append(idx)
        cid = classifier.add(L)
        # isomorphic NRTs must agree on both-sidedness
        if class_both.setdefault(cid, both) != both:
            rep.lemma1_violations.append(idx)
        if quotient is not None and rep.quotient_ok is not False:
            rep.quotient_ok = are_isomorphic(quotient, L) is not None
        rep.enumerated = idx + 1
        if early_exit:
            refuted.update(k for k, v in (("b", both), ("r", rip), ("c", rcc), ("a", ar)) if not v)
            if len(refuted) == 4 and classifier.result.class_count > 1:
                break
    rep.iso_class_count = classifier.result.class_count
    rep.iso_class_sizes = list(classifier.result.class_sizes)
    if not normal:
        W = build_lemma2_witness(G, H, frame=fr)
        rep.witness = W.reps
        rep.witness_is_left = is_left_transversal(W)
    return rep


@dataclass
class SweepEntry:
    group: str
    subgroup: tuple[int, ...]
    index: int
    report: Optional[AnalysisReport] = None
    skipped: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.report is None or self.report.passed

    def to_json(self, pretty: bool = False) -> str:
        if self.report is not None:
            return self.report.to_json(pretty)
        d = {"group": self.group, "subgroup": list(self.subgroup), "index": self.index,
             "skipped": self.skipped}
        return json.dumps(d, indent=2 if pretty else None)


def _pair_job(args) -> SweepEntry:
    G, H, nrt_cap, early_exit = args
    idx = G.order // len(H)
    try:
        rep = analyze(G, H, cap=nrt_cap, early_exit=early_exit)
    except NRTError as exc:
        return SweepEntry(G.name or "", H.elems, idx, skipped=f"{type(exc).__name__}: {exc}")
    return SweepEntry(G.name or "", H.elems, idx, report=rep)


def sweep_pairs(catalog: Iterable[Group], max_order: int, nrt_cap: int = DEFAULT_NRT_CAP,
                subgroup_cap: int = DEFAULT_SUBGROUP_CAP, early_exit: bool = False,
                jobs: int = 1) -> list[SweepEntry]:
    """Analyze every subgroup of every catalog group with order <= ``max_order``.

    Pairs over a cap become skipped entries carrying the reason. Output order
    is catalog order then subgroup order, whatever ``jobs`` is.
    """
    entries: list[Optional[SweepEntry]] = []
    work = []
    for G in catalog:
        if G.order > max_order:
            continue
        try:
            subs = all_subgroups(G, cap=subgroup_cap)
        except NRTError as exc:
            entries.append(SweepEntry(G.name or "", (), 0, skipped=f"{type(exc).__name__}: {exc}"))
            continue
        for H in subs:
            if nrt_count(G, H) > nrt_cap:
                entries.append(SweepEntry(G.name or "", H.elems, G.order // len(H),
                                          skipped=f"EnumerationTooLarge: {nrt_count(G, H)} NRTs exceed the cap {nrt_cap}"))
                continue
            work.append((len(entries), (G, H, nrt_cap, early_exit)))
            entries.append(None)
    if jobs > 1 and work:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_pair_job, [w for _, w in work], chunksize=1)
            for (slot, _), res in zip(work, results):
                entries[slot] = res
    else:
        for slot, w in work:
            entries[slot] = _pair_job(w)
            log.debug("analyzed %s %s", entries[slot].group, entries[slot].subgroup)
    return entries  # type: ignore[return-value]


def sweep(catalog: Iterable[Group], max_order: int, nrt_cap: int = DEFAULT_NRT_CAP, **kw) -> list[AnalysisReport]:
    """Reports for every analyzed pair; skipped pairs are available via :func:`sweep_pairs`."""
    return [e.report for e in sweep_pairs(catalog, max_order, nrt_cap, **kw) if e.report is not None]
