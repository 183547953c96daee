"""Normalized right transversals of finite groups and the right loops they induce."""

from .errors import *  # noqa: F401,F403
from .groups import (
    CosetDecomposition,
    Group,
    Subgroup,
    all_subgroups,
    cosets,
    group_from_generators,
    group_from_table,
    is_normal,
    normalizer,
    subgroup_generate,
)
from .iso import are_isomorphic, classify, fingerprint, all_isomorphic
from .loops import CGroupoid, RightLoop, c_groupoid, has_rip, induced_loop, is_rcc, prop1_check
from .named import catalog, named_group, parse_group_id
from .transversal import (
    Transversal,
    build_lemma2_witness,
    canonical_nrt,
    enumerate_nrts,
    is_ar_transversal,
    is_left_transversal,
    nrt_count,
)
from .verifier import AnalysisReport, analyze, sweep, sweep_pairs

__version__ = "0.1.0"
