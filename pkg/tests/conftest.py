import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nrtloops import named_group, subgroup_generate  # noqa: E402
from nrtloops.perms import parse_cycles  # noqa: E402

DATA = Path(__file__).parent / "data"


def elem(G, cycles: str) -> int:
    return G.index_of_perm(parse_cycles(cycles, G.degree))


def gen_subgroup(G, *cycles: str):
    return subgroup_generate(G, [elem(G, c) for c in cycles])


@pytest.fixture(scope="session")
def sym3():
    return named_group("symmetric", 3)


@pytest.fixture(scope="session")
def sym4():
    return named_group("symmetric", 4)


@pytest.fixture(scope="session")
def a3(sym3):
    return gen_subgroup(sym3, "(1 2 3)")


@pytest.fixture(scope="session")
def h12(sym3):
    return gen_subgroup(sym3, "(1 2)")


DESCRIPTIONS = {
    1: "Remark 1 regression (Sym(3)/A_3)",
    2: "Theorem 2 five-way agreement, catalog order <= 24",
    3: "Proposition 1 three-way agreement on every NRT",
    4: "Lemma 2 witness for every non-normal pair",
    5: "Proposition 2 one-way implication + Remark 1 realized",
    6: "Quotient identification for normal pairs",
    7: "Exact Sym(3) NRT counts",
    8: "Right-loop and c-groupoid axioms on 1000 random NRTs",
    9: "Isomorphism soundness under random transport",
}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(DESCRIPTIONS):
        if num not in RESULTS:
            terminalreporter.write_line(f"criterion {num}: NOT RUN  {DESCRIPTIONS[num]}")
            continue
        ok, detail = RESULTS[num]
        suffix = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {DESCRIPTIONS[num]}{suffix}")
