import pathlib

import pytest
from hypothesis import strategies as st

from krlogic import pltl
from krlogic.programs import load_program

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
CORPUS = sorted((FIXTURES / "corpus").glob("*.krl"))


@pytest.fixture(params=CORPUS, ids=lambda p: p.stem)
def corpus_program(request):
    return load_program(request.param)


def formulas(universe=("a", "b"), max_leaves=8):
    """Hypothesis strategy for formulas over ``universe``."""
    leaves = st.sampled_from([pltl.TOP, pltl.BOT] + [pltl.Atom(v) for v in universe])

    def extend(children):
        return st.one_of(
            st.builds(pltl.Not, children),
            st.builds(pltl.Before, children),
            st.builds(pltl.Once, children),
            st.builds(pltl.Hist, children),
            st.builds(pltl.And, children, children),
            st.builds(pltl.Or, children, children),
            st.builds(pltl.Since, children, children),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def traces(universe=("a", "b"), max_len=6):
    step = st.frozensets(st.sampled_from(universe))
    return st.lists(step, min_size=1, max_size=max_len)


def all_formulas(max_size, universe=("a", "b")):
    """Every formula of desugared size at most ``max_size``, by size."""
    by_size = {1: [pltl.TOP, pltl.BOT] + [pltl.Atom(v) for v in universe]}
    for n in range(2, max_size + 1):
        out = []
        for f in by_size.get(n - 1, []):
            out += [pltl.Not(f), pltl.Before(f)]
        for f in by_size.get(n - 2, []):
            out.append(pltl.Once(f))
        for f in by_size.get(n - 4, []):
            out.append(pltl.Hist(f))
        for k in range(1, n - 1):
            for f in by_size[k]:
                for g in by_size[n - 1 - k]:
                    out += [pltl.And(f, g), pltl.Or(f, g), pltl.Since(f, g)]
        by_size[n] = out
    return [f for n in sorted(by_size) for f in by_size[n]]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
