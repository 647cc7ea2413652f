import pytest
from hypothesis import given, settings

from krlogic import pltl
from krlogic.core import Trace, all_traces, parse_trace
from krlogic.errors import (
    ArityMismatch,
    DoubleDefinition,
    KRLSyntaxError,
    RecursiveProgram,
    TimeOutOfRange,
    UnknownOperator,
    UnknownVariable,
)
from krlogic.programs import (
    DelayRule,
    DynamicRule,
    ProgramSimulator,
    StaticRule,
    eval_program,
    format_program,
    is_normal,
    is_treelike,
    parse_program,
    program_size,
    recognizes_program,
)

from conftest import traces
from reference import program_holds


def test_parity_rule_parses():
    p = parse_program("even, odd :- P(a).")
    (r,) = p.rules
    assert isinstance(r, DynamicRule) and r.heads == ("even", "odd") and r.args == ("a",)
    assert r.operator.name == "P"


def test_static_and_delay_rules():
    p = parse_program("h :- a & !b.\np :- Y q.")
    assert isinstance(p.rules[0], StaticRule) and isinstance(p.rules[1], DelayRule)
    assert p.inputs == ("a", "b", "q")


def test_recursion_reported_as_cycle():
    with pytest.raises(RecursiveProgram) as info:
        parse_program("p :- Y q.\nq :- Y p.")
    assert "p" in str(info.value) and "q" in str(info.value)


def test_double_definition():
    with pytest.raises(DoubleDefinition):
        parse_program("h :- a.\nh :- b.")
    with pytest.raises(DoubleDefinition):
        parse_program("x, x :- S(a, b).")


def test_arity_and_unknown_operator():
    with pytest.raises(ArityMismatch):
        parse_program("x, y :- S(a).")
    with pytest.raises(ArityMismatch):
        parse_program("x :- S(a, b).")
    with pytest.raises(UnknownOperator):
        parse_program("x, y :- Nope(a).")


@pytest.mark.parametrize("text", ["h :- .", "h a.", "h :- Y (a & b).", "h :- a S b S c.",
                                  ":- a.", "h :- a"])
def test_syntax_errors(text):
    with pytest.raises(KRLSyntaxError):
        parse_program(text)


def test_since_sugar():
    p = parse_program("h :- a S b.")
    (r,) = p.rules
    assert r.is_since and r.heads[1] == "h" and r.heads[0].startswith("h$")


def test_inline_json_operator():
    p = parse_program('x, y :- {"arity": 1, "states": 2, "init": 1, "delta": [[1, 2], [2, 1]]}(a).')
    assert p.rules[0].operator.delta == ((1, 2), (2, 1))


def test_comments_and_blank_lines():
    p = parse_program("% comment\n\nh :- a. # trailing\n")
    assert len(p.rules) == 1


def test_text_round_trip(corpus_program):
    again = parse_program(format_program(corpus_program), allow_generated=True)
    assert again == corpus_program


def test_parity_semantics():
    p = parse_program("even, odd :- P(a).")
    t = parse_trace("{a};{a};{}")
    assert [eval_program(p, t, k, "even") for k in (1, 2, 3)] == [False, True, True]
    assert eval_program(p, t, 1, "odd") is True


def test_delay_boundary():
    p = parse_program("p :- Y q.")
    t = parse_trace("{q};{}")
    assert eval_program(p, t, 2, "p") is True
    assert eval_program(p, t, 1, "p") is False


def test_since_rule_semantics():
    p = parse_program("q1, q2 :- S(a, b).")
    assert eval_program(p, parse_trace("{b};{a}"), 2, "q2") is True


def test_virtual_instant():
    p = parse_program("e, o :- P(a).\nh :- a.\nd :- Y e.")
    t = parse_trace("{}")
    assert eval_program(p, t, 0, "e") is True
    assert eval_program(p, t, 0, "o") is False
    assert eval_program(p, t, 0, "h") is False
    assert eval_program(p, t, 0, "!o & !h") is True
    assert eval_program(p, t, 1, "d") is True
    with pytest.raises(TimeOutOfRange):
        eval_program(p, t, 0, "Y e")


def test_errors():
    p = parse_program("h :- a.")
    with pytest.raises(UnknownVariable):
        eval_program(p, parse_trace("{a}"), 1, "zz")
    with pytest.raises(UnknownVariable):
        eval_program(p, parse_trace("{h}"), 1, "h")
    with pytest.raises(TimeOutOfRange):
        eval_program(p, parse_trace("{a}"), 2, "h")
    with pytest.raises(UnknownVariable):
        recognizes_program(p, parse_trace("{a}"), "zz")


def test_formula_queries_over_program_variables():
    p = parse_program("e, o :- P(a).")
    t = parse_trace("{a};{};{a}")
    assert eval_program(p, t, 3, "Y o & e") is True


def test_empty_program_is_plain_formula_evaluation():
    p = parse_program("", inputs=("a", "b"))
    phi = pltl.parse_formula("a S Y b")
    for trace in all_traces(("a", "b"), 4):
        assert eval_program(p, trace, len(trace), phi) == pltl.eval_formula(phi, trace, len(trace))


def test_matches_reference(corpus_program):
    sim = ProgramSimulator(corpus_program)
    for trace in all_traces(corpus_program.inputs, 3 if len(corpus_program.inputs) == 3 else 4):
        vals = sim.true_sets(trace)
        for t in range(0, len(trace) + 1):
            for v in corpus_program.defined:
                assert (v in vals[t]) == program_holds(corpus_program, trace.steps, t, v)


def test_dynamic_heads_one_hot(corpus_program):
    sim = ProgramSimulator(corpus_program)
    dyn = [r for r in corpus_program.rules if isinstance(r, DynamicRule)]
    for trace in all_traces(corpus_program.inputs, 3):
        for vals in sim.true_sets(trace):
            for r in dyn:
                assert sum(h in vals for h in r.heads) == 1


@settings(max_examples=100)
@given(traces(("q",), 8))
def test_delay_matches_before(steps):
    p = parse_program("p :- Y q.")
    trace = Trace(steps)
    for t in range(1, len(trace) + 1):
        assert eval_program(p, trace, t, "p") == pltl.eval_formula(pltl.parse_formula("Y q"), trace, t)


def test_program_size():
    p = parse_program("q1, q2 :- S(a, b).\nh :- q2 & a.\nd :- Y h.")
    assert program_size(p) == (2 + 1 + 2) + (1 + 3) + 3


# -- normal and treelike --------------------------------------------------------

@pytest.mark.parametrize("text, normal", [
    ("h :- Y p.\np :- a & b.", True),
    ("h :- Y p.\np :- Y a.", False),
    ("h :- q & r.\nq :- Y a.\nr :- Y b.", True),
    ("q1, q2 :- S(a, b).\nh :- q2.", True),
    ("q1, q2 :- S(a, b).\nr :- Y q2.", False),
    ("p :- a.\nh :- p & b.", False),
    ("e, o :- P(a).", False),
])
def test_normality(text, normal):
    report = is_normal(parse_program(text))
    assert bool(report) is normal
    assert bool(report.diagnostics) is not normal


@pytest.mark.parametrize("text, tree", [
    ("h :- q & a.\nq :- Y a.", True),
    ("h :- q & r.\nq :- Y a.\nr :- Y b.", False),
    ("h :- a & b.\ng :- !a | c.", True),
    ("h :- q & !q.\nq :- Y a.", False),
])
def test_treelike(text, tree):
    assert is_treelike(parse_program(text)) is tree
