import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krlogic.core import (
    Trace,
    all_traces,
    assignment_of,
    bit_letters,
    parse_trace,
    serialize_trace,
    step_of,
    subsets_in_order,
    trace_from_json,
    trace_to_json,
)
from krlogic.errors import EmptyTrace, KRLSyntaxError, UnknownVariable

from conftest import traces


def test_parse_three_steps():
    tr = parse_trace("{a}; {}; {a,b}", ("a", "b"))
    assert tr.steps == (frozenset("a"), frozenset(), frozenset("ab"))


def test_parse_single_empty_step():
    assert parse_trace("{}").steps == (frozenset(),)


def test_parse_empty_text_is_empty_trace():
    with pytest.raises(EmptyTrace):
        parse_trace("")


def test_parse_rejects_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse_trace("{a};{c}", ("a", "b"))


@pytest.mark.parametrize("text", ["{a", "a}", "{a,,b}", "{a};;{b}", "{1a}"])
def test_parse_rejects_malformed(text):
    with pytest.raises(KRLSyntaxError):
        parse_trace(text)


def test_parse_json_form():
    assert parse_trace('[["a"], [], ["a", "b"]]') == parse_trace("{a};{};{a,b}")


@pytest.mark.parametrize("step, bits", [({"a"}, "10"), (set(), "00"), ({"b", "a"}, "11")])
def test_assignment_bits(step, bits):
    assert str(assignment_of(step, ("a", "b"))) == bits


def test_assignment_uses_declaration_order():
    assert str(assignment_of({"a"}, ("b", "a"))) == "01"


def test_assignment_bijection():
    over = ("x", "y", "z")
    images = {str(assignment_of(s, over)) for s in subsets_in_order(over)}
    assert images == set(bit_letters(3))
    for letter in bit_letters(3):
        assert str(assignment_of(step_of(letter, over), over)) == letter


def test_bit_letters_binary_order():
    assert bit_letters(2) == ("00", "01", "10", "11")
    assert bit_letters(0) == ("",)


def test_all_traces_count_and_order():
    trs = list(all_traces(("a", "b"), 6))
    assert len(trs) == 5460
    assert [len(t) for t in trs] == sorted(len(t) for t in trs)
    assert trs[0].steps == (frozenset(),)
    assert trs[3].steps == (frozenset("ab"),)


def test_trace_at_is_one_based():
    tr = Trace([{"a"}, {"b"}])
    assert tr.at(1) == {"a"} and tr.at(2) == {"b"}


@given(traces(("a", "b", "c")))
def test_text_round_trip(steps):
    tr = Trace(steps)
    assert parse_trace(serialize_trace(tr, ("a", "b", "c")), ("a", "b", "c")) == tr


@given(traces())
def test_json_round_trip(steps):
    tr = Trace(steps)
    data = json.loads(json.dumps(trace_to_json(tr, ("a", "b"))))
    assert trace_from_json(data, ("a", "b")) == tr
