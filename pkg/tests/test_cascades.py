import itertools

import pytest

from krlogic.automata import HIGH, LOW, READ, RESET, SET, Automaton, acceptor, canonical_flip_flop, run
from krlogic.cascades import (
    AutoCascade,
    cascade_from_json,
    flatten,
    run_cascade,
    semiautomata_cascade,
    single,
)
from krlogic.errors import LetterNotInAlphabet, StateSpaceTooLarge, WiringMismatch

FF = canonical_flip_flop()


def ff_pair():
    """Second flip-flop sets whenever the first one is high."""
    ext = (SET, RESET, READ)
    second_inputs = [(x, q) for x in ext for q in (LOW, HIGH)]
    second = Automaton.from_functions(
        type(FF).from_function(second_inputs, (LOW, HIGH),
                               lambda q, xq: HIGH if xq[1] == HIGH else (LOW if xq[0] == RESET else q)),
        LOW, (0, 1), lambda q, x: int(q == HIGH))
    first = Automaton.from_functions(FF, LOW, (LOW, HIGH), lambda q, x: q)
    return AutoCascade(ext, (first, second))


def test_second_flip_flop_lags_one_step():
    states, outs = run_cascade(ff_pair(), [SET, READ, READ])
    assert [s[0] for s in states] == [LOW, HIGH, HIGH, HIGH]
    assert [s[1] for s in states] == [LOW, LOW, HIGH, HIGH]
    assert outs == [0, 0, 1]


def test_single_component():
    a = acceptor(FF, LOW, lambda q, x: q == HIGH)
    word = [SET, READ, RESET, READ]
    assert run_cascade(single(a), word)[1] == run(a, word)[1]
    assert flatten(single(a)).theta == a.theta


def test_flatten_agrees():
    c = ff_pair()
    flat = flatten(c)
    assert len(flat.states) == 4
    for n in range(7):
        for word in itertools.product(c.external_inputs, repeat=n):
            assert run(flat, word)[1] == run_cascade(c, word)[1]


def test_flatten_cap():
    with pytest.raises(StateSpaceTooLarge):
        flatten(ff_pair(), cap=3)


def test_wiring_checked():
    a = acceptor(FF, LOW, lambda q, x: q == HIGH)
    with pytest.raises(WiringMismatch):
        AutoCascade((SET, RESET, READ), (a, a))
    with pytest.raises(WiringMismatch):
        AutoCascade((SET,), ())


def test_letter_checked():
    with pytest.raises(LetterNotInAlphabet):
        run_cascade(ff_pair(), ["jump"])


def test_json_round_trip():
    c = ff_pair()
    again = cascade_from_json(c.to_json())
    assert len(again) == len(c)
    assert [len(x.states) for x in again.components] == [2, 2]
    word = [SET, READ, RESET, READ, SET]
    assert run_cascade(again, word) == run_cascade(c, word)


def test_semiautomata_cascade_is_simple():
    c = ff_pair()
    semis = [comp.semiautomaton for comp in c.components]
    sc = semiautomata_cascade(c.external_inputs, semis, (LOW, LOW))
    assert sc.is_simple()
    assert ff_pair().is_simple()
