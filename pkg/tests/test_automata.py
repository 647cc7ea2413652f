import itertools

import pytest

from krlogic.automata import (
    HIGH,
    LOW,
    READ,
    RESET,
    SET,
    Automaton,
    InputFunction,
    Semiautomaton,
    acceptor,
    accepts,
    automaton_from_json,
    canonical_counter,
    canonical_flip_flop,
    compose,
    distinct_transformations,
    run,
    transformations_of,
    trivial_semiautomaton,
)
from krlogic.core import bit_letters
from krlogic.errors import (
    AlphabetMismatch,
    EmptyInput,
    KRLSyntaxError,
    LetterNotInAlphabet,
    NotAnAcceptor,
)
from krlogic.operators import flip_flop_operator, since_operator

from reference import run_mealy


def state_output(semi, init):
    return Automaton.from_functions(semi, init, semi.states, lambda q, x: q)


def test_flip_flop_run():
    ff = state_output(canonical_flip_flop(), LOW)
    states, _ = run(ff, [SET, READ, RESET])
    assert states == [LOW, HIGH, HIGH, LOW]


def test_empty_run():
    ff = state_output(canonical_flip_flop(), LOW)
    assert run(ff, []) == ([LOW], [])


def test_counter_run():
    c3 = state_output(canonical_counter(3), 0)
    assert run(c3, [1, 2, 2])[0] == [0, 1, 0, 2]


def test_mealy_output_uses_state_before_update():
    ff = acceptor(canonical_flip_flop(), LOW, lambda q, x: q == HIGH)
    assert run(ff, [SET, READ])[1] == [0, 1]
    assert accepts(ff, [SET, READ]) and not accepts(ff, [SET])


def test_run_matches_plain_dict_machine():
    semi = canonical_counter(3)
    a = acceptor(semi, 0, lambda q, x: (q + x) % 3 == 0)
    delta = {(q, x): semi.next(q, x) for q in semi.states for x in semi.inputs}
    theta = {(q, x): a.output(q, x) for q in semi.states for x in semi.inputs}
    for n in range(5):
        for word in itertools.product(semi.inputs, repeat=n):
            assert run(a, word)[1] == run_mealy(delta, theta, 0, word)


def test_accepts_errors():
    ff = state_output(canonical_flip_flop(), LOW)
    with pytest.raises(NotAnAcceptor):
        accepts(ff, [SET])
    a = acceptor(canonical_flip_flop(), LOW, lambda q, x: True)
    with pytest.raises(EmptyInput):
        accepts(a, [])
    with pytest.raises(LetterNotInAlphabet):
        run(a, ["jump"])


def test_identity_compose():
    semi = canonical_flip_flop()
    assert compose(InputFunction.identity(semi.inputs), semi) == semi


def test_sr_latch_encoding_gives_flip_flop_core():
    phi = InputFunction.from_mapping({"00": READ, "10": SET, "11": SET, "01": RESET})
    ff = compose(phi, canonical_flip_flop())
    core = flip_flop_operator()
    for qi, q in enumerate((LOW, HIGH)):
        for x in bit_letters(2):
            assert ff.next(q, x) == (LOW, HIGH)[core.step(qi + 1, x) - 1]


def test_since_encoding_gives_since_core():
    phi = InputFunction.from_mapping({"10": READ, "01": SET, "11": SET, "00": RESET})
    s = compose(phi, canonical_flip_flop())
    core = since_operator()
    for qi, q in enumerate((LOW, HIGH)):
        for x in bit_letters(2):
            assert s.next(q, x) == (LOW, HIGH)[core.step(qi + 1, x) - 1]


def test_compose_codomain_check():
    phi = InputFunction.from_mapping({"0": "jump"})
    with pytest.raises(AlphabetMismatch):
        compose(phi, canonical_flip_flop())


def test_flip_flop_transformations():
    ts = transformations_of(canonical_flip_flop())
    assert ts[READ].is_identity
    assert ts[SET].is_reset and ts[SET](0) == 1
    assert ts[RESET].is_reset and ts[RESET](1) == 0
    assert len(distinct_transformations(canonical_flip_flop())) == 3


def test_counter_transformations():
    ts = distinct_transformations(canonical_counter(2))
    assert len(ts) == 2 and all(t.is_permutation for t in ts)
    assert {t.kind for t in ts} == {"identity", "permutation"}


def test_trivial_transformations():
    ts = distinct_transformations(trivial_semiautomaton())
    assert len(ts) == 1 and ts[0].is_identity


def test_transformation_product_order():
    ts = transformations_of(canonical_flip_flop())
    # set then reset lands low
    assert (ts[SET] * ts[RESET]).image == (0, 0)
    assert (ts[RESET] * ts[SET]).image == (1, 1)


def test_json_round_trip():
    a = acceptor(canonical_counter(3), 0, lambda q, x: q == 2)
    assert automaton_from_json(a.to_json()) == a


@pytest.mark.parametrize("data", [
    {"inputs": ["a"], "states": [1], "delta": [[2]], "init": 1, "outputs": [0], "theta": [[0]]},
    {"inputs": ["a"], "states": [1]},
])
def test_bad_json(data):
    with pytest.raises(KRLSyntaxError):
        automaton_from_json(data)


def test_bad_tables():
    with pytest.raises(ValueError):
        Semiautomaton(("a",), (0, 1), ((0,),))
    with pytest.raises(ValueError):
        Semiautomaton(("a",), (0,), ((3,),))
