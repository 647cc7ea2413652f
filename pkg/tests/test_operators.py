import pytest

from krlogic.errors import ArityError, DuplicateName, UnknownOperator
from krlogic.operators import (
    INTENT,
    OperatorAutomaton,
    OperatorRegistry,
    counter_increment,
    counter_operator,
    flip_flop_operator,
    once_operator,
    operator_from_json,
    parity_operator,
    simplified_counter_operator,
    since_operator,
)
from krlogic.programs import eval_program_all, parse_program


@pytest.mark.parametrize("q, x, target", [(1, "10", 2), (2, "00", 2), (2, "01", 1),
                                          (1, "11", 2), (1, "00", 1), (2, "11", 2)])
def test_flip_flop_table(q, x, target):
    assert flip_flop_operator().step(q, x) == target


@pytest.mark.parametrize("q, x, target", [(2, "10", 2), (1, "11", 2), (2, "00", 1),
                                          (1, "10", 1), (1, "01", 2)])
def test_since_table(q, x, target):
    assert since_operator().step(q, x) == target


def test_counter_literal_examples():
    c3 = counter_operator(3)
    assert c3.step(3, "010") == 1        # value 2 + 1 wraps to 0
    assert c3.step(2, "100") == 2        # b_0 set: j = 0
    assert c3.step(1, "000") == 2        # nothing set: j = 1


def test_counter_intent_reading():
    assert counter_increment("000", INTENT) == 0
    assert counter_increment("010", INTENT) == 1
    assert counter_increment("001", INTENT) == 2
    assert counter_operator(3, INTENT).step(1, "001") == 3


def test_literal_counter_only_adds_zero_or_one():
    c4 = counter_operator(4)
    for q in range(1, 5):
        for x in c4.letters():
            assert (c4.step(q, x) - q) % 4 in (0, 1)


@pytest.mark.parametrize("value, bit, nxt", [(0, "1", 1), (1, "1", 0), (0, "0", 0), (1, "0", 1)])
def test_simplified_counter(value, bit, nxt):
    assert simplified_counter_operator(2).step(value + 1, bit) == nxt + 1


def test_parity_is_cs2():
    assert parity_operator() == simplified_counter_operator(2)
    assert parity_operator().name == "P"


@pytest.mark.parametrize("trace, even", [
    ([set(), set()], [True, True]),
    ([{"a"}, {"a"}, {"a"}], [False, True, False]),
    ([{"a"}, set()], [False, False]),
])
def test_parity_heads(trace, even):
    program = parse_program("even, odd :- P(a).")
    assert eval_program_all(program, trace, "even") == even
    assert eval_program_all(program, trace, "odd") == [not e for e in even]


def test_counter_needs_two_states():
    with pytest.raises(ArityError):
        counter_operator(1)
    with pytest.raises(ArityError):
        simplified_counter_operator(0)


def test_bad_tables_rejected():
    with pytest.raises(ArityError):
        OperatorAutomaton(1, 2, ((1, 2),))
    with pytest.raises(ArityError):
        OperatorAutomaton(1, 2, ((1, 3), (1, 1)))
    with pytest.raises(ArityError):
        OperatorAutomaton(1, 1, ((1, 1),), init=2)


def test_registry_round_trip():
    reg = OperatorRegistry()
    reg.register("Swap", OperatorAutomaton(1, 2, ((1, 2), (2, 1))))
    assert reg.lookup("Swap").delta == ((1, 2), (2, 1))
    assert reg.lookup("F") == flip_flop_operator()
    assert reg.lookup("C5").n_states == 5
    assert reg.lookup("Cs7").arity == 1
    with pytest.raises(UnknownOperator):
        reg.lookup("nope")
    with pytest.raises(DuplicateName):
        reg.register("Swap", once_operator())
    with pytest.raises(DuplicateName):
        reg.register("S", once_operator())


def test_registry_convention_switch():
    assert OperatorRegistry(INTENT).lookup("C3").step(1, "000") == 1
    assert OperatorRegistry().lookup("C3").step(1, "000") == 2


def test_snapshot_is_isolated():
    reg = OperatorRegistry()
    snap = reg.snapshot()
    reg.register("Extra", once_operator())
    assert "Extra" in reg and "Extra" not in snap


def test_json_round_trip():
    op = counter_operator(3)
    assert operator_from_json(op.to_json()) == op
