"""Operator automata and the registry of named operators.

An operator automaton has input arity ``m``, states ``1..n`` and a total
transition table ``delta[q - 1][letter_value]``, where ``letter_value`` is
the binary value of the argument bit-vector (first argument most
significant).  Built-ins:

========  ===================================================
``F``     flip-flop (SR-latch encoding: set, reset)
``S``     since, arguments ``(a, b)`` for ``a S b``
``C<n>``  n-counter over n argument bits
``Cs<n>`` simplified n-counter over one argument bit
``P``     parity, same table as ``Cs2``
========  ===================================================
"""

import json
import re
import threading
from dataclasses import dataclass

from .core import bit_letters
from .errors import ArityError, DuplicateName, KRLSyntaxError, UnknownOperator

LITERAL = "literal"
INTENT = "intent"


@dataclass(frozen=True)
class OperatorAutomaton:
    arity: int
    n_states: int
    delta: tuple
    init: int = 1
    name: str = ""

    def __post_init__(self):
        delta = tuple(tuple(int(x) for x in row) for row in self.delta)
        object.__setattr__(self, "delta", delta)
        if self.arity < 0 or self.n_states < 1:
            raise ArityError("operator needs arity >= 0 and at least one state")
        if len(delta) != self.n_states:
            raise ArityError(f"delta has {len(delta)} rows for {self.n_states} states")
        width = 2 ** self.arity
        for row in delta:
            if len(row) != width:
                raise ArityError(f"delta rows must have {width} entries")
            for q in row:
                if not 1 <= q <= self.n_states:
                    raise ArityError(f"transition target {q} outside [1, {self.n_states}]")
        if not 1 <= self.init <= self.n_states:
            raise ArityError(f"initial state {self.init} outside [1, {self.n_states}]")

    def __eq__(self, other):
        if not isinstance(other, OperatorAutomaton):
            return NotImplemented
        return (self.arity, self.n_states, self.delta, self.init) == (
            other.arity, other.n_states, other.delta, other.init)

    def __hash__(self):
        return hash((self.arity, self.n_states, self.delta, self.init))

    def step(self, q, letter):
        """``letter`` is a bit string or its integer value."""
        if isinstance(letter, str):
            letter = int(letter, 2) if letter else 0
        return self.delta[q - 1][letter]

    def letters(self):
        return bit_letters(self.arity)

    def semiautomaton(self):
        from .automata import Semiautomaton

        return Semiautomaton(self.letters(), tuple(range(1, self.n_states + 1)),
                             tuple(tuple(q - 1 for q in row) for row in self.delta))

    def to_json(self):
        return {"arity": self.arity, "states": self.n_states, "init": self.init,
                "delta": [list(row) for row in self.delta], "name": self.name}


def operator_from_json(data):
    try:
        return OperatorAutomaton(int(data["arity"]), int(data["states"]),
                                 tuple(tuple(r) for r in data["delta"]),
                                 int(data.get("init", 1)), data.get("name", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise KRLSyntaxError(f"malformed operator JSON: {exc}") from exc


def _table(arity, n_states, fn):
    return tuple(
        tuple(fn(q, letter) for letter in bit_letters(arity))
        for q in range(1, n_states + 1)
    )


def flip_flop_operator():
    def delta(q, x):
        if x == "00":
            return q
        if x in ("10", "11"):
            return 2
        return 1

    return OperatorAutomaton(2, 2, _table(2, 2, delta), 1, "F")


def since_operator():
    def delta(q, x):
        if x == "10":
            return q
        if x in ("01", "11"):
            return 2
        return 1

    return OperatorAutomaton(2, 2, _table(2, 2, delta), 1, "S")


def counter_increment(bits, convention=LITERAL):
    """Increment of the n-counter for argument bits ``b_0 .. b_{n-1}``.

    ``literal`` applies ``min({1} | {k : b_k = 1})`` as written, so the all-zero
    input increments by one.  ``intent`` follows the prose instead: the least
    index of a true bit, or 0 when none is true.
    """
    ones = [k for k, b in enumerate(bits) if b == "1"]
    if convention == LITERAL:
        return min([1] + ones)
    if convention == INTENT:
        return min(ones) if ones else 0
    raise ValueError(f"unknown counter convention {convention!r}")


def counter_operator(n, convention=LITERAL):
    if not isinstance(n, int) or n < 2:
        raise ArityError("counter operators need n >= 2")

    def delta(q, x):
        value = q - 1
        return (value + counter_increment(x, convention)) % n + 1

    suffix = "" if convention == LITERAL else "i"
    return OperatorAutomaton(n, n, _table(n, n, delta), 1, f"C{n}{suffix}")


def simplified_counter_operator(n):
    if not isinstance(n, int) or n < 2:
        raise ArityError("counter operators need n >= 2")

    def delta(q, x):
        return (q - 1 + int(x)) % n + 1

    return OperatorAutomaton(1, n, _table(1, n, delta), 1, f"Cs{n}")


def parity_operator():
    op = simplified_counter_operator(2)
    return OperatorAutomaton(op.arity, op.n_states, op.delta, op.init, "P")


def once_operator():
    """Core of ``O a``: state 2 once ``a`` has been seen, never reset."""
    return OperatorAutomaton(1, 2, ((1, 2), (2, 2)), 1, "Once")


def historically_operator():
    """Core of ``H a``: leaves state 1 for good the first time ``a`` fails."""
    return OperatorAutomaton(1, 2, ((2, 1), (2, 2)), 1, "Hist")


_COUNTER_RE = re.compile(r"(Cs|C)(\d+)\Z")


class OperatorRegistry:
    """Name to operator map.

    ``C<n>`` and ``Cs<n>`` resolve for every ``n >= 2`` without being stored.
    Mutation takes a lock; :meth:`snapshot` hands evaluators a private copy.
    """

    def __init__(self, counter_convention=LITERAL, builtins=True):
        self.counter_convention = counter_convention
        self._ops = {}
        self._lock = threading.Lock()
        if builtins:
            for op in (flip_flop_operator(), since_operator(), parity_operator(),
                       once_operator(), historically_operator()):
                self._ops[op.name] = op

    def register(self, name, op):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise KRLSyntaxError(f"invalid operator name {name!r}")
        with self._lock:
            if name in self._ops or _COUNTER_RE.match(name):
                raise DuplicateName(f"operator {name!r} already registered")
            self._ops[name] = OperatorAutomaton(op.arity, op.n_states, op.delta, op.init, name)

    def lookup(self, name):
        if name in self._ops:
            return self._ops[name]
        m = _COUNTER_RE.match(name)
        if m:
            n = int(m.group(2))
            if m.group(1) == "Cs":
                return simplified_counter_operator(n)
            op = counter_operator(n, self.counter_convention)
            return OperatorAutomaton(op.arity, op.n_states, op.delta, op.init, name)
        raise UnknownOperator(f"unknown operator {name!r}")

    def __contains__(self, name):
        try:
            self.lookup(name)
        except (UnknownOperator, ArityError):
            return False
        return True

    def names(self):
        return sorted(self._ops)

    def snapshot(self):
        copy = OperatorRegistry(self.counter_convention, builtins=False)
        copy._ops = dict(self._ops)
        return copy


default_registry = OperatorRegistry()


def register(name, op):
    default_registry.register(name, op)


def lookup(name):
    return default_registry.lookup(name)


def load_operator(path):
    with open(path) as fh:
        return operator_from_json(json.load(fh))
