"""Semiautomata and Mealy automata with dense transition tables.

Tables are indexed ``[state_index][letter_index]``.  Letters and states are
arbitrary hashable labels; bit-vector alphabets use bit strings such as
``"01"`` so that letter order matches binary value.
"""

import json
from dataclasses import dataclass

from .core import bit_letters
from .errors import (
    AlphabetMismatch,
    EmptyInput,
    KRLSyntaxError,
    LetterNotInAlphabet,
    NotAnAcceptor,
)


def is_bit_alphabet(letters):
    letters = tuple(letters)
    if not letters or not all(isinstance(x, str) for x in letters):
        return False
    m = len(letters[0])
    return len(letters) == 2 ** m and set(letters) == set(bit_letters(m))


def bit_arity(letters):
    return len(letters[0])


def _index(labels, what):
    index = {}
    for i, x in enumerate(labels):
        if x in index:
            raise ValueError(f"duplicate {what} {x!r}")
        index[x] = i
    return index


@dataclass(frozen=True, eq=False)
class Semiautomaton:
    inputs: tuple
    states: tuple
    delta: tuple

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if not self.states:
            raise ValueError("a semiautomaton needs at least one state")
        object.__setattr__(self, "_letter", _index(self.inputs, "letter"))
        object.__setattr__(self, "_state", _index(self.states, "state"))
        if len(self.delta) != len(self.states):
            raise ValueError("transition table must have one row per state")
        n = len(self.states)
        for row in self.delta:
            if len(row) != len(self.inputs):
                raise ValueError("transition table must have one column per letter")
            if any(not (isinstance(q, int) and 0 <= q < n) for q in row):
                raise ValueError("transition targets must be state indices")

    @classmethod
    def from_function(cls, inputs, states, fn):
        """Build from ``fn(state, letter) -> state`` on labels."""
        states = tuple(states)
        idx = _index(states, "state")
        return cls(tuple(inputs), states,
                   tuple(tuple(idx[fn(q, x)] for x in inputs) for q in states))

    def letter_index(self, letter):
        try:
            return self._letter[letter]
        except (KeyError, TypeError):
            raise LetterNotInAlphabet(f"letter {letter!r} not in the input alphabet") from None

    def state_index(self, state):
        return self._state[state]

    def next(self, state, letter):
        return self.states[self.delta[self._state[state]][self.letter_index(letter)]]

    @property
    def is_trivial(self):
        return len(self.states) == 1

    @property
    def is_bit(self):
        return is_bit_alphabet(self.inputs)

    def __eq__(self, other):
        return (isinstance(other, Semiautomaton) and self.inputs == other.inputs
                and self.states == other.states and self.delta == other.delta)

    def __hash__(self):
        return hash((self.inputs, self.states, self.delta))

    def to_json(self):
        return {"inputs": list(self.inputs), "states": list(self.states),
                "delta": [[self.states[q] for q in row] for row in self.delta]}


@dataclass(frozen=True, eq=False)
class Automaton:
    """Mealy automaton: output ``theta(q, x)`` uses the state before the update.

    ``input_names`` and ``output_names`` optionally name the bits of a
    bit-vector input or output alphabet as variables.
    """

    inputs: tuple
    states: tuple
    delta: tuple
    init: object
    outputs: tuple
    theta: tuple
    input_names: tuple = None
    output_names: tuple = None

    def __post_init__(self):
        semi = Semiautomaton(self.inputs, self.states, self.delta)
        object.__setattr__(self, "inputs", semi.inputs)
        object.__setattr__(self, "states", semi.states)
        object.__setattr__(self, "delta", semi.delta)
        object.__setattr__(self, "outputs", tuple(self.outputs))
        object.__setattr__(self, "theta", tuple(tuple(row) for row in self.theta))
        object.__setattr__(self, "semiautomaton", semi)
        object.__setattr__(self, "_output", _index(self.outputs, "output"))
        if self.init not in semi._state:
            raise ValueError(f"initial state {self.init!r} is not a state")
        if len(self.theta) != len(self.states):
            raise ValueError("output table must have one row per state")
        for row in self.theta:
            if len(row) != len(self.inputs):
                raise ValueError("output table must have one column per letter")
            for y in row:
                if not (isinstance(y, int) and 0 <= y < len(self.outputs)):
                    raise ValueError("output entries must be output indices")
        if self.input_names is not None:
            object.__setattr__(self, "input_names", tuple(self.input_names))
        if self.output_names is not None:
            object.__setattr__(self, "output_names", tuple(self.output_names))

    @classmethod
    def from_functions(cls, semi, init, outputs, theta_fn, **names):
        outputs = tuple(outputs)
        oidx = _index(outputs, "output")
        theta = tuple(tuple(oidx[theta_fn(q, x)] for x in semi.inputs) for q in semi.states)
        return cls(semi.inputs, semi.states, semi.delta, init, outputs, theta, **names)

    @property
    def init_index(self):
        return self.semiautomaton.state_index(self.init)

    def letter_index(self, letter):
        return self.semiautomaton.letter_index(letter)

    def output(self, state, letter):
        return self.outputs[self.theta[self.semiautomaton.state_index(state)][self.letter_index(letter)]]

    @property
    def is_acceptor(self):
        return bool(self.outputs) and {_as_bit(y) for y in self.outputs} <= {0, 1}

    @property
    def is_trivial(self):
        return len(self.states) == 1

    def __eq__(self, other):
        return (isinstance(other, Automaton) and self.inputs == other.inputs
                and self.states == other.states and self.delta == other.delta
                and self.init == other.init and self.outputs == other.outputs
                and self.theta == other.theta)

    def __hash__(self):
        return hash((self.inputs, self.states, self.delta, self.init, self.theta))

    def to_json(self):
        data = self.semiautomaton.to_json()
        data["init"] = self.init
        data["outputs"] = list(self.outputs)
        data["theta"] = [[self.outputs[y] for y in row] for row in self.theta]
        if self.input_names is not None:
            data["input_names"] = list(self.input_names)
        if self.output_names is not None:
            data["output_names"] = list(self.output_names)
        return data


def _as_bit(y):
    if y in (0, 1, "0", "1"):
        return int(y)
    return None


def _freeze(x):
    if isinstance(x, list):
        return tuple(_freeze(y) for y in x)
    return x


def _json_letters(data):
    if isinstance(data, int):
        return bit_letters(data)
    return tuple(_freeze(x) for x in data)


def semiautomaton_from_json(data):
    try:
        inputs = _json_letters(data["inputs"])
        states = tuple(_freeze(q) for q in data["states"])
        sidx = _index(states, "state")
        delta = tuple(tuple(sidx[_freeze(q)] for q in row) for row in data["delta"])
        return Semiautomaton(inputs, states, delta)
    except (KeyError, TypeError, ValueError) as exc:
        raise KRLSyntaxError(f"malformed semiautomaton JSON: {exc}") from exc


def automaton_from_json(data):
    try:
        semi = semiautomaton_from_json(data)
        outputs = _json_letters(data["outputs"])
        oidx = _index(outputs, "output")
        theta = tuple(tuple(oidx[_freeze(y)] for y in row) for row in data["theta"])
        return Automaton(semi.inputs, semi.states, semi.delta, _freeze(data["init"]), outputs, theta,
                         data.get("input_names"), data.get("output_names"))
    except (KeyError, TypeError, ValueError) as exc:
        raise KRLSyntaxError(f"malformed automaton JSON: {exc}") from exc


def load_automaton(path):
    with open(path) as fh:
        return automaton_from_json(json.load(fh))


# -- execution --------------------------------------------------------------

def run(automaton, word):
    """Return ``(states q_0..q_n, outputs y_1..y_n)`` for the input ``word``."""
    semi = automaton.semiautomaton
    q = automaton.init_index
    states = [automaton.states[q]]
    outputs = []
    for x in word:
        i = semi.letter_index(x)
        outputs.append(automaton.outputs[automaton.theta[q][i]])
        q = automaton.delta[q][i]
        states.append(automaton.states[q])
    return states, outputs


def accepts(automaton, word):
    if not automaton.is_acceptor:
        raise NotAnAcceptor("output alphabet is not {0, 1}")
    word = list(word)
    if not word:
        raise EmptyInput("acceptance is defined on non-empty strings")
    return _as_bit(run(automaton, word)[1][-1]) == 1


# -- input functions and composition ----------------------------------------

@dataclass(frozen=True)
class InputFunction:
    """Total map from external letters to internal letters."""

    domain: tuple
    codomain: tuple
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "codomain", tuple(self.codomain))
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != len(self.domain):
            raise ValueError("input function must map every letter")
        cod = set(self.codomain)
        for y in self.table:
            if y not in cod:
                raise AlphabetMismatch(f"image {y!r} outside the internal alphabet")

    @classmethod
    def from_mapping(cls, mapping, codomain=None):
        domain = tuple(mapping)
        table = tuple(mapping[x] for x in domain)
        if codomain is None:
            codomain = tuple(dict.fromkeys(table))
        return cls(domain, tuple(codomain), table)

    @classmethod
    def identity(cls, letters):
        letters = tuple(letters)
        return cls(letters, letters, letters)

    def __call__(self, letter):
        try:
            return self.table[self.domain.index(letter)]
        except ValueError:
            raise LetterNotInAlphabet(f"letter {letter!r} not in the domain") from None

    def as_dict(self):
        return dict(zip(self.domain, self.table))

    @property
    def is_surjective(self):
        return set(self.table) == set(self.codomain)


def compose(phi, semi):
    """The semiautomaton ``delta_phi(q, x) = delta(q, phi(x))`` over phi's domain."""
    if set(phi.codomain) - set(semi.inputs):
        raise AlphabetMismatch("input function codomain is not the internal alphabet")
    cols = [semi.letter_index(y) for y in phi.table]
    delta = tuple(tuple(row[c] for c in cols) for row in semi.delta)
    return Semiautomaton(phi.domain, semi.states, delta)


# -- state transformations --------------------------------------------------

@dataclass(frozen=True)
class Transformation:
    """A map on state indices ``0..n-1``; ``s * t`` applies ``s`` then ``t``."""

    image: tuple

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))

    def __call__(self, q):
        return self.image[q]

    def __mul__(self, other):
        return Transformation(tuple(other.image[q] for q in self.image))

    @property
    def is_identity(self):
        return all(q == i for i, q in enumerate(self.image))

    @property
    def is_permutation(self):
        return len(set(self.image)) == len(self.image)

    @property
    def is_reset(self):
        return len(set(self.image)) == 1

    @property
    def kind(self):
        if self.is_identity:
            return "identity"
        if self.is_reset:
            return "reset"
        if self.is_permutation:
            return "permutation"
        return "other"

    def describe(self, states=None):
        names = states if states is not None else range(len(self.image))
        names = list(names)
        return "{" + ", ".join(f"{names[i]}->{names[q]}" for i, q in enumerate(self.image)) + "}"


def transformations_of(semi):
    """Map each letter to the state transformation it induces."""
    n = len(semi.states)
    return {x: Transformation(tuple(semi.delta[q][i] for q in range(n)))
            for i, x in enumerate(semi.inputs)}


def distinct_transformations(semi):
    return tuple(dict.fromkeys(transformations_of(semi).values()))


# -- canonical semiautomata and helpers -------------------------------------

SET, RESET, READ = "set", "reset", "read"
LOW, HIGH = "low", "high"


def canonical_flip_flop():
    def delta(q, x):
        return {SET: HIGH, RESET: LOW, READ: q}[x]

    return Semiautomaton.from_function((SET, RESET, READ), (LOW, HIGH), delta)


def canonical_counter(n):
    if n < 1:
        raise ValueError("counter needs n >= 1")
    return Semiautomaton.from_function(tuple(range(n)), tuple(range(n)),
                                       lambda i, j: (i + j) % n)


def trivial_semiautomaton(inputs=("x",)):
    return Semiautomaton(tuple(inputs), ("*",), ((0,) * len(inputs),))


def acceptor(semi, init, accept_fn):
    """Acceptor on ``semi`` with ``theta(q, x) = accept_fn(q, x)`` in {0, 1}."""
    return Automaton.from_functions(semi, init, (0, 1), lambda q, x: int(bool(accept_fn(q, x))))


def moore_to_mealy(semi, init, outputs, label, **names):
    """Mealy form of a Moore output: ``theta(q, x) = label(delta(q, x), x)``."""
    return Automaton.from_functions(semi, init, outputs,
                                    lambda q, x: label(semi.next(q, x), x), **names)


def with_initial(automaton, init):
    return Automaton(automaton.inputs, automaton.states, automaton.delta, init,
                     automaton.outputs, automaton.theta, automaton.input_names,
                     automaton.output_names)
