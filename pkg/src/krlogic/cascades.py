"""Automata cascades: feed-forward sequential composition.

Component ``i`` reads the external letter together with the outputs of
components ``1..i-1``, all computed from the states before the update.

Two letter encodings are supported:

* bit mode -- the external alphabet and every forwarded output alphabet are
  bit alphabets; component ``i`` reads the concatenated bit string
  ``sigma + gamma_1 + ... + gamma_{i-1}``;
* tuple mode -- component 1 reads ``sigma`` and component ``i > 1`` reads the
  tuple ``(sigma, gamma_1, ..., gamma_{i-1})``.
"""

import itertools
import json
from dataclasses import dataclass

from .automata import Automaton, Semiautomaton, automaton_from_json, is_bit_alphabet
from .errors import KRLSyntaxError, LetterNotInAlphabet, StateSpaceTooLarge, WiringMismatch

DEFAULT_STATE_CAP = 10 ** 6


@dataclass(frozen=True, eq=False)
class AutoCascade:
    external_inputs: tuple
    components: tuple
    input_names: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "external_inputs", tuple(self.external_inputs))
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise WiringMismatch("a cascade needs at least one component")
        if self.input_names is not None:
            object.__setattr__(self, "input_names", tuple(self.input_names))
        bit = is_bit_alphabet(self.external_inputs) and all(
            is_bit_alphabet(c.outputs) for c in self.components[:-1])
        object.__setattr__(self, "bit_mode", bit)
        self._check_wiring()
        object.__setattr__(self, "_ext", {x: i for i, x in enumerate(self.external_inputs)})

    def _check_wiring(self):
        if self.bit_mode:
            width = len(self.external_inputs[0])
            for i, c in enumerate(self.components):
                if not is_bit_alphabet(c.inputs) or len(c.inputs[0]) != width:
                    raise WiringMismatch(
                        f"component {i + 1} must read {width} bits, "
                        f"reads {len(c.inputs[0]) if is_bit_alphabet(c.inputs) else '?'}")
                width += len(c.outputs[0])
            return
        expected = list(self.external_inputs)
        for i, c in enumerate(self.components):
            if set(c.inputs) != set(expected):
                raise WiringMismatch(
                    f"component {i + 1} alphabet is not the product of the external "
                    "alphabet and the previous outputs")
            if i == 0:
                expected = [(x, y) for x in self.external_inputs for y in c.outputs]
            else:
                expected = [xs + (y,) for xs in expected for y in c.outputs]

    @property
    def outputs(self):
        return self.components[-1].outputs

    @property
    def init(self):
        return tuple(c.init for c in self.components)

    def __len__(self):
        return len(self.components)

    def _letter(self, i, x, outs):
        if i == 0:
            return x
        if self.bit_mode:
            return x + "".join(outs)
        return (x,) + tuple(outs)

    def start(self):
        return tuple(c.init_index for c in self.components)

    def step(self, state, x):
        """One synchronous step on state indices; returns (state, outputs)."""
        if x not in self._ext:
            raise LetterNotInAlphabet(f"letter {x!r} not in the external alphabet")
        outs = []
        new = []
        for i, (c, q) in enumerate(zip(self.components, state)):
            li = c.letter_index(self._letter(i, x, outs))
            outs.append(c.outputs[c.theta[q][li]])
            new.append(c.delta[q][li])
        return tuple(new), tuple(outs)

    def is_simple(self):
        """Every non-final component outputs its current state."""
        for c in self.components[:-1]:
            for qi, row in enumerate(c.theta):
                if any(c.outputs[y] != c.states[qi] for y in row):
                    return False
        return True

    def to_json(self):
        data = {"external_inputs": list(self.external_inputs),
                "components": [c.to_json() for c in self.components]}
        if self.input_names is not None:
            data["input_names"] = list(self.input_names)
        return data


def cascade_from_json(data):
    try:
        from .automata import _json_letters

        comps = tuple(automaton_from_json(c) for c in data["components"])
        return AutoCascade(_json_letters(data["external_inputs"]), comps,
                           data.get("input_names"))
    except (KeyError, TypeError) as exc:
        raise KRLSyntaxError(f"malformed cascade JSON: {exc}") from exc


def load_cascade(path):
    with open(path) as fh:
        return cascade_from_json(json.load(fh))


def run_cascade(cascade, word):
    """Return ``(joint states, outputs of the last component)``."""
    state = cascade.start()
    states = [_labels(cascade, state)]
    outputs = []
    for x in word:
        state, outs = cascade.step(state, x)
        states.append(_labels(cascade, state))
        outputs.append(outs[-1])
    return states, outputs


def cascade_outputs(cascade, word):
    """Per step, the tuple of outputs of every component."""
    state = cascade.start()
    out = []
    for x in word:
        state, outs = cascade.step(state, x)
        out.append(outs)
    return out


def _labels(cascade, state):
    return tuple(c.states[q] for c, q in zip(cascade.components, state))


def semiautomata_cascade(external_inputs, semis, inits, final_output=None):
    """Cascade of semiautomata whose components output their own state.

    Each semiautomaton ``i`` must read the tuple-mode letter built from the
    states of the earlier components.  ``final_output(q, x)``, if given,
    replaces the last component's state output.
    """
    comps = []
    for i, (semi, init) in enumerate(zip(semis, inits)):
        if i == len(semis) - 1 and final_output is not None:
            fn = final_output
            outs = tuple(dict.fromkeys(fn(q, x) for q in semi.states for x in semi.inputs))
        else:
            fn = lambda q, x: q  # noqa: E731
            outs = semi.states
        comps.append(Automaton.from_functions(semi, init, outs, fn))
    return AutoCascade(tuple(external_inputs), tuple(comps))


def flatten(cascade, cap=DEFAULT_STATE_CAP):
    """Product automaton over ``Q_1 x ... x Q_d`` with the cascade's behaviour."""
    size = 1
    for c in cascade.components:
        size *= len(c.states)
    if size > cap:
        raise StateSpaceTooLarge(f"product has {size} states, cap is {cap}")
    index_tuples = list(itertools.product(*(range(len(c.states)) for c in cascade.components)))
    position = {s: i for i, s in enumerate(index_tuples)}
    outputs = tuple(cascade.outputs)
    out_index = {y: i for i, y in enumerate(outputs)}
    delta, theta = [], []
    for s in index_tuples:
        drow, trow = [], []
        for x in cascade.external_inputs:
            new, outs = cascade.step(s, x)
            drow.append(position[new])
            trow.append(out_index[outs[-1]])
        delta.append(tuple(drow))
        theta.append(tuple(trow))
    states = tuple(_labels(cascade, s) for s in index_tuples)
    last = cascade.components[-1]
    return Automaton(cascade.external_inputs, states, tuple(delta), cascade.init, outputs,
                     tuple(theta), cascade.input_names, last.output_names)


def single(automaton):
    """A one-component cascade."""
    return AutoCascade(automaton.inputs, (automaton,), automaton.input_names)


def component_semiautomata(cascade):
    return [Semiautomaton(c.inputs, c.states, c.delta) for c in cascade.components]
