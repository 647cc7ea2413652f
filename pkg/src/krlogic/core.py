"""Ground types: variables, assignments, bit alphabets and traces.

Time is 1-based throughout the library.  A trace ``I = I_1, ..., I_l`` is a
non-empty sequence of variable sets; ``trace.at(t)`` returns ``I_t``.

Bit encodings always follow the declaration order of the consuming artifact:
the first declared variable is the most significant bit, so the letter
``"10"`` over ``(a, b)`` means ``a`` true and ``b`` false, and letters are
indexed by their binary value.
"""

import itertools
import json
import re
from dataclasses import dataclass

from .errors import EmptyTrace, KRLSyntaxError, UnknownVariable

VARIABLE_RE = re.compile(r"[a-zA-Z_][a-zA-Z0-9_']*\Z")
# names produced by compilers carry a '$', which user input may not contain
GENERATED_RE = re.compile(r"[a-zA-Z_][a-zA-Z0-9_'$]*\Z")


def is_variable_name(name, allow_generated=False):
    pattern = GENERATED_RE if allow_generated else VARIABLE_RE
    return isinstance(name, str) and bool(pattern.match(name))


def check_variable(name, allow_generated=False):
    if not is_variable_name(name, allow_generated):
        raise KRLSyntaxError(f"invalid variable name {name!r}")
    return name


@dataclass(frozen=True)
class Assignment:
    over: tuple
    bits: tuple

    def __post_init__(self):
        if len(self.over) != len(self.bits):
            raise ValueError("assignment length does not match its variables")

    def __str__(self):
        return "".join("1" if b else "0" for b in self.bits)

    @property
    def value(self):
        """Binary value of the bit-vector, first variable most significant."""
        return int(str(self), 2) if self.bits else 0

    def true_vars(self):
        return frozenset(v for v, b in zip(self.over, self.bits) if b)


def assignment_of(step, over):
    step = set(step)
    return Assignment(tuple(over), tuple(v in step for v in over))


def bit_letters(arity):
    """All letters of the bit alphabet B^arity, ordered by binary value."""
    if arity < 0:
        raise ValueError("arity must be non-negative")
    return tuple("".join(bits) for bits in itertools.product("01", repeat=arity))


def subsets_in_order(universe):
    """All subsets of ``universe`` ordered by the binary value of their encoding."""
    universe = tuple(universe)
    return tuple(
        frozenset(v for v, b in zip(universe, letter) if b == "1")
        for letter in bit_letters(len(universe))
    )


def letter_of(step, universe):
    return str(assignment_of(step, universe))


def step_of(letter, universe):
    return frozenset(v for v, b in zip(universe, letter) if b == "1")


@dataclass(frozen=True)
class Trace:
    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(frozenset(s) for s in self.steps))
        if not self.steps:
            raise EmptyTrace("a trace must have at least one step")

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def at(self, t):
        return self.steps[t - 1]

    def variables(self):
        return frozenset().union(*self.steps)

    def letters(self, universe):
        return [letter_of(s, universe) for s in self.steps]

    def __str__(self):
        return serialize_trace(self)


def make_trace(steps):
    if isinstance(steps, Trace):
        return steps
    return Trace(tuple(steps))


def serialize_trace(trace, universe=None):
    """Render a trace in the ``{a,b}; {}; {a}`` grammar.

    Variables inside a step are listed in ``universe`` order when given,
    otherwise alphabetically.
    """
    parts = []
    for step in trace.steps:
        if universe is not None:
            names = [v for v in universe if v in step]
        else:
            names = sorted(step)
        parts.append("{" + ",".join(names) + "}")
    return "; ".join(parts)


_STEP_RE = re.compile(r"\s*\{([^{}]*)\}\s*")


def parse_trace(text, universe=None):
    """Parse ``"{a}; {}; {a,b}"`` (or its JSON form) into a :class:`Trace`.

    When ``universe`` is given, variables outside it raise
    :class:`UnknownVariable`.
    """
    stripped = text.strip()
    if stripped.startswith("["):
        return trace_from_json(json.loads(stripped), universe)
    if not stripped:
        raise EmptyTrace("empty trace text")
    steps = []
    for i, chunk in enumerate(stripped.split(";")):
        m = _STEP_RE.fullmatch(chunk)
        if m is None:
            raise KRLSyntaxError(f"malformed step {chunk.strip()!r}", position=i + 1)
        inner = m.group(1).strip()
        names = [n.strip() for n in inner.split(",")] if inner else []
        if "" in names:
            raise KRLSyntaxError(f"empty variable name in step {chunk.strip()!r}", position=i + 1)
        for n in names:
            check_variable(n)
        steps.append(frozenset(names))
    trace = Trace(tuple(steps))
    _check_universe(trace, universe)
    return trace


def trace_from_json(data, universe=None):
    if not isinstance(data, list) or not all(isinstance(s, list) for s in data):
        raise KRLSyntaxError("JSON trace must be an array of arrays of strings")
    steps = []
    for step in data:
        for n in step:
            check_variable(n)
        steps.append(frozenset(step))
    if not steps:
        raise EmptyTrace("empty trace")
    trace = Trace(tuple(steps))
    _check_universe(trace, universe)
    return trace


def trace_to_json(trace, universe=None):
    if universe is not None:
        return [[v for v in universe if v in s] for s in trace.steps]
    return [sorted(s) for s in trace.steps]


def _check_universe(trace, universe):
    if universe is None:
        return
    extra = trace.variables() - set(universe)
    if extra:
        raise UnknownVariable(f"variables not in universe: {', '.join(sorted(extra))}")


def all_traces(universe, max_len, min_len=1):
    """Every trace over ``universe`` up to ``max_len`` steps, in shortlex order."""
    letters = subsets_in_order(universe)
    for n in range(min_len, max_len + 1):
        for word in itertools.product(letters, repeat=n):
            yield Trace(word)
