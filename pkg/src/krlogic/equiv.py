"""Bounded language comparison by exhaustive enumeration.

Every artifact is wrapped as a :class:`Recognizer` over an explicit list of
letters.  Traces are enumerated in shortlex order (length, then letter
order), so the first counterexample found is deterministic.
"""

import os
import time
from dataclasses import dataclass, field

import numpy as np

from . import pltl
from .automata import _as_bit, is_bit_alphabet
from .cascades import cascade_outputs
from .core import Trace, letter_of, subsets_in_order
from .errors import AlphabetMismatch, BudgetExceeded, NotAnAcceptor, UnknownVariable
from .pltl import (
    BOT,
    TOP,
    And,
    Atom,
    Before,
    Hist,
    Not,
    Once,
    Or,
    Since,
)
from .programs import ProgramSimulator, recognizes_program

DEFAULT_BUDGET = 10 ** 7


def budget_from_env(default=DEFAULT_BUDGET):
    value = os.environ.get("KRLC_BUDGET")
    return int(value) if value else default


class Recognizer:
    """Uniform acceptance interface.

    ``letters`` fixes the alphabet and its order.  Over a variable universe
    the letters are frozensets of true variables in binary-value order.
    ``start``/``step``/``accepting`` drive incremental enumeration;
    ``accepts`` decides a single word through an independent path where one
    exists, and is what counterexamples are re-checked against.
    """

    def __init__(self, letters, start, step, accepting, accepts, universe=None, label=""):
        self.letters = tuple(letters)
        self.start = start
        self.step = step
        self.accepting = accepting
        self._accepts = accepts
        self.universe = tuple(universe) if universe is not None else None
        self.label = label

    def accepts(self, word):
        word = tuple(word)
        if not word:
            raise ValueError("words must be non-empty")
        return bool(self._accepts(word))

    def __repr__(self):
        return f"Recognizer({self.label or '?'}, {len(self.letters)} letters)"

    @classmethod
    def from_formula(cls, phi, universe=None):
        universe = tuple(universe) if universe is not None else pltl.variables(phi)
        _check_universe(pltl.variables(phi), universe)
        mon = pltl.FormulaMonitor(phi)
        return cls(subsets_in_order(universe), mon.start, mon.step, mon.value,
                   lambda w: pltl.eval_formula(phi, Trace(w), len(w)),
                   universe, pltl.format_formula(phi))

    @classmethod
    def from_program(cls, program, var, universe=None):
        universe = tuple(universe) if universe is not None else program.inputs
        if var not in program.variables:
            raise UnknownVariable(f"{var!r} is not a variable of the program")
        _check_universe(program.inputs, universe)
        sim = ProgramSimulator(program)
        i = sim.index[var]
        return cls(subsets_in_order(universe), sim.start, sim.step, lambda s: s[i],
                   lambda w: recognizes_program(program, Trace(w), var),
                   universe, f"program:{var}")

    @classmethod
    def from_automaton(cls, automaton, universe=None, output_bit=None):
        """Accept when the last output (or its ``output_bit``) is 1.

        With a universe, or input names on a bit alphabet, letters are
        variable sets encoded as bit strings in universe order.
        """
        if universe is None and automaton.input_names and is_bit_alphabet(automaton.inputs):
            universe = automaton.input_names
        encode = _encoder(automaton.inputs, universe)
        decide = _output_decider(automaton.outputs, output_bit)
        semi = automaton.semiautomaton

        def step(state, x):
            q = state[0]
            li = semi.letter_index(encode(x))
            return semi.delta[q][li], automaton.theta[q][li]

        def accepts(word):
            q = automaton.init_index
            y = None
            for x in word:
                li = automaton.letter_index(encode(x))
                q, y = automaton.delta[q][li], automaton.theta[q][li]
            return decide(y)

        letters = subsets_in_order(universe) if universe is not None else automaton.inputs
        return cls(letters, lambda: (automaton.init_index, None), step,
                   lambda s: decide(s[1]), accepts, universe, "automaton")

    @classmethod
    def from_cascade(cls, cascade, universe=None, component=-1, bit=0):
        """Accept when ``bit`` of ``component``'s output is 1 at the last step."""
        if universe is None and cascade.input_names:
            universe = cascade.input_names
        encode = _encoder(cascade.external_inputs, universe)
        comp = component % len(cascade.components)

        def step(state, x):
            new, outs = cascade.step(state[0], encode(x))
            return new, outs[comp]

        def value(y):
            if y is None:
                return False
            if isinstance(y, str) and y and set(y) <= {"0", "1"}:
                return y[bit] == "1"
            return _as_bit(y) == 1

        def accepts(word):
            return value(cascade_outputs(cascade, [encode(x) for x in word])[-1][comp])

        letters = subsets_in_order(universe) if universe is not None else cascade.external_inputs
        return cls(letters, lambda: (cascade.start(), None), step,
                   lambda s: value(s[1]), accepts, universe, "cascade")

    @classmethod
    def from_predicate(cls, letters, predicate, universe=None, label="predicate"):
        """Recognizer deciding each word by ``predicate(word)`` directly."""
        return cls(letters, lambda: (), lambda s, x: s + (x,), predicate, predicate,
                   universe, label)

    @classmethod
    def over(cls, universe, predicate, label="predicate"):
        return cls.from_predicate(subsets_in_order(universe), predicate, universe, label)


def _check_universe(needed, universe):
    missing = [v for v in needed if v not in universe]
    if missing:
        raise UnknownVariable(f"variables outside the universe: {', '.join(missing)}")


def _encoder(alphabet, universe):
    if universe is None:
        return lambda x: x
    universe = tuple(universe)
    if not is_bit_alphabet(alphabet) or len(alphabet[0]) != len(universe):
        raise AlphabetMismatch("alphabet is not B^m for the given universe")
    return lambda x: letter_of(x, universe)


def _output_decider(outputs, output_bit):
    if output_bit is None:
        if not {_as_bit(y) for y in outputs} <= {0, 1}:
            raise NotAnAcceptor("outputs are not 0/1; pick an output bit")
        return lambda y: y is not None and _as_bit(outputs[y]) == 1
    return lambda y: y is not None and outputs[y][output_bit] == "1"


# -- enumeration ------------------------------------------------------------

def _count(n_letters, max_len):
    return sum(n_letters ** k for k in range(1, max_len + 1))


def _levels(r, max_len, budget):
    """Yield ``(word, accepted)`` for every word up to ``max_len``, shortlex."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    budget = budget_from_env() if budget is None else budget
    total = _count(len(r.letters), max_len)
    if total > budget:
        raise BudgetExceeded(f"{total} strings exceed the budget of {budget}")
    level = [((), r.start())]
    for _ in range(max_len):
        nxt = []
        for word, state in level:
            for x in r.letters:
                s = r.step(state, x)
                w = word + (x,)
                nxt.append((w, s))
        for w, s in nxt:
            yield w, r.accepting(s)
        level = nxt


def _as_trace(r, word):
    return Trace(word) if r.universe is not None else list(word)


@dataclass
class EquivReport:
    equal: bool
    max_len: int
    counterexample: object = None
    accepted_by: str = None
    checked: int = 0
    seconds: float = 0.0

    @property
    def verdict(self):
        return f"equal-up-to-{self.max_len}" if self.equal else "counterexample"

    def __bool__(self):
        return self.equal


def bounded_equiv(left, right, max_len, budget=None):
    """Compare two recognizers on every word of length ``1..max_len``."""
    if left.letters != right.letters:
        raise AlphabetMismatch("recognizers are over different alphabets")
    t0 = time.perf_counter()
    checked = 0
    lw = _levels(left, max_len, budget)
    rw = _levels(right, max_len, budget)
    for (word, a), (_, b) in zip(lw, rw):
        checked += 1
        if a != b:
            # the incremental runs disagree; confirm on the direct path
            da, db = left.accepts(word), right.accepts(word)
            if da == db:
                raise RuntimeError(f"incremental and direct acceptance differ on {word!r}")
            return EquivReport(False, max_len, _as_trace(left, word),
                               "left" if da else "right", checked, time.perf_counter() - t0)
    return EquivReport(True, max_len, None, None, checked, time.perf_counter() - t0)


def enumerate_language(r, max_len, budget=None):
    """The accepted words of length ``1..max_len`` in shortlex order."""
    return [_as_trace(r, w) for w, ok in _levels(r, max_len, budget) if ok]


def acceptance_vector(r, max_len, budget=None):
    return np.array([ok for _, ok in _levels(r, max_len, budget)], dtype=bool)


# -- bounded non-expressibility ---------------------------------------------

class _PrefixTree:
    """All non-empty words up to ``max_len`` in shortlex order, with parents."""

    def __init__(self, letters, max_len):
        k = len(letters)
        self.sizes = [k ** n for n in range(1, max_len + 1)]
        self.offsets = np.cumsum([0] + self.sizes)
        n = int(self.offsets[-1])
        self.parent = np.full(n, -1, dtype=np.int64)
        self.letter = np.zeros(n, dtype=np.int64)
        for lvl in range(max_len):
            start, size = self.offsets[lvl], self.sizes[lvl]
            idx = np.arange(size)
            self.letter[start:start + size] = idx % k
            if lvl > 0:
                self.parent[start:start + size] = self.offsets[lvl - 1] + idx // k
        self.n = n

    def levels(self):
        for lvl in range(len(self.sizes)):
            yield slice(int(self.offsets[lvl]), int(self.offsets[lvl + 1])), lvl


class _Semantics:
    """Truth vectors of formulas at the last position of every word."""

    def __init__(self, letters, universe, max_len):
        self.tree = _PrefixTree(letters, max_len)
        self.letters = letters
        self.universe = universe

    def atom(self, name):
        table = np.array([name in x for x in self.letters], dtype=bool)
        return table[self.tree.letter]

    def before(self, v):
        out = np.zeros_like(v)
        p = self.tree.parent
        has = p >= 0
        out[has] = v[p[has]]
        return out

    def since(self, a, b):
        out = np.zeros_like(a)
        for sl, lvl in self.tree.levels():
            if lvl == 0:
                out[sl] = b[sl]
            else:
                out[sl] = b[sl] | (a[sl] & out[self.tree.parent[sl]])
        return out

    def once(self, v):
        return self.since(np.ones_like(v), v)

    def hist(self, v):
        return ~self.since(np.ones_like(v), ~v)


@dataclass
class NonexpressibilityReport:
    """Outcome of the size-bounded search.

    ``formula`` is a witness if one was found.  ``None`` is evidence only: no
    formula of at most ``max_size`` nodes matches on words up to ``max_len``.
    """

    formula: object
    max_size: int
    max_len: int
    distinct_behaviours: int = 0
    candidates: int = 0
    seconds: float = 0.0
    per_size: dict = field(default_factory=dict)

    @property
    def found(self):
        return self.formula is not None


def bounded_nonexpressibility(target, universe, max_size, max_len, budget=None,
                              operators=("!", "&", "|", "Y", "S", "O", "H")):
    """Search Past LTL formulas over ``universe`` for one matching ``target``.

    Sizes count syntax nodes with ``O`` and ``H`` as single nodes, which
    covers every formula whose desugared size is within ``max_size``.
    Formulas are grouped by their truth vector over all words up to
    ``max_len``; since every connective acts on these vectors, keeping one
    smallest representative per vector loses no candidate behaviour.
    """
    universe = tuple(universe)
    letters = subsets_in_order(universe)
    if tuple(target.letters) != letters:
        raise AlphabetMismatch("target is not over the given universe")
    budget = budget_from_env() if budget is None else budget
    t0 = time.perf_counter()
    sem = _Semantics(letters, universe, max_len)
    goal = acceptance_vector(target, max_len, budget)

    seen = {}
    by_size = {}
    candidates = 0

    def add(size, formula, vec):
        key = vec.tobytes()
        if key in seen:
            return None
        seen[key] = formula
        by_size.setdefault(size, []).append((formula, vec))
        if np.array_equal(vec, goal):
            return formula
        return None

    def report(found):
        return NonexpressibilityReport(found, max_size, max_len, len(seen), candidates,
                                       time.perf_counter() - t0,
                                       {k: len(v) for k, v in by_size.items()})

    ones = np.ones(sem.tree.n, dtype=bool)
    leaves = [(TOP, ones), (BOT, ~ones)] + [(Atom(v), sem.atom(v)) for v in universe]
    for f, vec in leaves:
        candidates += 1
        hit = add(1, f, vec)
        if hit is not None:
            return report(hit)

    unary = [(Not, np.logical_not), (Before, sem.before), (Once, sem.once), (Hist, sem.hist)]
    unary = [u for u, sym in zip(unary, ("!", "Y", "O", "H")) if sym in operators]
    binary = [(And, np.logical_and, True), (Or, np.logical_or, True), (Since, sem.since, False)]
    binary = [b for b, sym in zip(binary, ("&", "|", "S")) if sym in operators]

    for size in range(2, max_size + 1):
        for ctor, fn in unary:
            for f, vec in list(by_size.get(size - 1, [])):
                candidates += 1
                if candidates > budget:
                    raise BudgetExceeded(f"more than {budget} candidate formulas")
                hit = add(size, ctor(f), fn(vec))
                if hit is not None:
                    return report(hit)
        for ls in range(1, size - 1):
            rs = size - 1 - ls
            for ctor, fn, commutative in binary:
                if commutative and ls > rs:
                    continue
                lefts = list(by_size.get(ls, []))
                rights = list(by_size.get(rs, []))
                for i, (f, fv) in enumerate(lefts):
                    for j, (g, gv) in enumerate(rights):
                        if commutative and ls == rs and j < i:
                            continue
                        candidates += 1
                        if candidates > budget:
                            raise BudgetExceeded(f"more than {budget} candidate formulas")
                        hit = add(size, ctor(f, g), fn(fv, gv))
                        if hit is not None:
                            return report(hit)
    return report(None)
