"""Past LTL formulas with their parser and evaluators.

Concrete syntax::

    true  false  a  !f  f & g  f | g  Y f  O f  H f  f S g

``Y`` is the before operator, ``S`` is since, ``O`` (once) and ``H``
(historically) are sugar for ``true S f`` and ``!(true S !f)``.  Prefix
operators bind tightest, then ``&``, ``|`` and finally ``S``, which is
right-associative.
"""

import re
from dataclasses import dataclass

from .core import check_variable, make_trace
from .errors import KRLSyntaxError, TimeOutOfRange


class Formula:
    __slots__ = ()

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)

    def __invert__(self):
        return Not(self)

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True, repr=False)
class Top(Formula):
    def __repr__(self):
        return "Top()"


@dataclass(frozen=True, repr=False)
class Bot(Formula):
    def __repr__(self):
        return "Bot()"


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Before(Formula):
    arg: Formula


@dataclass(frozen=True)
class Since(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Once(Formula):
    arg: Formula


@dataclass(frozen=True)
class Hist(Formula):
    arg: Formula


TOP = Top()
BOT = Bot()

UNARY = (Not, Before, Once, Hist)
BINARY = (And, Or, Since)
TEMPORAL = (Before, Since, Once, Hist)


def children(phi):
    if isinstance(phi, UNARY):
        return (phi.arg,)
    if isinstance(phi, BINARY):
        return (phi.left, phi.right)
    return ()


def expand(phi):
    """Replace ``O`` and ``H`` by their definitions in terms of ``S``."""
    if isinstance(phi, Once):
        return Since(TOP, expand(phi.arg))
    if isinstance(phi, Hist):
        return Not(Since(TOP, Not(expand(phi.arg))))
    if isinstance(phi, UNARY):
        return type(phi)(expand(phi.arg))
    if isinstance(phi, BINARY):
        return type(phi)(expand(phi.left), expand(phi.right))
    return phi


def size(phi):
    """Node count of the formula with ``O``/``H`` expanded.

    Shared subtrees are counted once per occurrence, so the size of an
    unfolded program is its size as a tree even when built as a DAG.
    """
    memo = {}

    def go(f):
        key = id(f)
        if key not in memo:
            if isinstance(f, Once):
                memo[key] = 2 + go(f.arg)
            elif isinstance(f, Hist):
                memo[key] = 4 + go(f.arg)
            else:
                memo[key] = 1 + sum(go(c) for c in children(f))
        return memo[key]

    return go(phi)


def node_count(phi):
    """Syntax nodes as written, ``O`` and ``H`` counting one each."""
    return 1 + sum(node_count(c) for c in children(phi))


def variables(phi):
    """Variables of ``phi`` in order of first (left-to-right) occurrence."""
    seen = {}
    stack = [phi]
    while stack:
        f = stack.pop()
        if isinstance(f, Atom):
            seen.setdefault(f.name, None)
        stack.extend(reversed(children(f)))
    return tuple(seen)


def is_static(phi):
    if isinstance(phi, TEMPORAL):
        return False
    return all(is_static(c) for c in children(phi))


def temporal_count(phi):
    own = 1 if isinstance(phi, TEMPORAL) else 0
    return own + sum(temporal_count(c) for c in children(phi))


# -- printing ---------------------------------------------------------------

_PREC = {Since: 1, Or: 2, And: 3}
_PREFIX = {Not: "!", Before: "Y ", Once: "O ", Hist: "H "}
_INFIX = {Since: "S", Or: "|", And: "&"}


def _prec(phi):
    if isinstance(phi, BINARY):
        return _PREC[type(phi)]
    if isinstance(phi, UNARY):
        return 4
    return 5


def format_formula(phi):
    def wrap(f, need):
        s = go(f)
        return f"({s})" if _prec(f) < need else s

    def go(f):
        if isinstance(f, Top):
            return "true"
        if isinstance(f, Bot):
            return "false"
        if isinstance(f, Atom):
            return f.name
        if isinstance(f, UNARY):
            return _PREFIX[type(f)] + wrap(f.arg, 4)
        p = _PREC[type(f)]
        if isinstance(f, Since):
            left, right = wrap(f.left, p + 1), wrap(f.right, p)
        else:
            left, right = wrap(f.left, p), wrap(f.right, p + 1)
        return f"{left} {_INFIX[type(f)]} {right}"

    return go(phi)


# -- parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<ident>[a-zA-Z_][a-zA-Z0-9_'$]*)|(?P<sym>[!~&|()]))")
_KEYWORDS = {"S", "Y", "O", "H", "true", "false"}


def _tokenize(text):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise KRLSyntaxError(f"unexpected character {text[pos]!r}", position=pos)
        tok = m.group("ident") or m.group("sym")
        tokens.append((tok, m.start(m.lastgroup)))
        pos = m.end()
    tokens.append((None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, allow_generated):
        self.tokens = _tokenize(text)
        self.i = 0
        self.allow_generated = allow_generated

    def peek(self):
        return self.tokens[self.i][0]

    def pos(self):
        return self.tokens[self.i][1]

    def take(self, expected=None):
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            shown = "end of input" if tok is None else repr(tok)
            raise KRLSyntaxError(f"expected {expected!r}, found {shown}", position=pos)
        self.i += 1
        return tok

    def since(self):
        left = self.disj()
        if self.peek() == "S":
            self.take()
            return Since(left, self.since())
        return left

    def disj(self):
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self):
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self):
        tok = self.peek()
        if tok in ("!", "~"):
            self.take()
            return Not(self.unary())
        if tok == "Y":
            self.take()
            return Before(self.unary())
        if tok == "O":
            self.take()
            return Once(self.unary())
        if tok == "H":
            self.take()
            return Hist(self.unary())
        return self.atom()

    def atom(self):
        tok, pos = self.tokens[self.i]
        if tok == "(":
            self.take()
            f = self.since()
            self.take(")")
            return f
        if tok == "true":
            self.take()
            return TOP
        if tok == "false":
            self.take()
            return BOT
        if tok is None or tok in _KEYWORDS or not (tok[0].isalpha() or tok[0] == "_"):
            shown = "end of input" if tok is None else repr(tok)
            raise KRLSyntaxError(f"expected a formula, found {shown}", position=pos)
        if "$" in tok and not self.allow_generated:
            raise KRLSyntaxError(f"'$' is reserved for generated names: {tok!r}", position=pos)
        self.take()
        return Atom(tok)


def parse_formula(text, allow_generated=False):
    p = _Parser(text, allow_generated)
    f = p.since()
    if p.peek() is not None:
        raise KRLSyntaxError(f"unexpected {p.peek()!r}", position=p.pos())
    return f


def atom(name):
    return Atom(check_variable(name, allow_generated=True))


# -- evaluation -------------------------------------------------------------

def _check_time(trace, t):
    if not isinstance(t, int) or not 1 <= t <= len(trace):
        raise TimeOutOfRange(f"time {t} outside [1, {len(trace)}]")


def eval_formula(phi, trace, t):
    """Decide ``I, t |= phi`` by the direct satisfaction clauses.

    Since is checked by searching for the witness ``j`` in ``[1, t]``.
    Results are memoised per (subformula, time).
    """
    trace = make_trace(trace)
    _check_time(trace, t)
    return _direct(trace)(phi, t)


def _direct(trace):
    memo = {}

    def sat(f, t):
        if t < 1:
            # only reachable through Before at t = 1
            return False
        key = (id(f), t)
        if key in memo:
            return memo[key]
        if isinstance(f, Top):
            r = True
        elif isinstance(f, Bot):
            r = False
        elif isinstance(f, Atom):
            r = f.name in trace.at(t)
        elif isinstance(f, Not):
            r = not sat(f.arg, t)
        elif isinstance(f, And):
            r = sat(f.left, t) and sat(f.right, t)
        elif isinstance(f, Or):
            r = sat(f.left, t) or sat(f.right, t)
        elif isinstance(f, Before):
            r = sat(f.arg, t - 1)
        elif isinstance(f, Since):
            r = any(
                sat(f.right, j) and all(sat(f.left, k) for k in range(j + 1, t + 1))
                for j in range(1, t + 1)
            )
        elif isinstance(f, Once):
            r = any(sat(f.arg, j) for j in range(1, t + 1))
        elif isinstance(f, Hist):
            r = all(sat(f.arg, j) for j in range(1, t + 1))
        else:
            raise TypeError(f"not a formula: {f!r}")
        memo[key] = r
        return r

    return sat


def truth_table(phi, trace, semantics="direct"):
    """Truth of ``phi`` at every time point, under either semantics."""
    trace = make_trace(trace)
    if semantics == "direct":
        sat = _direct(trace)
        return [sat(phi, t) for t in range(1, len(trace) + 1)]
    if semantics == "inductive":
        return eval_all(phi, trace)
    raise ValueError(f"unknown semantics {semantics!r}")


class FormulaMonitor:
    """Step-by-step evaluator using the inductive characterisation of since.

    The state after ``t`` steps is the tuple of truth values of every
    subformula at time ``t`` (``None`` before the first step).
    """

    def __init__(self, phi):
        self.formula = phi
        order = []
        index = {}

        def visit(f):
            if f in index:
                return index[f]
            kids = tuple(visit(c) for c in children(expand_once(f)))
            index[f] = len(order)
            order.append((expand_once(f), kids))
            return index[f]

        self.root = visit(phi)
        self.nodes = order

    def start(self):
        return None

    def step(self, prev, letter):
        vals = [False] * len(self.nodes)
        for i, (f, kids) in enumerate(self.nodes):
            if isinstance(f, Top):
                v = True
            elif isinstance(f, Bot):
                v = False
            elif isinstance(f, Atom):
                v = f.name in letter
            elif isinstance(f, Not):
                v = not vals[kids[0]]
            elif isinstance(f, And):
                v = vals[kids[0]] and vals[kids[1]]
            elif isinstance(f, Or):
                v = vals[kids[0]] or vals[kids[1]]
            elif isinstance(f, Before):
                v = prev is not None and prev[kids[0]]
            elif isinstance(f, Since):
                v = vals[kids[1]] or (prev is not None and prev[i] and vals[kids[0]])
            else:
                raise TypeError(f"not a formula: {f!r}")
            vals[i] = v
        return tuple(vals)

    def value(self, state):
        return state[self.root]


def expand_once(f):
    """One-level desugaring, keeping the children shared with the original."""
    if isinstance(f, Once):
        return Since(TOP, f.arg)
    if isinstance(f, Hist):
        return Not(Since(TOP, Not(f.arg)))
    return f


def eval_formula_inductive(phi, trace, t):
    """Decide ``I, t |= phi`` by forward recursion on time."""
    trace = make_trace(trace)
    _check_time(trace, t)
    mon = FormulaMonitor(phi)
    state = mon.start()
    for k in range(1, t + 1):
        state = mon.step(state, trace.at(k))
    return mon.value(state)


def eval_all(phi, trace):
    """Truth values of ``phi`` at every time point, via the monitor."""
    trace = make_trace(trace)
    mon = FormulaMonitor(phi)
    state = mon.start()
    out = []
    for step in trace:
        state = mon.step(state, step)
        out.append(mon.value(state))
    return out


def recognizes(phi, trace):
    trace = make_trace(trace)
    return eval_formula(phi, trace, len(trace))
