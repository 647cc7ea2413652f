"""Temporal logic programs built from rules of three kinds.

Program text has one rule per statement, each ending in ``.``::

    h :- a & !b.            % static rule
    p :- Y q.               % delay rule
    even, odd :- P(a).      % dynamic rule with a registered operator
    h :- a S b.             % since shorthand, see below
    x, y :- {"arity": 1, "states": 2, "init": 1, "delta": [[1, 2], [2, 1]]}(a).

``h :- a S b`` is shorthand for the dynamic rule ``h$1, h :- S(a, b)``: the
second head of a since rule is true exactly when ``a S b`` holds.

Semantics are computed by one forward pass over time.  At the virtual
instant ``t = 0`` dynamic heads follow the operator's initial state and every
other variable is false.
"""

import json
import re
from dataclasses import dataclass, field

from . import pltl
from .core import check_variable, is_variable_name, make_trace
from .errors import (
    ArityMismatch,
    DoubleDefinition,
    KRLSyntaxError,
    RecursiveProgram,
    TimeOutOfRange,
    UnknownVariable,
)
from .operators import OperatorAutomaton, default_registry, operator_from_json, since_operator
from .pltl import Atom, Formula, format_formula, parse_formula


@dataclass(frozen=True)
class StaticRule:
    head: str
    body: Formula

    def __post_init__(self):
        if not pltl.is_static(self.body):
            raise KRLSyntaxError(f"static rule for {self.head!r} has a temporal body")

    @property
    def heads(self):
        return (self.head,)

    def body_vars(self):
        return pltl.variables(self.body)

    def body_occurrences(self):
        out = []
        stack = [self.body]
        while stack:
            f = stack.pop()
            if isinstance(f, Atom):
                out.append(f.name)
            stack.extend(pltl.children(f))
        return out


@dataclass(frozen=True)
class DelayRule:
    head: str
    body: str

    @property
    def heads(self):
        return (self.head,)

    def body_vars(self):
        return (self.body,)

    def body_occurrences(self):
        return [self.body]


@dataclass(frozen=True)
class DynamicRule:
    heads: tuple
    operator: OperatorAutomaton
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "heads", tuple(self.heads))
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.heads) != self.operator.n_states:
            raise ArityMismatch(
                f"operator {self.operator.name or '?'} has {self.operator.n_states} states "
                f"but the rule has {len(self.heads)} heads")
        if len(self.args) != self.operator.arity:
            raise ArityMismatch(
                f"operator {self.operator.name or '?'} takes {self.operator.arity} arguments, "
                f"got {len(self.args)}")
        if len(set(self.heads)) != len(self.heads):
            raise DoubleDefinition(f"repeated head in {', '.join(self.heads)}")

    def body_vars(self):
        return tuple(dict.fromkeys(self.args))

    def body_occurrences(self):
        return list(self.args)

    @property
    def is_since(self):
        return self.operator == since_operator()


Rule = (StaticRule, DelayRule, DynamicRule)


def _find_cycle(graph):
    """Return a list of variables forming a cycle in ``graph``, or None."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = {v: WHITE for v in graph}
    stack_path = []

    def dfs(v):
        color[v] = GREY
        stack_path.append(v)
        for w in graph.get(v, ()):
            if color.get(w, WHITE) == GREY:
                return stack_path[stack_path.index(w):] + [w]
            if color.get(w, WHITE) == WHITE:
                found = dfs(w)
                if found:
                    return found
        stack_path.pop()
        color[v] = BLACK
        return None

    for v in list(graph):
        if color[v] == WHITE:
            found = dfs(v)
            if found:
                return found
    return None


class Program:
    """A definitorial, nonrecursive set of rules.

    ``inputs`` may declare input variables (and their order) beyond those
    that occur in rule bodies.
    """

    def __init__(self, rules, inputs=()):
        self.rules = tuple(rules)
        self.definition = {}
        for r in self.rules:
            for h in r.heads:
                if h in self.definition:
                    raise DoubleDefinition(f"variable {h!r} is defined twice")
                self.definition[h] = r
        seen = dict.fromkeys(v for v in inputs if v not in self.definition)
        for v in inputs:
            if v in self.definition:
                raise DoubleDefinition(f"declared input {v!r} is also defined")
        for r in self.rules:
            for v in r.body_vars():
                if v not in self.definition:
                    seen.setdefault(v, None)
        self.inputs = tuple(seen)
        self.defined = tuple(h for r in self.rules for h in r.heads)

        graph = {v: [] for v in self.variables}
        for r in self.rules:
            for v in r.body_vars():
                graph[v].extend(r.heads)
        cycle = _find_cycle(graph)
        if cycle:
            raise RecursiveProgram(cycle)
        self.order = self._topological_order()

    @property
    def variables(self):
        return self.inputs + self.defined

    def _topological_order(self):
        placed = set()
        remaining = list(self.rules)
        order = []
        while remaining:
            for i, r in enumerate(remaining):
                if all(v not in self.definition or v in placed for v in r.body_vars()):
                    order.append(r)
                    placed.update(r.heads)
                    del remaining[i]
                    break
        return tuple(order)

    def kind(self, var):
        r = self.definition.get(var)
        if r is None:
            return "input"
        if isinstance(r, StaticRule):
            return "static"
        if isinstance(r, DelayRule):
            return "delay"
        return "dynamic"

    def value_at_zero(self, var):
        r = self.definition.get(var)
        if isinstance(r, DynamicRule):
            return r.heads.index(var) + 1 == r.operator.init
        return False

    def operators(self):
        return [r.operator for r in self.rules if isinstance(r, DynamicRule)]

    def with_inputs(self, inputs):
        return Program(self.rules, inputs)

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __eq__(self, other):
        return isinstance(other, Program) and self.rules == other.rules

    def __hash__(self):
        return hash(self.rules)

    def __str__(self):
        return format_program(self)

    def __repr__(self):
        return f"Program({len(self.rules)} rules, inputs={self.inputs})"


def program_size(program):
    """Symbol count: heads plus body nodes, with one symbol per ``Y`` or operator."""
    total = 0
    for r in program.rules:
        if isinstance(r, StaticRule):
            total += 1 + pltl.size(r.body)
        elif isinstance(r, DelayRule):
            total += 3
        else:
            total += len(r.heads) + 1 + len(r.args)
    return total


# -- text format ------------------------------------------------------------

_IDENT = r"[a-zA-Z_][a-zA-Z0-9_'$]*"
_DELAY_RE = re.compile(rf"\s*Y\s*(?:\(\s*({_IDENT})\s*\)|({_IDENT}))\s*\Z")
_SINCE_RE = re.compile(rf"\s*({_IDENT})\s+S\s+({_IDENT})\s*\Z")
_DYN_RE = re.compile(rf"\s*({_IDENT}|@[^()\s]+)\s*\((.*)\)\s*\Z", re.S)


def _split_statements(text):
    """Split on ``.`` outside braces; strip ``%`` and ``#`` comments."""
    lines = []
    for line in text.splitlines():
        for marker in ("%", "#"):
            if marker in line:
                line = line[: line.index(marker)]
        lines.append(line)
    text = "\n".join(lines)
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch == "." and depth == 0:
            out.append((text[start:i], start))
            start = i + 1
    if text[start:].strip():
        raise KRLSyntaxError("rule not terminated by '.'", position=start)
    return [(s, p) for s, p in out if s.strip()]


def _split_args(text):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "{[":
            depth += 1
        elif ch in "}]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _fresh_name(base, taken):
    k = 1
    while f"{base}${k}" in taken:
        k += 1
    return f"{base}${k}"


def parse_rule(text, registry=None, allow_generated=False, base_dir=None, taken=()):
    registry = registry or default_registry
    if ":-" not in text:
        raise KRLSyntaxError(f"missing ':-' in rule {text.strip()!r}")
    head_text, body_text = text.split(":-", 1)
    heads = [h.strip() for h in head_text.split(",")]
    for h in heads:
        check_variable(h, allow_generated)

    m = _DELAY_RE.fullmatch(body_text)
    if m:
        if len(heads) != 1:
            raise ArityMismatch("a delay rule has exactly one head")
        body = m.group(1) or m.group(2)
        return DelayRule(heads[0], check_variable(body, allow_generated))

    m = _SINCE_RE.fullmatch(body_text)
    if m and len(heads) == 1:
        a = check_variable(m.group(1), allow_generated)
        b = check_variable(m.group(2), allow_generated)
        neg = _fresh_name(heads[0], set(taken) | {heads[0], a, b})
        return DynamicRule((neg, heads[0]), since_operator(), (a, b))

    stripped = body_text.strip()
    if stripped.startswith("{"):
        depth = 0
        for i, ch in enumerate(stripped):
            depth += ch == "{"
            depth -= ch == "}"
            if depth == 0:
                break
        try:
            op = operator_from_json(json.loads(stripped[: i + 1]))
        except json.JSONDecodeError as exc:
            raise KRLSyntaxError(f"bad inline operator JSON: {exc}") from exc
        rest = stripped[i + 1:].strip()
        if not (rest.startswith("(") and rest.endswith(")")):
            raise KRLSyntaxError("inline operator must be followed by an argument list")
        return _dynamic(heads, op, rest[1:-1], allow_generated)

    m = _DYN_RE.fullmatch(body_text)
    if m and m.group(1) not in ("Y", "O", "H"):
        name = m.group(1)
        if name.startswith("@"):
            import os

            from .operators import load_operator

            path = name[1:]
            if base_dir and not os.path.isabs(path):
                path = os.path.join(base_dir, path)
            op = load_operator(path)
        else:
            op = registry.lookup(name)
        return _dynamic(heads, op, m.group(2), allow_generated)

    if len(heads) != 1:
        raise ArityMismatch("a static rule has exactly one head")
    body = parse_formula(body_text, allow_generated)
    if not pltl.is_static(body):
        raise KRLSyntaxError(
            f"body of {heads[0]!r} mixes temporal operators into a static rule; "
            "use delay rules, since rules or dynamic rules")
    return StaticRule(heads[0], body)


def _dynamic(heads, op, args_text, allow_generated):
    args = [a for a in _split_args(args_text) if a] if args_text.strip() else []
    for a in args:
        check_variable(a, allow_generated)
    return DynamicRule(tuple(heads), op, tuple(args))


def parse_program(text, registry=None, allow_generated=False, inputs=(), base_dir=None):
    rules = []
    taken = set()
    for stmt, pos in _split_statements(text):
        try:
            r = parse_rule(stmt, registry, allow_generated, base_dir, taken)
        except KRLSyntaxError as exc:
            if exc.position is None:
                raise KRLSyntaxError(str(exc), position=pos) from exc
            raise
        taken.update(r.heads)
        rules.append(r)
    return Program(rules, inputs)


def load_program(path, registry=None, allow_generated=True):
    import os

    with open(path) as fh:
        return parse_program(fh.read(), registry, allow_generated,
                             base_dir=os.path.dirname(os.path.abspath(path)))


def format_rule(r, registry=None):
    registry = registry or default_registry
    if isinstance(r, StaticRule):
        return f"{r.head} :- {format_formula(r.body)}."
    if isinstance(r, DelayRule):
        return f"{r.head} :- Y {r.body}."
    op = r.operator
    name = op.name
    try:
        known = bool(name) and registry.lookup(name) == op
    except Exception:
        known = False
    if known:
        body = f"{name}({', '.join(r.args)})"
    else:
        layout = {"arity": op.arity, "states": op.n_states, "init": op.init,
                  "delta": [list(row) for row in op.delta]}
        body = f"{json.dumps(layout)}({', '.join(r.args)})"
    return f"{', '.join(r.heads)} :- {body}."


def format_program(program, registry=None):
    return "\n".join(format_rule(r, registry) for r in program.rules) + "\n"


# -- semantics --------------------------------------------------------------

def _compile_static(f, index):
    if isinstance(f, pltl.Top):
        return lambda v: True
    if isinstance(f, pltl.Bot):
        return lambda v: False
    if isinstance(f, Atom):
        i = index[f.name]
        return lambda v: v[i]
    if isinstance(f, pltl.Not):
        g = _compile_static(f.arg, index)
        return lambda v: not g(v)
    if isinstance(f, pltl.And):
        g, h = _compile_static(f.left, index), _compile_static(f.right, index)
        return lambda v: g(v) and h(v)
    if isinstance(f, pltl.Or):
        g, h = _compile_static(f.left, index), _compile_static(f.right, index)
        return lambda v: g(v) or h(v)
    raise TypeError(f"not a static formula: {f!r}")


class ProgramSimulator:
    """Forward simulation of a program, one time step at a time.

    A state is the tuple of truth values of :attr:`variables` at one instant.
    """

    def __init__(self, program):
        self.program = program
        self.variables = program.variables
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.inputs = [(self.index[v], v) for v in program.inputs]
        steps = []
        for r in program.order:
            if isinstance(r, StaticRule):
                steps.append(("static", self.index[r.head], _compile_static(r.body, self.index)))
            elif isinstance(r, DelayRule):
                steps.append(("delay", self.index[r.head], self.index[r.body]))
            else:
                heads = tuple(self.index[h] for h in r.heads)
                args = tuple(self.index[a] for a in r.args)
                steps.append(("dynamic", heads, (args, r.operator.delta)))
        self.steps = steps

    def start(self):
        return tuple(self.program.value_at_zero(v) for v in self.variables)

    def step(self, prev, letter):
        vals = [False] * len(self.variables)
        for i, v in self.inputs:
            vals[i] = v in letter
        for kind, target, data in self.steps:
            if kind == "static":
                vals[target] = data(vals)
            elif kind == "delay":
                vals[target] = prev[data]
            else:
                args, delta = data
                # exactly one head holds at every instant
                q = next(k for k, h in enumerate(target) if prev[h])
                x = 0
                for a in args:
                    x = (x << 1) | vals[a]
                nq = delta[q][x]
                for k, h in enumerate(target):
                    vals[h] = k + 1 == nq
        return tuple(vals)

    def run(self, trace):
        state = self.start()
        out = [state]
        for letter in trace:
            state = self.step(state, letter)
            out.append(state)
        return out

    def true_sets(self, trace):
        """Per time point 0..l, the set of variables that hold."""
        return [frozenset(v for v, b in zip(self.variables, s) if b) for s in self.run(trace)]


def _check_trace(program, trace):
    bad = trace.variables() & set(program.defined)
    if bad:
        raise UnknownVariable(
            f"interpretation assigns defined variables: {', '.join(sorted(bad))}")


def eval_program(program, trace, t, formula):
    """Decide ``(P, I, t) |= formula``.

    ``formula`` may be a variable name or a formula over the program's
    variables; temporal operators in it range over the program's valuations.
    At ``t = 0`` only static formulas are evaluated.
    """
    trace = make_trace(trace)
    if isinstance(formula, str):
        name = formula.strip()
        formula = Atom(name) if is_variable_name(name, allow_generated=True) else parse_formula(name)
    known = set(program.variables)
    unknown = [v for v in pltl.variables(formula) if v not in known]
    if unknown:
        raise UnknownVariable(f"not a variable of the program: {', '.join(unknown)}")
    if not isinstance(t, int) or not 0 <= t <= len(trace):
        raise TimeOutOfRange(f"time {t} outside [0, {len(trace)}]")
    _check_trace(program, trace)
    valuations = ProgramSimulator(program).true_sets(trace)
    if t == 0:
        if not pltl.is_static(formula):
            raise TimeOutOfRange("only static formulas are defined at t = 0")
        return pltl.eval_formula(formula, [valuations[0]], 1)
    return pltl.eval_formula(formula, valuations[1:], t)


def eval_program_all(program, trace, var):
    """Truth of ``var`` at each time point 1..l."""
    trace = make_trace(trace)
    sim = ProgramSimulator(program)
    i = sim.index[var]
    return [s[i] for s in sim.run(trace)[1:]]


def recognizes_program(program, trace, accept_var):
    if accept_var not in program.variables:
        raise UnknownVariable(f"{accept_var!r} is not a variable of the program")
    trace = make_trace(trace)
    return eval_program(program, trace, len(trace), accept_var)


# -- normal and treelike programs -------------------------------------------

@dataclass
class NormalReport:
    normal: bool
    diagnostics: list = field(default_factory=list)

    def __bool__(self):
        return self.normal


def is_normal(program):
    """Check the normal form: static and temporal rules alternate.

    Temporal rules must be ``h :- Y p`` or since rules, their bodies may not
    mention temporally-defined variables, and static bodies may not mention
    statically-defined variables.  Input variables are allowed everywhere.
    """
    diags = []
    kinds = {v: program.kind(v) for v in program.variables}
    for r in program.rules:
        text = format_rule(r)
        if isinstance(r, StaticRule):
            bad = [v for v in r.body_vars() if kinds[v] == "static"]
            if bad:
                diags.append(f"{text} static body mentions statically-defined {', '.join(bad)}")
        else:
            if isinstance(r, DynamicRule) and not r.is_since:
                diags.append(f"{text} temporal rule is neither a delay nor a since rule")
            bad = [v for v in r.body_vars() if kinds[v] in ("delay", "dynamic")]
            if bad:
                diags.append(f"{text} temporal body mentions temporally-defined {', '.join(bad)}")
    return NormalReport(not diags, diags)


def is_treelike(program):
    """True iff every rule body has at most one occurrence of a defined variable."""
    defined = set(program.defined)
    return all(
        sum(1 for v in r.body_occurrences() if v in defined) <= 1 for r in program.rules
    )
