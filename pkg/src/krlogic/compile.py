"""Translations from formulas to programs to cascades, and back.

Generated variable names have the form ``<base>$k``.  The ``$`` is rejected
in user-written formulas and programs, so generated and user names never
collide.  Boolean input and output functions are turned into formulas by
truth table and disjunctive normal form over the variables they actually
depend on; no further minimisation is attempted.
"""

import numpy as np
from dataclasses import dataclass, field

from . import pltl
from .automata import (
    HIGH,
    LOW,
    READ,
    RESET,
    SET,
    Automaton,
    InputFunction,
    Semiautomaton,
    canonical_flip_flop,
    compose,
    is_bit_alphabet,
    transformations_of,
)
from .cascades import AutoCascade
from .core import bit_letters
from .errors import (
    KRLSyntaxError,
    NotBitAlphabet,
    UnknownVariable,
    UnsupportedInitialState,
    UnsupportedOperator,
)
from .operators import OperatorAutomaton, since_operator
from .pltl import BOT, TOP, And, Atom, Before, Not, Or, Since
from .programs import (
    DelayRule,
    DynamicRule,
    Program,
    ProgramSimulator,
    StaticRule,
    _compile_static,
    program_size,
)


class FreshNames:
    def __init__(self, taken=()):
        self.taken = set(taken)

    def reserve(self, names):
        self.taken.update(names)

    def new(self, base):
        k = 1
        while f"{base}${k}" in self.taken:
            k += 1
        name = f"{base}${k}"
        self.taken.add(name)
        return name


@dataclass
class VariableWiring:
    """Where each interface variable lives in a compiled artifact.

    ``inputs`` lists the external variables in bit order; ``signals`` maps a
    variable to ``(component, bit)`` in the cascade's per-component outputs.
    """

    inputs: tuple
    signals: dict = field(default_factory=dict)

    def variable_at(self, component, bit):
        for v, loc in self.signals.items():
            if loc == (component, bit):
                return v
        raise KeyError((component, bit))


# -- Boolean functions as formulas ------------------------------------------

def _conj(literals):
    if not literals:
        return TOP
    f = literals[0]
    for g in literals[1:]:
        f = And(f, g)
    return f


def _disj(terms):
    if not terms:
        return BOT
    f = terms[0]
    for g in terms[1:]:
        f = Or(f, g)
    return f


def boolean_formula(fn, names, atoms=None):
    """DNF for a Boolean function over the bit strings of ``names``.

    ``fn`` is a callable on bit strings (first name most significant) or the
    sequence of its values in binary order.  Variables the function does not
    depend on are dropped first.  ``atoms`` maps names to replacement formulas.
    """
    n = len(names)
    atoms = atoms or {v: Atom(v) for v in names}
    values = [bool(fn(x)) for x in bit_letters(n)] if callable(fn) else [bool(b) for b in fn]
    table = np.array(values, dtype=bool).reshape((2,) * n)
    support = [i for i in range(n)
               if np.any(np.take(table, 0, axis=i) != np.take(table, 1, axis=i))]
    reduced = table[tuple(slice(None) if i in support else 0 for i in range(n))]
    if reduced.all():
        return TOP
    if not reduced.any():
        return BOT
    terms = []
    for idx in zip(*np.nonzero(reduced)):
        terms.append(_conj([atoms[names[i]] if b else Not(atoms[names[i]])
                            for i, b in zip(support, idx)]))
    return _disj(terms)


def _flip(x, i):
    return x[:i] + ("1" if x[i] == "0" else "0") + x[i + 1:]


def _project(x, positions):
    return "".join(x[i] for i in positions)


def _static_table(formula, names):
    fn = _compile_static(formula, {v: i for i, v in enumerate(names)})
    return [fn([b == "1" for b in x]) for x in bit_letters(len(names))]


# -- single rules to automata -----------------------------------------------

def _rule_inputs(rule, input_names):
    if input_names is None:
        return tuple(rule.body_vars())
    input_names = tuple(input_names)
    missing = [v for v in rule.body_vars() if v not in input_names]
    if missing:
        raise UnknownVariable(f"rule body uses {', '.join(missing)} outside the inputs")
    return input_names


def delay_rule_to_automaton(rule, input_names=None, init_high=False):
    """Flip-flop that sets on the body variable and resets otherwise.

    Its Mealy output is the pre-update state, so at time ``t`` it reports the
    body's value at ``t - 1``.  ``init_high`` starts it in ``high``, used when
    the body is true at the virtual instant 0.
    """
    names = _rule_inputs(rule, input_names)
    pos = names.index(rule.body)
    letters = bit_letters(len(names))
    phi = InputFunction(letters, (SET, RESET, READ),
                        tuple(SET if x[pos] == "1" else RESET for x in letters))
    semi = compose(phi, canonical_flip_flop())
    return Automaton.from_functions(semi, HIGH if init_high else LOW, ("0", "1"),
                                    lambda q, x: "1" if q == HIGH else "0",
                                    input_names=names, output_names=(rule.head,))


def _one_hot(i, n):
    return "".join("1" if k == i else "0" for k in range(1, n + 1))


def dynamic_rule_to_automaton(rule, input_names=None):
    """Operator semiautomaton whose output is the one-hot post-update state."""
    names = _rule_inputs(rule, input_names)
    op = rule.operator
    positions = [names.index(a) for a in rule.args]
    letters = bit_letters(len(names))
    states = tuple(range(1, op.n_states + 1))
    semi = Semiautomaton.from_function(
        letters, states, lambda q, x: op.step(q, _project(x, positions)))
    outs = bit_letters(op.n_states)
    return Automaton.from_functions(
        semi, op.init, outs, lambda q, x: _one_hot(op.step(q, _project(x, positions)), op.n_states),
        input_names=names, output_names=rule.heads)


def static_rule_to_automaton(rule, input_names=None):
    names = _rule_inputs(rule, input_names)
    letters = bit_letters(len(names))
    values = _static_table(rule.body, names)
    return Automaton(letters, (1,), (tuple(0 for _ in letters),), 1, ("0", "1"),
                     (tuple(int(v) for v in values),),
                     input_names=names, output_names=(rule.head,))


def _true_names(names, x):
    return {v for v, b in zip(names, x) if b == "1"}


def rule_to_automaton(rule, input_names=None, program=None):
    if isinstance(rule, StaticRule):
        return static_rule_to_automaton(rule, input_names)
    if isinstance(rule, DelayRule):
        init_high = program.value_at_zero(rule.body) if program is not None else False
        return delay_rule_to_automaton(rule, input_names, init_high)
    return dynamic_rule_to_automaton(rule, input_names)


# -- programs to cascades ---------------------------------------------------

def program_to_cascade(program, inputs=None):
    """One component per rule, in dependency order.

    Component ``i`` reads the program inputs followed by the outputs of all
    earlier components.  Returns the cascade and where each variable lives.
    """
    inputs = tuple(inputs) if inputs is not None else program.inputs
    missing = [v for v in program.inputs if v not in inputs]
    if missing:
        raise UnknownVariable(f"inputs missing from the declared order: {', '.join(missing)}")
    wire = list(inputs)
    comps = []
    wiring = VariableWiring(inputs)
    for i, rule in enumerate(program.order):
        comp = rule_to_automaton(rule, tuple(wire), program)
        comps.append(comp)
        for j, h in enumerate(rule.heads):
            wiring.signals[h] = (i, j)
        wire.extend(rule.heads)
    if not comps:
        # an empty program still needs a component to carry the inputs
        letters = bit_letters(len(inputs))
        semi = Semiautomaton(letters, (1,), (tuple(0 for _ in letters),))
        comps.append(Automaton.from_functions(semi, 1, ("",), lambda q, x: "",
                                              input_names=inputs, output_names=()))
    return AutoCascade(bit_letters(len(inputs)), tuple(comps), inputs), wiring


# -- automata and cascades to programs --------------------------------------

def _support(semi):
    """Bit positions the transition function depends on."""
    letters = semi.inputs
    index = {x: i for i, x in enumerate(letters)}
    m = len(letters[0])
    out = []
    for i in range(m):
        for x in letters:
            if x[i] == "0":
                y = index[_flip(x, i)]
                xi = index[x]
                if any(row[xi] != row[y] for row in semi.delta):
                    out.append(i)
                    break
    return out


def auto_factor(semi):
    """Factor ``semi`` as a projection onto the bits its transitions read."""
    support = _support(semi)
    core_letters = bit_letters(len(support))
    phi = InputFunction(semi.inputs, core_letters,
                        tuple(_project(x, support) for x in semi.inputs))
    rep = {}
    for x in semi.inputs:
        rep.setdefault(_project(x, support), x)
    delta = tuple(tuple(row[semi.letter_index(rep[y])] for y in core_letters)
                  for row in semi.delta)
    return phi, Semiautomaton(core_letters, semi.states, delta)


def automaton_to_program(automaton, input_names=None, output_names=None, phi=None,
                         core=None, fresh=None):
    """Program with one dynamic rule for the core and static rules for I/O.

    ``phi`` and ``core`` give an explicit factorisation of the automaton's
    semiautomaton; without them the input is projected onto the bits the
    transitions depend on.  Trivial automata only get output rules.
    """
    if not (is_bit_alphabet(automaton.inputs) and is_bit_alphabet(automaton.outputs)):
        raise NotBitAlphabet("automaton must read and write bit vectors")
    m = len(automaton.inputs[0])
    h = len(automaton.outputs[0])
    names = tuple(input_names or automaton.input_names or [f"a{i + 1}" for i in range(m)])
    fresh = fresh or FreshNames()
    fresh.reserve(names)
    if output_names is None:
        output_names = automaton.output_names
    if output_names is None:
        output_names = tuple(fresh.new(f"c{i + 1}") for i in range(h))
    output_names = tuple(output_names)
    fresh.reserve(output_names)
    if len(names) != m or len(output_names) != h:
        raise NotBitAlphabet("variable names do not match the alphabet widths")

    semi = automaton.semiautomaton
    n = len(semi.states)
    rules = []
    if n > 1:
        if phi is None or core is None:
            phi, core = auto_factor(semi)
        elif compose(phi, core) != Semiautomaton(semi.inputs, semi.states, semi.delta):
            raise ValueError("phi and core do not compose to the automaton's semiautomaton")
        k = len(core.inputs[0])
        b = [fresh.new(f"b{i + 1}") for i in range(k)]
        q = [fresh.new(f"q{i + 1}") for i in range(n)]
        qd = [fresh.new(f"d{i + 1}") for i in range(n)]
        op = OperatorAutomaton(
            k, n, tuple(tuple(core.delta[s][core.letter_index(y)] + 1 for y in bit_letters(k))
                        for s in range(n)),
            automaton.init_index + 1)
        rules.append(DynamicRule(tuple(q), op, tuple(b)))
        rules.extend(DelayRule(qd[i], q[i]) for i in range(n))
        table = phi.as_dict()
        for i in range(k):
            rules.append(StaticRule(b[i], boolean_formula(
                lambda x, i=i: table[x][i] == "1", names)))
    for i in range(h):
        per_state = [
            boolean_formula([automaton.outputs[y][i] == "1" for y in _bit_row(automaton, s)], names)
            for s in range(n)
        ]
        if n == 1 or all(f == per_state[0] for f in per_state):
            body = per_state[0]
        else:
            terms = []
            for s, f in enumerate(per_state):
                if f == TOP:
                    terms.append(Atom(qd[s]))
                elif f != BOT:
                    terms.append(And(Atom(qd[s]), f))
            body = _disj(terms)
        rules.append(StaticRule(output_names[i], body))
    program = Program(rules, names)
    wiring = VariableWiring(names, {v: (0, i) for i, v in enumerate(output_names)})
    return program, wiring


def _bit_row(automaton, s):
    """Output indices of state ``s`` in binary letter order."""
    row = automaton.theta[s]
    return [row[automaton.letter_index(x)] for x in bit_letters(len(automaton.inputs[0]))]


def cascade_to_program(cascade, input_names=None):
    """Union of the per-component programs, outputs threaded forward."""
    if not cascade.bit_mode or not is_bit_alphabet(cascade.outputs):
        raise NotBitAlphabet("cascade components must use bit alphabets")
    m = len(cascade.external_inputs[0])
    names = tuple(input_names or cascade.input_names or [f"x{i + 1}" for i in range(m)])
    fresh = FreshNames(names)
    for c in cascade.components:
        if c.output_names:
            fresh.reserve(c.output_names)
    wire = list(names)
    rules = []
    wiring = VariableWiring(names)
    for ci, comp in enumerate(cascade.components):
        width = len(comp.outputs[0])
        outs = comp.output_names or tuple(fresh.new(f"y{ci + 1}_{j + 1}") for j in range(width))
        sub, _ = automaton_to_program(comp, tuple(wire), outs, fresh=fresh)
        rules.extend(sub.rules)
        for j, v in enumerate(outs):
            wiring.signals[v] = (ci, j)
        wire.extend(outs)
    return Program(rules, names), wiring


# -- Past LTL to programs ---------------------------------------------------

def pltl_to_program(phi, fresh=None):
    """Program of the since logic equivalent to ``phi``; returns (program, accept var).

    One static rule per Boolean node, one delay rule per ``Y`` and one
    since rule per ``S``; identical subformulas share their rule.
    """
    fresh = fresh or FreshNames()
    fresh.reserve(pltl.variables(phi))
    rules = []
    memo = {}

    def ref(v):
        return Atom(v)

    def build(f):
        if isinstance(f, Atom):
            return f.name
        if f in memo:
            return memo[f]
        if isinstance(f, (pltl.Once, pltl.Hist)):
            v = build(pltl.expand_once(f))
        elif isinstance(f, (pltl.Top, pltl.Bot)):
            v = fresh.new("c")
            rules.append(StaticRule(v, f))
        elif isinstance(f, Not):
            x = build(f.arg)
            v = fresh.new("n")
            rules.append(StaticRule(v, Not(ref(x))))
        elif isinstance(f, (And, Or)):
            x, y = build(f.left), build(f.right)
            v = fresh.new("s")
            rules.append(StaticRule(v, type(f)(ref(x), ref(y))))
        elif isinstance(f, Before):
            x = build(f.arg)
            v = fresh.new("y")
            rules.append(DelayRule(v, x))
        elif isinstance(f, Since):
            x, y = build(f.left), build(f.right)
            neg = fresh.new("u")
            v = fresh.new("q")
            rules.append(DynamicRule((neg, v), since_operator(), (x, y)))
        else:
            raise TypeError(f"not a formula: {f!r}")
        memo[f] = v
        return v

    accept = build(phi)
    return Program(rules, pltl.variables(phi)), accept


def pltl_to_cascade(phi):
    """Cascade for ``phi`` and the (component, bit) carrying its truth value."""
    program, accept = pltl_to_program(phi)
    cascade, wiring = program_to_cascade(program)
    return cascade, wiring, accept


def formula_to_normal_program(phi, fresh=None):
    """Normal program for ``phi``; returns (program, accept var).

    Maximal Boolean subtrees become single static rules over inputs and
    temporally-defined variables; every ``Y`` and ``S`` gets its own temporal
    rule whose arguments are inputs or statically-defined variables.
    """
    fresh = fresh or FreshNames()
    inputs = pltl.variables(phi)
    fresh.reserve(inputs)
    input_set = set(inputs)
    rules = []
    memo = {}

    def as_static_var(expr):
        if isinstance(expr, Atom) and expr.name in input_set:
            return expr.name
        v = fresh.new("s")
        rules.append(StaticRule(v, expr))
        return v

    def build(f):
        """Static expression over inputs and temporally-defined variables."""
        f = pltl.expand_once(f)
        if isinstance(f, (Atom, pltl.Top, pltl.Bot)):
            return f
        if isinstance(f, Not):
            return Not(build(f.arg))
        if isinstance(f, (And, Or)):
            return type(f)(build(f.left), build(f.right))
        if f in memo:
            return Atom(memo[f])
        if isinstance(f, Before):
            x = as_static_var(build(f.arg))
            v = fresh.new("y")
            rules.append(DelayRule(v, x))
        elif isinstance(f, Since):
            x = as_static_var(build(f.left))
            y = as_static_var(build(f.right))
            neg = fresh.new("u")
            v = fresh.new("q")
            rules.append(DynamicRule((neg, v), since_operator(), (x, y)))
        else:
            raise TypeError(f"not a formula: {f!r}")
        memo[f] = v
        return Atom(v)

    expr = build(phi)
    if isinstance(expr, Atom):
        accept = expr.name
    else:
        accept = fresh.new("h")
        rules.append(StaticRule(accept, expr))
    return Program(rules, inputs), accept


# -- unfolding --------------------------------------------------------------

FIRST_INSTANT = Not(Before(TOP))


def _substitute(f, fn):
    if isinstance(f, Atom):
        return fn(f.name)
    if isinstance(f, pltl.UNARY):
        return type(f)(_substitute(f.arg, fn))
    if isinstance(f, pltl.BINARY):
        return type(f)(_substitute(f.left, fn), _substitute(f.right, fn))
    return f


def _flipflop_kinds(op):
    """For a 2-state operator made of identity and resets: letter -> kind."""
    if op.n_states != 2:
        return None
    kinds = {}
    for x in op.letters():
        image = (op.step(1, x), op.step(2, x))
        if image == (1, 2):
            kinds[x] = "id"
        elif image == (1, 1):
            kinds[x] = 1
        elif image == (2, 2):
            kinds[x] = 2
        else:
            return None
    return kinds


def unfold_program(program, var, allow_flipflops=False, check_bound=True):
    """Past LTL formula equivalent to ``var`` in ``program``.

    Since rules ``u, q :- S(b, c)`` unfold to ``!(b S c)`` and ``b S c``.
    A delay rule over a variable that is true at the virtual instant 0 adds
    ``| !Y true`` so the formula also holds at time 1.  With
    ``allow_flipflops`` any two-state operator built from identities and
    resets is unfolded through an equivalent since formula.
    """
    if var not in program.variables:
        raise UnknownVariable(f"{var!r} is not a variable of the program")
    memo = {}

    def go(v):
        if v in memo:
            return memo[v]
        r = program.definition.get(v)
        if r is None:
            f = Atom(v)
        elif isinstance(r, StaticRule):
            f = _substitute(r.body, go)
        elif isinstance(r, DelayRule):
            f = Before(go(r.body))
            if program.value_at_zero(r.body):
                f = Or(f, FIRST_INSTANT)
        else:
            f = _unfold_dynamic(r, v, go, allow_flipflops)
        memo[v] = f
        return f

    phi = go(var)
    if check_bound:
        bound = 2 ** program_size(program)
        if pltl.size(phi) > bound:
            raise AssertionError(f"unfolding of size {pltl.size(phi)} exceeds 2^|P| = {bound}")
    return phi


def _unfold_dynamic(rule, v, go, allow_flipflops):
    k = rule.heads.index(v) + 1
    if rule.is_since:
        s = Since(go(rule.args[0]), go(rule.args[1]))
        return Not(s) if k == 1 else s
    if not allow_flipflops:
        raise UnsupportedOperator(
            f"only since rules unfold; {rule.operator.name or 'anonymous operator'} found")
    op = rule.operator
    if op.n_states == 1:
        return TOP
    kinds = _flipflop_kinds(op)
    if kinds is None:
        raise UnsupportedOperator("operator is not built from identities and resets")
    args = [go(a) for a in rule.args]
    atoms = {f"#{i}": a for i, a in enumerate(args)}
    names = tuple(atoms)
    to = {s: boolean_formula(lambda x, s=s: kinds[x] == s, names, atoms) for s in (1, 2)}
    other = 2 if op.init == 1 else 1
    # the non-initial state is reached by its reset and kept until the other reset
    reached = Since(Not(to[op.init]), to[other])
    return reached if k == other else Not(reached)


def cascade_to_pltl(cascade, output_bit=0):
    """Past LTL formula for one output bit of a cascade of flip-flops."""
    program, wiring = cascade_to_program(cascade)
    var = wiring.variable_at(len(cascade.components) - 1, output_bit)
    return unfold_program(program, var, allow_flipflops=True, check_bound=False)


# -- flip-flop automata as Past LTL programs --------------------------------

def _static_values(program, true_vars):
    sim = ProgramSimulator(program)
    state = sim.step(sim.start(), frozenset(true_vars))
    return {v for v, b in zip(sim.variables, state) if b}


@dataclass(frozen=True)
class FlipFlopAutomaton:
    """Flip-flop automaton with input and output functions given as programs.

    ``input_program`` defines ``set`` and ``reset`` from the input variables;
    ``set`` wins when both hold and ``read`` is neither.  ``output_program``
    defines the output variables from ``high``, ``low`` (the state before the
    update) and the inputs.
    """

    inputs: tuple
    input_program: Program
    output_program: Program
    outputs: tuple
    init: str = LOW

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        for p in (self.input_program, self.output_program):
            if not all(isinstance(r, StaticRule) for r in p.rules):
                raise KRLSyntaxError("input and output programs must be static")
        for v in (SET, RESET):
            if v not in self.input_program.defined:
                raise KRLSyntaxError(f"input program must define {v!r}")
        allowed = set(self.inputs) | {HIGH, LOW} | set(self.input_program.defined)
        extra = set(self.output_program.inputs) - allowed
        if extra:
            raise UnknownVariable(f"output program reads {', '.join(sorted(extra))}")
        missing = set(self.outputs) - set(self.output_program.defined)
        if missing:
            raise UnknownVariable(f"outputs not defined: {', '.join(sorted(missing))}")

    def control(self, letter):
        vals = _static_values(self.input_program, letter)
        if SET in vals:
            return SET
        if RESET in vals:
            return RESET
        return READ

    def automaton(self):
        """The flip-flop automaton on bit vectors over ``inputs``."""
        letters = bit_letters(len(self.inputs))
        phi = InputFunction(letters, (SET, RESET, READ),
                            tuple(self.control(_true_names(self.inputs, x)) for x in letters))
        semi = compose(phi, canonical_flip_flop())

        def theta(q, x):
            env = _true_names(self.inputs, x) | {q}
            env |= _static_values(self.input_program, _true_names(self.inputs, x))
            vals = _static_values(self.output_program.with_inputs(()), env)
            return "".join("1" if v in vals else "0" for v in self.outputs)

        return Automaton.from_functions(semi, self.init, bit_letters(len(self.outputs)), theta,
                                        input_names=self.inputs, output_names=self.outputs)


def flipflop_automaton_to_pltl_program(ff, fresh=None):
    """Input and output programs plus ``high :- Y(!reset S set)`` and ``low :- !high``.

    The since is expressed with the since operator: ``r :- !reset``,
    ``u, w :- S(r, set)``, ``high :- Y w``.
    """
    if ff.init != LOW:
        raise UnsupportedInitialState("only flip-flop automata starting in 'low' are supported")
    fresh = fresh or FreshNames()
    fresh.reserve(ff.inputs + ff.outputs + (HIGH, LOW))
    fresh.reserve(ff.input_program.defined + ff.output_program.defined)
    r = fresh.new("r")
    u = fresh.new("u")
    w = fresh.new("w")
    rules = list(ff.input_program.rules) + list(ff.output_program.rules)
    rules += [
        StaticRule(r, Not(Atom(RESET))),
        DynamicRule((u, w), since_operator(), (r, SET)),
        DelayRule(HIGH, w),
        StaticRule(LOW, Not(Atom(HIGH))),
    ]
    return Program(rules, ff.inputs)


def before_to_flipflop(head, arg):
    """``head :- Y arg`` as a flip-flop automaton."""
    inp = Program([StaticRule(SET, Atom(arg)), StaticRule(RESET, Not(Atom(arg)))])
    out = Program([StaticRule(head, Atom(HIGH))])
    return FlipFlopAutomaton((arg,), inp, out, (head,))


def since_to_flipflop(head, a, b, stale_output=False):
    """``head :- a S b`` as a flip-flop automaton.

    The flip-flop sets on ``b``, resets on ``!b & !a`` and reads otherwise,
    so ``high`` is ``a S b`` one step earlier.  The output must then be
    ``b | (high & a)``.  ``stale_output=True`` gives ``high | b`` instead,
    which is wrong when ``a S b`` held before but ``a`` and ``b`` are false
    now; it is kept to exhibit the counterexample.
    """
    inp = Program([StaticRule(SET, Atom(b)),
                   StaticRule(RESET, And(Not(Atom(SET)), Not(Atom(a))))])
    if stale_output:
        body = Or(Atom(HIGH), Atom(b))
    else:
        body = Or(Atom(b), And(Atom(HIGH), Atom(a)))
    out = Program([StaticRule(head, body)])
    return FlipFlopAutomaton((a, b), inp, out, (head,))


def letter_classes(semi):
    """Group letters by the transformation they induce."""
    groups = {}
    for x, t in transformations_of(semi).items():
        groups.setdefault(t, []).append(x)
    return list(groups.values())


def rule_count(program):
    counts = {"static": 0, "delay": 0, "dynamic": 0}
    for r in program.rules:
        if isinstance(r, StaticRule):
            counts["static"] += 1
        elif isinstance(r, DelayRule):
            counts["delay"] += 1
        else:
            counts["dynamic"] += 1
    return counts
