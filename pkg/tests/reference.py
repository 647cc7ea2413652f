"""Reference semantics written from the definitions, sharing no evaluator code.

Formulas are evaluated with the existential clause for since; programs by
recursion on (variable, time) straight from the satisfaction points, with
the virtual instant 0 handled explicitly.
"""

from functools import lru_cache

from krlogic import pltl
from krlogic.programs import DelayRule, DynamicRule, StaticRule


def holds(phi, trace, t):
    steps = [frozenset(s) for s in trace]

    def sat(f, t):
        if t < 1:
            return False
        if isinstance(f, pltl.Top):
            return True
        if isinstance(f, pltl.Bot):
            return False
        if isinstance(f, pltl.Atom):
            return f.name in steps[t - 1]
        if isinstance(f, pltl.Not):
            return not sat(f.arg, t)
        if isinstance(f, pltl.And):
            return sat(f.left, t) and sat(f.right, t)
        if isinstance(f, pltl.Or):
            return sat(f.left, t) or sat(f.right, t)
        if isinstance(f, pltl.Before):
            return t >= 2 and sat(f.arg, t - 1)
        if isinstance(f, pltl.Since):
            return any(sat(f.right, j) and all(sat(f.left, k) for k in range(j + 1, t + 1))
                       for j in range(1, t + 1))
        if isinstance(f, pltl.Once):
            return any(sat(f.arg, j) for j in range(1, t + 1))
        if isinstance(f, pltl.Hist):
            return all(sat(f.arg, j) for j in range(1, t + 1))
        raise TypeError(f)

    return sat(phi, t)


def program_holds(program, trace, t, var):
    steps = [frozenset(s) for s in trace]

    @lru_cache(maxsize=None)
    def value(v, t):
        rule = program.definition.get(v)
        if rule is None:
            return t >= 1 and v in steps[t - 1]
        if isinstance(rule, StaticRule):
            return t >= 1 and static(rule.body, t)
        if isinstance(rule, DelayRule):
            return t >= 1 and value(rule.body, t - 1)
        return state(rule, t) == rule.heads.index(v) + 1

    @lru_cache(maxsize=None)
    def state(rule, t):
        if t == 0:
            return rule.operator.init
        letter = "".join("1" if value(a, t) else "0" for a in rule.args)
        return rule.operator.step(state(rule, t - 1), letter)

    def static(f, t):
        if isinstance(f, pltl.Atom):
            return value(f.name, t)
        if isinstance(f, pltl.Top):
            return True
        if isinstance(f, pltl.Bot):
            return False
        if isinstance(f, pltl.Not):
            return not static(f.arg, t)
        if isinstance(f, pltl.And):
            return static(f.left, t) and static(f.right, t)
        if isinstance(f, pltl.Or):
            return static(f.left, t) or static(f.right, t)
        raise TypeError(f)

    assert all(isinstance(r, (StaticRule, DelayRule, DynamicRule)) for r in program.rules)
    return value(var, t)


def parity_even(word, var="a"):
    return sum(var in s for s in word) % 2 == 0


def run_mealy(delta, theta, init, word):
    """Outputs of a Mealy machine given as plain dicts."""
    q, out = init, []
    for x in word:
        out.append(theta[q, x])
        q = delta[q, x]
    return out
