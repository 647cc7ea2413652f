"""Semigroups of semiautomata and the classifications built on them.

Products follow the transformation convention of :mod:`krlogic.automata`:
``s * t`` applies ``s`` first.  Every brute-force search takes an explicit
cap and raises instead of truncating.
"""

import itertools
from dataclasses import dataclass

from .automata import (
    Automaton,
    InputFunction,
    Semiautomaton,
    Transformation,
    compose,
    transformations_of,
)
from .errors import NoInitialPreimage, NotAGroup, StateSpaceTooLarge, TooLarge

STATE_CAP = 8
GROUP_CAP = 24
ISO_CAP = 8


class Semigroup:
    """A finite semigroup given by its multiplication table on ``0..n-1``.

    ``labels`` names the elements; for characteristic semigroups they are
    the :class:`Transformation` objects themselves.
    """

    def __init__(self, table, labels=None):
        self.table = tuple(tuple(row) for row in table)
        n = len(self.table)
        if any(len(row) != n for row in self.table):
            raise ValueError("multiplication table must be square")
        self.labels = tuple(labels) if labels is not None else tuple(range(n))

    def __len__(self):
        return len(self.table)

    def mul(self, i, j):
        return self.table[i][j]

    @property
    def identity(self):
        n = len(self)
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                return e
        return None

    @property
    def has_identity(self):
        return self.identity is not None

    def inverse(self, i):
        e = self.identity
        if e is None:
            return None
        for j in range(len(self)):
            if self.table[i][j] == e and self.table[j][i] == e:
                return j
        return None

    @property
    def is_group(self):
        return self.has_identity and all(self.inverse(i) is not None for i in range(len(self)))

    @property
    def is_flip_flop_monoid(self):
        """Identity plus two elements ``r``, ``s`` with ``x * y = y`` on ``{r, s}``."""
        if len(self) != 3 or not self.has_identity:
            return False
        e = self.identity
        r, s = (x for x in range(3) if x != e)
        return all(self.table[x][y] == y for x in (r, s) for y in (r, s))

    @property
    def is_commutative(self):
        n = len(self)
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    def classification(self):
        if self.is_flip_flop_monoid:
            return "flip-flop monoid"
        if self.is_group:
            return "group"
        return "other"

    def __repr__(self):
        return f"Semigroup(order={len(self)}, {self.classification()})"


def characteristic_semigroup(semi, cap=STATE_CAP):
    """Closure of the letter transformations of ``semi`` under composition.

    Elements are listed generators first, in letter order, then in the order
    the closure discovers them.
    """
    if len(semi.states) > cap:
        raise StateSpaceTooLarge(f"{len(semi.states)} states exceed the cap of {cap}")
    gens = list(dict.fromkeys(transformations_of(semi).values()))
    elements = list(gens)
    index = {t: i for i, t in enumerate(elements)}
    frontier = list(elements)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                p = s * g
                if p not in index:
                    index[p] = len(elements)
                    elements.append(p)
                    nxt.append(p)
        frontier = nxt
    table = [[index[a * b] for b in elements] for a in elements]
    return Semigroup(table, elements)


def cyclic_group(n):
    return Semigroup([[(i + j) % n for j in range(n)] for i in range(n)],
                     [f"g{i}" for i in range(n)])


def flip_flop_monoid():
    """``{e, r, s}`` with ``e`` neutral and ``x * y = y`` otherwise."""
    labels = ("e", "r", "s")
    table = [[j if i == 0 else (i if j == 0 else j) for j in range(3)] for i in range(3)]
    return Semigroup(table, labels)


def semiautomaton_of_semigroup(sg):
    """States are the elements, letters the elements plus ``e`` when missing."""
    n = len(sg)
    states = tuple(sg.labels)
    letters = list(states)
    extra = sg.identity is None
    if extra:
        letters.append("e")
    delta = []
    for q in range(n):
        row = [sg.mul(q, x) for x in range(n)]
        if extra:
            row.append(q)
        delta.append(tuple(row))
    return Semiautomaton(tuple(letters), states, tuple(delta))


# -- groups -----------------------------------------------------------------

def _closure(sg, gens):
    e = sg.identity
    elems = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = sg.mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def subgroups(sg, cap=GROUP_CAP):
    """All subgroups, as frozensets of element indices."""
    if not sg.is_group:
        raise NotAGroup("semigroup is not a group")
    if len(sg) > cap:
        raise TooLarge(f"group of order {len(sg)} exceeds the cap of {cap}")
    found = {_closure(sg, [g]) for g in range(len(sg))}
    frontier = list(found)
    while frontier:
        nxt = []
        for h in frontier:
            for g in range(len(sg)):
                if g not in h:
                    k = _closure(sg, list(h) + [g])
                    if k not in found:
                        found.add(k)
                        nxt.append(k)
        frontier = nxt
    return sorted(found, key=lambda h: (len(h), sorted(h)))


def is_normal_subgroup(sg, h):
    return all(frozenset(sg.mul(g, x) for x in h) == frozenset(sg.mul(x, g) for x in h)
               for g in range(len(sg)))


def is_simple_group(sg, cap=GROUP_CAP):
    """A nontrivial group whose only normal subgroups are trivial and itself."""
    subs = subgroups(sg, cap)
    if len(sg) == 1:
        return False
    return all(len(h) in (1, len(sg)) or not is_normal_subgroup(sg, h) for h in subs)


# -- isomorphism ------------------------------------------------------------

def semigroups_isomorphic(s, t, cap=ISO_CAP):
    """A bijection ``f`` with ``f(x * y) = f(x) * f(y)``, or ``None``."""
    if len(s) != len(t):
        return None
    n = len(s)
    if n > cap:
        raise TooLarge(f"order {n} exceeds the cap of {cap}")
    f = [None] * n
    used = [False] * n

    def consistent(k):
        for i in range(k + 1):
            for j in range(k + 1):
                p = s.mul(i, j)
                if p <= k and f[p] != t.mul(f[i], f[j]):
                    return False
        return True

    def search(k):
        if k == n:
            return True
        for y in range(n):
            if not used[y]:
                f[k], used[y] = y, True
                if consistent(k) and search(k + 1):
                    return True
                f[k], used[y] = None, False
        return False

    return dict(enumerate(f)) if search(0) else None


def collapse_letters(semi):
    """One letter per distinct transformation, keeping the first letter inducing it."""
    seen = {}
    for x, t in transformations_of(semi).items():
        seen.setdefault(t, x)
    letters = tuple(seen.values())
    cols = [semi.letter_index(x) for x in letters]
    return Semiautomaton(letters, semi.states,
                         tuple(tuple(row[c] for c in cols) for row in semi.delta))


@dataclass(frozen=True)
class SemiIsomorphism:
    states: dict
    letters: dict


def semiautomata_isomorphic(d1, d2, cap=ISO_CAP):
    """Bijections on states and letters preserving transitions, or ``None``."""
    n = len(d1.states)
    if n != len(d2.states) or len(d1.inputs) != len(d2.inputs):
        return None
    if n > cap:
        raise TooLarge(f"{n} states exceed the cap of {cap}")
    t2 = {}
    for x, t in transformations_of(d2).items():
        t2.setdefault(t, []).append(x)
    for perm in itertools.permutations(range(n)):
        pool = {t: list(xs) for t, xs in t2.items()}
        letters = {}
        for x, t in transformations_of(d1).items():
            moved = Transformation(tuple(perm[t(q)] for q in _inverse(perm)))
            if not pool.get(moved):
                break
            letters[x] = pool[moved].pop(0)
        else:
            return SemiIsomorphism({d1.states[q]: d2.states[perm[q]] for q in range(n)}, letters)
    return None


def _inverse(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


# -- operators --------------------------------------------------------------

def is_flip_flop_semiautomaton(semi):
    """Two states and exactly the identity and both constant maps."""
    if len(semi.states) != 2:
        return False
    kinds = set(transformations_of(semi).values())
    return kinds == {Transformation((0, 1)), Transformation((0, 0)), Transformation((1, 1))}


def is_grouplike(semi, strict=False, cap=GROUP_CAP):
    """Is ``semi`` defined by a simple group?

    The characteristic semigroup must be a simple group ``G`` acting
    regularly on the states.  With ``strict`` the letters, after collapsing
    duplicates, must also be in bijection with ``G``.
    """
    sg = characteristic_semigroup(semi, cap=max(cap, len(semi.states)))
    if not sg.is_group or not is_simple_group(sg, cap):
        return False
    if len(semi.states) != len(sg):
        return False
    # regular: some state is sent to every state by exactly one element
    images = sorted(t(0) for t in sg.labels)
    if images != list(range(len(semi.states))):
        return False
    if strict:
        core = collapse_letters(semi)
        return semiautomata_isomorphic(core, semiautomaton_of_semigroup(sg)) is not None
    return True


def default_factorization(op):
    semi = op.semiautomaton()
    return InputFunction.identity(semi.inputs), semi


def is_prime_operator(op, phi=None, core=None, strict=False):
    """Surjective input function onto a flip-flop or simple-grouplike core."""
    if phi is None or core is None:
        phi, core = default_factorization(op)
    if not phi.is_surjective or set(phi.codomain) != set(core.inputs):
        return False
    if compose(phi, core) != op.semiautomaton():
        raise ValueError("factorization does not compose to the operator")
    return is_flip_flop_semiautomaton(core) or is_grouplike(core, strict)


def operators_similar(op1, op2, cores=None):
    """Isomorphic cores; ``cores`` optionally supplies them as a pair."""
    c1, c2 = cores if cores is not None else (op1.semiautomaton(), op2.semiautomaton())
    return semiautomata_isomorphic(c1, c2) is not None


def transformation_classes(semi):
    """``[(transformation, kind, letters)]`` in order of first letter."""
    groups = {}
    for x, t in transformations_of(semi).items():
        groups.setdefault(t, []).append(x)
    return [(t, t.kind, tuple(xs)) for t, xs in groups.items()]


# -- homomorphisms ----------------------------------------------------------

@dataclass(frozen=True)
class HomomorphismWitness:
    """``psi1`` on letters, ``psi2`` on states of the subsemiautomaton ``states``.

    ``states=None`` means the whole source semiautomaton.
    """

    psi1: dict
    psi2: dict
    states: tuple = None


@dataclass
class HomomorphismCheck:
    ok: bool
    reason: str = ""
    counterexample: tuple = None

    def __bool__(self):
        return self.ok


def verify_homomorphism(w, d1, d2):
    states = tuple(w.states) if w.states is not None else d1.states
    for q in states:
        if q not in w.psi2:
            return HomomorphismCheck(False, f"psi2 undefined on state {q!r}", (q,))
        for x in d1.inputs:
            if d1.next(q, x) not in states:
                return HomomorphismCheck(False, "state set is not closed under transitions", (q, x))
    for x in d1.inputs:
        if x not in w.psi1:
            return HomomorphismCheck(False, f"psi1 undefined on letter {x!r}", (x,))
    if set(w.psi1[x] for x in d1.inputs) != set(d2.inputs):
        return HomomorphismCheck(False, "psi1 is not surjective")
    if set(w.psi2[q] for q in states) != set(d2.states):
        return HomomorphismCheck(False, "psi2 is not surjective")
    for q in states:
        for x in d1.inputs:
            lhs = w.psi2[d1.next(q, x)]
            rhs = d2.next(w.psi2[q], w.psi1[x])
            if lhs != rhs:
                return HomomorphismCheck(False, f"psi2(delta({q!r},{x!r})) = {lhs!r} "
                                                f"but delta'(psi2(q), psi1(x)) = {rhs!r}", (q, x))
    return HomomorphismCheck(True)


def transport_acceptor(w, d1, a2, section=None):
    """Acceptor over ``a2``'s letters running on ``d1``.

    A letter ``y`` is read as ``section[y]``, a chosen preimage under
    ``psi1``; outputs are ``a2``'s outputs at the image state.  The initial
    state is the first state of the subsemiautomaton mapped onto ``a2``'s.
    """
    check = verify_homomorphism(w, d1, a2.semiautomaton)
    if not check:
        raise ValueError(f"not a homomorphism: {check.reason}")
    states = tuple(w.states) if w.states is not None else d1.states
    if section is None:
        section = {}
        for x in d1.inputs:
            section.setdefault(w.psi1[x], x)
    init = next((q for q in states if w.psi2[q] == a2.init), None)
    if init is None:
        raise NoInitialPreimage(f"no state maps to {a2.init!r}")
    sub = Semiautomaton.from_function(a2.inputs, states, lambda q, y: d1.next(q, section[y]))
    return Automaton.from_functions(sub, init, a2.outputs,
                                    lambda q, y: a2.output(w.psi2[q], y),
                                    input_names=a2.input_names, output_names=a2.output_names)


__all__ = [
    "Semigroup", "characteristic_semigroup", "cyclic_group", "flip_flop_monoid",
    "semiautomaton_of_semigroup", "subgroups", "is_normal_subgroup", "is_simple_group",
    "semigroups_isomorphic", "collapse_letters", "semiautomata_isomorphic",
    "is_flip_flop_semiautomaton", "is_grouplike", "is_prime_operator", "operators_similar",
    "transformation_classes", "HomomorphismWitness", "HomomorphismCheck",
    "verify_homomorphism", "transport_acceptor",
]
