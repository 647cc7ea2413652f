# Mealy automata and feed-forward cascades.

import itertools

from krlogic.automata import (
    HIGH,
    LOW,
    READ,
    RESET,
    SET,
    Automaton,
    InputFunction,
    acceptor,
    canonical_counter,
    canonical_flip_flop,
    compose,
    run,
    transformations_of,
)
from krlogic.cascades import AutoCascade, flatten, run_cascade

ff = canonical_flip_flop()
states, outs = run(acceptor(ff, LOW, lambda q, x: q == HIGH), [SET, READ, READ, RESET, READ])
print("flip-flop states:", states)
print("outputs (state before the step):", outs)

c3 = Automaton.from_functions(canonical_counter(3), 0, (0, 1, 2), lambda q, x: q)
print("3-counter on 1,2,2:", run(c3, [1, 2, 2])[0])

print()
for x, t in transformations_of(ff).items():
    print(f"{x:>5}: {t.describe(ff.states)}  ({t.kind})")

# two-bit letters wired onto the flip-flop: s sets, r alone resets
latch = compose(InputFunction.from_mapping({"00": READ, "10": SET, "11": SET, "01": RESET}), ff)
print()
print("latch on 10,00,01,00:", [latch.next(q, x) for q, x in
                                 zip([LOW, HIGH, HIGH, LOW], ["10", "00", "01", "00"])])

# a second flip-flop that copies the first one, a step late
ext = (SET, RESET, READ)
inner = type(ff).from_function(
    [(x, q) for x in ext for q in (LOW, HIGH)], (LOW, HIGH),
    lambda q, xq: HIGH if xq[1] == HIGH else (LOW if xq[0] == RESET else q))
cascade = AutoCascade(ext, (
    Automaton.from_functions(ff, LOW, (LOW, HIGH), lambda q, x: q),
    Automaton.from_functions(inner, LOW, (0, 1), lambda q, x: int(q == HIGH)),
))
states, outs = run_cascade(cascade, [SET, READ, RESET, READ])
print()
print("cascade states:", states)
print("cascade outputs:", outs)

flat = flatten(cascade)
print("flattened states:", len(flat.states))
agree = all(run(flat, w)[1] == run_cascade(cascade, w)[1]
            for n in range(6) for w in itertools.product(ext, repeat=n))
print("flattened automaton agrees up to length 5:", agree)
