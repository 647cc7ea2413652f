# Transformation semigroups, prime operators and homomorphisms.

from krlogic.algebra import (
    HomomorphismWitness,
    characteristic_semigroup,
    is_prime_operator,
    is_simple_group,
    operators_similar,
    subgroups,
    transport_acceptor,
    verify_homomorphism,
)
from krlogic.automata import acceptor, canonical_counter, canonical_flip_flop, run
from krlogic.operators import OperatorRegistry

ff = characteristic_semigroup(canonical_flip_flop())
print("flip-flop:", ff, [t.describe() for t in ff.labels])

for n in range(1, 8):
    g = characteristic_semigroup(canonical_counter(n))
    print(f"C{n}: order {len(g)}, subgroups {sorted(len(h) for h in subgroups(g))},"
          f" simple {is_simple_group(g)}")

reg = OperatorRegistry()
print()
for name in ["F", "S", "P", "C3", "Cs4", "Cs5"]:
    print(f"{name:4} prime: {is_prime_operator(reg.lookup(name))}")
print("once prime:", is_prime_operator(reg.lookup("Once")))
print("S similar to F:", operators_similar(reg.lookup("S"), reg.lookup("F")))
print("P similar to S:", operators_similar(reg.lookup("P"), reg.lookup("S")))

# reduce mod 2: the 4-counter maps onto the 2-counter
c4, c2 = canonical_counter(4), canonical_counter(2)
w = HomomorphismWitness({x: x % 2 for x in c4.inputs}, {q: q % 2 for q in c4.states})
print()
print("C4 onto C2:", bool(verify_homomorphism(w, c4, c2)))
bad = HomomorphismWitness({x: x % 2 for x in c4.inputs}, {q: int(q == 3) for q in c4.states})
print("a broken map:", verify_homomorphism(bad, c4, c2).reason)

odd = acceptor(c2, 0, lambda q, x: (q + x) % 2 == 1)
moved = transport_acceptor(w, c4, odd)
word = [1, 0, 1, 1, 0]
print("on", word, "C2 acceptor:", run(odd, word)[1], " transported:", run(moved, word)[1])
