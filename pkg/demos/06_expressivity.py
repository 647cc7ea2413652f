# Bounded comparisons and a size-bounded search for formulas.

from krlogic import pltl
from krlogic.equiv import (
    Recognizer,
    bounded_equiv,
    bounded_nonexpressibility,
    enumerate_language,
)
from krlogic.programs import parse_program

once = Recognizer.from_formula(pltl.parse_formula("O a"))
hist = Recognizer.from_formula(pltl.parse_formula("H a"))
report = bounded_equiv(once, hist, 3)
print("O a vs H a:", report.verdict, report.counterexample, "accepted by", report.accepted_by)

parity = parse_program("even, odd :- P(a).")
even = Recognizer.from_program(parity, "even")
print()
print("even-length language up to 3:")
for trace in enumerate_language(even, 3):
    print("  ", trace)

# look for a formula that agrees with parity on short traces
for size in range(1, 6):
    r = bounded_nonexpressibility(even, ("a",), size, 6)
    print(f"size <= {size}: {r.distinct_behaviours:4} behaviours, found {r.formula}")

# the same search does find expressible targets
target = Recognizer.from_formula(pltl.parse_formula("!a S (a & Y a)"), ("a",))
r = bounded_nonexpressibility(target, ("a",), 7, 6)
print()
print("found", pltl.format_formula(r.formula), "for !a S (a & Y a)")
