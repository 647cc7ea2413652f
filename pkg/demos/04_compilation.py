# Formulas to programs to cascades, and back again.

from krlogic import pltl
from krlogic.compile import (
    cascade_to_program,
    formula_to_normal_program,
    pltl_to_program,
    program_to_cascade,
    unfold_program,
)
from krlogic.equiv import Recognizer, bounded_equiv
from krlogic.programs import format_program, is_normal, parse_program, program_size

phi = pltl.parse_formula("Y (a S b) & !c")
program, accept = pltl_to_program(phi)
print("formula:", pltl.format_formula(phi), " size", pltl.size(phi))
print(format_program(program))
print("accept variable:", accept, " rules:", len(program.rules))

cascade, wiring = program_to_cascade(program)
print()
print("cascade components:", len(cascade), " states:", [len(c.states) for c in cascade.components])
print("wiring:", wiring.signals)

back, back_wiring = cascade_to_program(cascade, program.inputs)
print()
print("back to a program with", len(back.rules), "rules")

comp, bit = wiring.signals[accept]
checks = [
    ("program", Recognizer.from_program(program, accept)),
    ("cascade", Recognizer.from_cascade(cascade, component=comp, bit=bit)),
    ("program again", Recognizer.from_program(back, back_wiring.variable_at(comp, bit))),
    ("unfolded", Recognizer.from_formula(unfold_program(program, accept), ("a", "b", "c"))),
]
target = Recognizer.from_formula(phi)
for name, r in checks:
    print(f"{name:14}", bounded_equiv(r, target, 4).verdict)

# normal form
normal, acc = formula_to_normal_program(pltl.parse_formula("Y Y (a | b) S c"))
print()
print(format_program(normal))
print("normal:", bool(is_normal(normal)))

# a delay over a head that holds before the first step is true at t = 1
p = parse_program("u, q :- S(a, b).\nd :- Y u.")
print()
print("unfolding d :- Y u gives", pltl.format_formula(unfold_program(p, "d")))

# shared subterms can blow up when unfolded
source = "p0 :- a.\n" + "".join(f"p{k} :- p{k - 1} & p{k - 1}.\n" for k in range(1, 7))
chain = parse_program(source)
print()
for k in range(1, 7):
    print(f"p{k}: program size {program_size(chain)}, unfolded size",
          pltl.size(unfold_program(chain, f"p{k}")))
