# Rule programs and their step-by-step evaluation.

from krlogic.core import parse_trace
from krlogic.programs import (
    ProgramSimulator,
    eval_program,
    format_program,
    is_normal,
    is_treelike,
    parse_program,
)

source = """
% parity of a, remembered for one step
even, odd :- P(a).
was_odd :- Y odd.
alarm :- was_odd & b.
"""
program = parse_program(source)
print(format_program(program))
print("inputs:", program.inputs)
print()

trace = parse_trace("{a}; {b}; {a}; {a,b}; {b}")
sim = ProgramSimulator(program)
for t, true in enumerate(sim.true_sets(trace)):
    print(f"t={t}", sorted(true))

# queries may be formulas over program variables
print()
print("Y even & alarm at t=4:", eval_program(program, trace, 4, "Y even & alarm"))

# a since rule keeps its two states as one-hot heads
since = parse_program("q1, q2 :- S(a, b).")
t = parse_trace("{b}; {a}; {}")
print()
print("q2 over {b};{a};{}:", [eval_program(since, t, k, "q2") for k in (1, 2, 3)])

for text in ["h :- Y p.\np :- a & b.", "h :- Y p.\np :- Y a.", "h :- q & r.\nq :- Y a.\nr :- Y b."]:
    p = parse_program(text)
    report = is_normal(p)
    print()
    print(text.replace("\n", "  "))
    print("  normal:", bool(report), " treelike:", is_treelike(p))
    for d in report.diagnostics:
        print("  ", d)

try:
    parse_program("p :- Y q.\nq :- Y p.")
except Exception as exc:
    print()
    print(type(exc).__name__, exc)
