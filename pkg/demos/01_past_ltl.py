# Past LTL on finite traces, evaluated per instant and by a streaming monitor
# that keeps one bit per since node.

from krlogic import pltl
from krlogic.core import parse_trace

trace = parse_trace("{b}; {a}; {a}; {}; {a,b}")
print("trace:", trace)

for text in ["a S b", "Y a", "O b", "H (a | b)", "Y Y b & !a"]:
    phi = pltl.parse_formula(text)
    values = pltl.eval_all(phi, trace)
    print(f"{text:14} size {pltl.size(phi):2}  ", " ".join("1" if v else "0" for v in values))

# O and H are shorthand; the expansion is available
print()
print("O a expands to", pltl.format_formula(pltl.expand(pltl.parse_formula("O a"))))
print("H a expands to", pltl.format_formula(pltl.expand(pltl.parse_formula("H a"))))

# the existential reading of since and the step-by-step one agree
phi = pltl.parse_formula("(a | Y b) S (b & !Y a)")
direct = pltl.truth_table(phi, trace, "direct")
inductive = pltl.truth_table(phi, trace, "inductive")
print()
print("direct:   ", [int(v) for v in direct])
print("inductive:", [int(v) for v in inductive])

# a monitor reads the trace one step at a time
mon = pltl.FormulaMonitor(pltl.parse_formula("!a S b"))
state = mon.start()
for t, step in enumerate(trace, start=1):
    state = mon.step(state, step)
    print(f"t={t} step={sorted(step)!s:12} !a S b = {mon.value(state)}")
