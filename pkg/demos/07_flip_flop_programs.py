# Flip-flop automata written as programs over their control signals.

from krlogic import pltl
from krlogic.compile import before_to_flipflop, flipflop_automaton_to_pltl_program, since_to_flipflop
from krlogic.equiv import Recognizer, bounded_equiv
from krlogic.programs import format_program

ff = since_to_flipflop("h", "a", "b")
program = flipflop_automaton_to_pltl_program(ff)
print(format_program(program))

auto = Recognizer.from_automaton(ff.automaton(), ff.inputs, output_bit=0)
prog = Recognizer.from_program(program, "h", ff.inputs)
formula = Recognizer.from_formula(pltl.parse_formula("a S b"))
print()
print("automaton vs program:", bounded_equiv(auto, prog, 6).verdict)
print("program vs a S b:    ", bounded_equiv(prog, formula, 6).verdict)

# reading only the stored bit is a step too late once a and b both drop
stale = since_to_flipflop("h", "a", "b", stale_output=True)
report = bounded_equiv(Recognizer.from_automaton(stale.automaton(), ("a", "b"), output_bit=0),
                       formula, 6)
print()
print("output high | b:", report.verdict, report.counterexample)

before = before_to_flipflop("h", "a")
p = flipflop_automaton_to_pltl_program(before)
print()
print("Y a as a flip-flop:",
      bounded_equiv(Recognizer.from_program(p, "h", ("a",)),
                    Recognizer.from_formula(pltl.parse_formula("Y a")), 6).verdict)
