"""Past LTL, temporal logic programs over operator automata, and cascades."""

from .automata import Automaton, InputFunction, Semiautomaton, Transformation
from .cascades import AutoCascade
from .compile import (
    FlipFlopAutomaton,
    automaton_to_program,
    cascade_to_pltl,
    cascade_to_program,
    flipflop_automaton_to_pltl_program,
    formula_to_normal_program,
    pltl_to_cascade,
    pltl_to_program,
    program_to_cascade,
    unfold_program,
)
from .core import Trace, all_traces, make_trace, parse_trace, serialize_trace
from .equiv import Recognizer, bounded_equiv, bounded_nonexpressibility, enumerate_language
from .errors import KRLError
from .operators import OperatorAutomaton, OperatorRegistry, default_registry
from .pltl import eval_formula, eval_formula_inductive, format_formula, parse_formula
from .programs import Program, eval_program, load_program, parse_program

__version__ = "0.1.0"
