"""``krlc``: command-line front end.

Exit codes: 0 success, 1 negative answer (not equivalent, not normal,
rejected), 2 usage or input error.  Library errors are printed to stderr as
``krlc: <code>: <message>``.  ``--json`` switches every subcommand to a JSON
document carrying ``schema_version``.
"""

import argparse
import json
import os
import sys

from . import algebra, compile as comp, equiv, pltl
from .automata import automaton_from_json, run as run_automaton
from .cascades import cascade_from_json, cascade_outputs, run_cascade
from .core import is_variable_name, letter_of, parse_trace, serialize_trace
from .errors import KRLError, KRLSyntaxError
from .operators import INTENT, LITERAL, OperatorRegistry, operator_from_json
from .programs import (
    eval_program,
    eval_program_all,
    format_program,
    is_normal,
    is_treelike,
    load_program,
    program_size,
)

SCHEMA_VERSION = 1
KINDS = ("formula", "program", "automaton", "cascade")


class UsageError(Exception):
    pass


def _registry(args):
    return OperatorRegistry(args.counter_convention)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise KRLSyntaxError(f"{path}: invalid JSON: {exc.msg}", exc.pos) from None


def _load_program(path, args):
    if not os.path.exists(path):
        raise UsageError(f"no such file: {path}")
    return load_program(path, _registry(args))


def _json_kind(data):
    if "components" in data:
        return "cascade"
    if "theta" in data:
        return "automaton"
    if "arity" in data:
        return "operator"
    raise UsageError("cannot tell what the JSON file holds")


def _split_var(text):
    """``prog.krl:h`` -> (``prog.krl``, ``h``)."""
    base, sep, var = text.rpartition(":")
    if sep and base.endswith(".krl"):
        return base, var
    return text, None


def _sniff(text):
    path, _ = _split_var(text)
    if path.endswith(".krl"):
        return "program"
    if text.endswith(".json"):
        return _json_kind(_load_json(text))
    return "formula"


def load_artifact(text, kind, args, universe=None):
    """Build a :class:`~krlogic.equiv.Recognizer` from a CLI artifact argument."""
    kind = kind or _sniff(text)
    if kind == "formula":
        phi = pltl.parse_formula(text)
        return equiv.Recognizer.from_formula(phi, universe)
    if kind == "program":
        path, var = _split_var(text)
        program = _load_program(path, args)
        if var is None:
            if not program.rules:
                raise UsageError(f"{path} defines no variables; use {path}:<var>")
            var = program.rules[-1].heads[-1]
        return equiv.Recognizer.from_program(program, var, universe)
    if kind == "automaton":
        return equiv.Recognizer.from_automaton(automaton_from_json(_load_json(text)), universe)
    if kind == "cascade":
        return equiv.Recognizer.from_cascade(cascade_from_json(_load_json(text)), universe)
    raise UsageError(f"artifact kind {kind!r} cannot be compared")


# -- subcommands ------------------------------------------------------------

def cmd_eval(args):
    phi = pltl.parse_formula(args.formula)
    trace = parse_trace(args.trace)
    if args.all:
        values = pltl.eval_all(phi, trace)
        return {"formula": pltl.format_formula(phi), "values": values}, \
            " ".join("true" if v else "false" for v in values), 0
    t = args.time if args.time is not None else len(trace)
    value = pltl.eval_formula(phi, trace, t)
    return {"formula": pltl.format_formula(phi), "time": t, "value": value}, \
        "true" if value else "false", 0


def cmd_eval_program(args):
    program = _load_program(args.program, args)
    trace = parse_trace(args.trace)
    if args.all:
        values = eval_program_all(program, trace, args.var)
        return {"var": args.var, "values": values}, \
            " ".join("true" if v else "false" for v in values), 0
    t = args.time if args.time is not None else len(trace)
    target = args.var if is_variable_name(args.var, allow_generated=True) else pltl.parse_formula(args.var, True)
    value = eval_program(program, trace, t, target)
    return {"var": args.var, "time": t, "value": value}, "true" if value else "false", 0


def _word(args, inputs, names):
    if args.trace is not None:
        universe = tuple(args.vars.split(",")) if args.vars else names
        if universe is None:
            raise UsageError("--trace needs --vars or named inputs")
        return [letter_of(s, universe) for s in parse_trace(args.trace, universe)]
    if not args.input:
        return []
    if any(isinstance(x, tuple) for x in inputs):
        # tuple letters are JSON arrays, so only whitespace separates them
        return [tuple(json.loads(x)) for x in args.input.split()]
    return args.input.replace(",", " ").split()


def cmd_run(args):
    a = automaton_from_json(_load_json(args.automaton))
    word = _word(args, a.inputs, a.input_names)
    states, outputs = run_automaton(a, word)
    data = {"states": list(states), "outputs": list(outputs)}
    text = "states:  " + " ".join(map(str, states)) + "\noutputs: " + " ".join(map(str, outputs))
    return data, text, 0


def cmd_run_cascade(args):
    c = cascade_from_json(_load_json(args.cascade))
    word = _word(args, c.external_inputs, c.input_names)
    states, outputs = run_cascade(c, word)
    per = cascade_outputs(c, word)
    data = {"states": [list(s) for s in states], "outputs": list(outputs),
            "component_outputs": [list(o) for o in per]}
    text = "\n".join(f"{t}: {' '.join(map(str, s))}" + (f" -> {outputs[t - 1]}" if t else "")
                     for t, s in enumerate(states))
    return data, text, 0


def cmd_compile(args):
    sources = [s for s in (args.program, args.cascade, args.formula, args.automaton) if s]
    if len(sources) != 1:
        raise UsageError("give exactly one of --program, --cascade, --formula, --automaton")
    if args.program:
        program = _load_program(args.program, args)
        if args.to != "cascade":
            raise UsageError("programs compile --to cascade")
        cascade, wiring = comp.program_to_cascade(program)
        return _emit_cascade(cascade, wiring, args)
    if args.formula:
        phi = pltl.parse_formula(args.formula)
        if args.to == "program":
            program, accept = comp.pltl_to_program(phi)
        elif args.to == "normal-program":
            program, accept = comp.formula_to_normal_program(phi)
        elif args.to == "cascade":
            cascade, wiring, _ = comp.pltl_to_cascade(phi)
            return _emit_cascade(cascade, wiring, args)
        else:
            raise UsageError("formulas compile --to program, normal-program or cascade")
        return _emit_program(program, args, accept=accept)
    if args.to != "program":
        raise UsageError("automata and cascades compile --to program")
    if args.cascade:
        program, wiring = comp.cascade_to_program(cascade_from_json(_load_json(args.cascade)))
    else:
        program, wiring = comp.automaton_to_program(automaton_from_json(_load_json(args.automaton)))
    return _emit_program(program, args, wiring=wiring)


def _emit_cascade(cascade, wiring, args):
    data = {"cascade": cascade.to_json(), "inputs": list(wiring.inputs),
            "wiring": {v: list(loc) for v, loc in wiring.signals.items()}}
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(cascade.to_json(), fh, indent=1)
            fh.write("\n")
    text = f"{len(cascade.components)} components"
    if not args.output:
        text = json.dumps(cascade.to_json(), indent=1)
    return data, text, 0


def _emit_program(program, args, accept=None, wiring=None):
    text = format_program(program, _registry(args))
    data = {"program": text, "rules": len(program.rules), "size": program_size(program)}
    if accept is not None:
        data["accept"] = accept
        text += f"\n% accept: {accept}"
    if wiring is not None:
        data["wiring"] = {v: list(loc) for v, loc in wiring.signals.items()}
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(format_program(program, _registry(args)) + "\n")
    return data, text, 0


def cmd_unfold(args):
    program = _load_program(args.program, args)
    phi = comp.unfold_program(program, args.var, allow_flipflops=args.flip_flops)
    text = pltl.format_formula(phi)
    return {"formula": text, "size": pltl.size(phi)}, text, 0


def cmd_normalize(args):
    if args.formula:
        program, accept = comp.formula_to_normal_program(pltl.parse_formula(args.formula))
        return _emit_program(program, args, accept=accept)
    if not args.program:
        raise UsageError("give --program or --formula")
    program = _load_program(args.program, args)
    report = is_normal(program)
    tree = is_treelike(program)
    data = {"normal": bool(report), "treelike": bool(tree),
            "diagnostics": list(report.diagnostics)}
    lines = [f"normal: {'yes' if report else 'no'}", f"treelike: {'yes' if tree else 'no'}"]
    lines += [f"  {d}" for d in report.diagnostics]
    return data, "\n".join(lines), 0 if report else 1


def _operator(name, args):
    if name.endswith(".json"):
        return operator_from_json(_load_json(name))
    return _registry(args).lookup(name)


def cmd_algebra(args):
    if args.similar:
        a, b = (_operator(n, args) for n in args.similar)
        same = algebra.operators_similar(a, b)
        return {"similar": same}, "similar" if same else "not similar", 0 if same else 1
    if args.prime:
        op = _operator(args.prime, args)
        prime = algebra.is_prime_operator(op, strict=args.strict)
        return {"prime": prime}, "prime" if prime else "not prime", 0 if prime else 1
    if args.automaton:
        data = _load_json(args.automaton)
        kind = _json_kind(data)
        if kind == "operator":
            semi = operator_from_json(data).semiautomaton()
        elif kind == "automaton":
            semi = automaton_from_json(data).semiautomaton
        else:
            raise UsageError("algebra needs an automaton or operator")
    elif args.operator:
        semi = _operator(args.operator, args).semiautomaton()
    else:
        raise UsageError("give --automaton, --operator, --similar or --prime")
    sg = algebra.characteristic_semigroup(semi)
    classes = algebra.transformation_classes(semi)
    simple = algebra.is_simple_group(sg) if sg.is_group else None
    data = {
        "order": len(sg),
        "classification": sg.classification(),
        "simple_group": simple,
        "flip_flop_semiautomaton": algebra.is_flip_flop_semiautomaton(semi),
        "classes": [{"transformation": t.describe(semi.states), "kind": k,
                     "letters": [str(x) for x in xs]} for t, k, xs in classes],
    }
    lines = [f"{sg.classification()}, {len(sg)} elements"]
    if simple is not None:
        lines.append("simple group" if simple else "group, not simple")
    lines += [f"  {t.describe(semi.states)} ({k}): {', '.join(map(str, xs))}"
              for t, k, xs in classes]
    return data, "\n".join(lines), 0


def cmd_equiv(args):
    universe = tuple(args.vars.split(",")) if args.vars else None
    left = load_artifact(args.left, args.left_kind or args.kind, args, universe)
    right = load_artifact(args.right, args.right_kind or args.kind, args, universe)
    if universe is None and left.universe != right.universe and left.universe and right.universe:
        merged = tuple(dict.fromkeys(left.universe + right.universe))
        left = load_artifact(args.left, args.left_kind or args.kind, args, merged)
        right = load_artifact(args.right, args.right_kind or args.kind, args, merged)
    report = equiv.bounded_equiv(left, right, args.maxlen)
    data = {"verdict": report.verdict, "equal": report.equal, "checked": report.checked}
    if report.equal:
        text = f"equal on all {report.checked} traces up to length {args.maxlen}"
    else:
        ce = report.counterexample
        shown = serialize_trace(ce, left.universe) if left.universe is not None else " ".join(map(str, ce))
        data["counterexample"] = shown
        data["accepted_by"] = report.accepted_by
        text = f"counterexample: {shown} (accepted by {report.accepted_by} only)"
    return data, text, 0 if report.equal else 1


def cmd_operators(args):
    reg = _registry(args)
    if args.show:
        op = reg.lookup(args.show)
        data = op.to_json()
        return data, json.dumps(data), 0
    names = reg.names() + ["C<n>", "Cs<n>"]
    return {"operators": names, "counter_convention": reg.counter_convention}, "\n".join(names), 0


# -- parser -----------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="krlc", description="Past LTL, temporal programs and automata cascades.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--counter-convention", choices=(LITERAL, INTENT), default=LITERAL)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("eval", cmd_eval, help="evaluate a formula on a trace")
    sp.add_argument("--formula", required=True)
    sp.add_argument("--trace", required=True)
    sp.add_argument("--at", "--time", dest="time", type=int)
    sp.add_argument("--all", action="store_true")

    sp = add("eval-program", cmd_eval_program, help="evaluate a program variable on a trace")
    sp.add_argument("--program", required=True)
    sp.add_argument("--trace", required=True)
    sp.add_argument("--var", required=True)
    sp.add_argument("--at", "--time", dest="time", type=int)
    sp.add_argument("--all", action="store_true")

    for name, fn, flag in (("run", cmd_run, "--automaton"), ("run-cascade", cmd_run_cascade, "--cascade")):
        sp = add(name, fn, help=f"run {flag[2:]} on an input word")
        sp.add_argument(flag, required=True)
        sp.add_argument("--input", help="letters separated by commas or spaces")
        sp.add_argument("--trace", help="trace over --vars (bit alphabets)")
        sp.add_argument("--vars")

    sp = add("compile", cmd_compile, help="translate between representations")
    sp.add_argument("--program")
    sp.add_argument("--cascade")
    sp.add_argument("--formula")
    sp.add_argument("--automaton")
    sp.add_argument("--to", required=True, choices=("cascade", "program", "normal-program"))
    sp.add_argument("-o", "--output")

    sp = add("unfold", cmd_unfold, help="unfold a program variable into a formula")
    sp.add_argument("--program", required=True)
    sp.add_argument("--var", required=True)
    sp.add_argument("--flip-flops", action="store_true",
                    help="also unfold two-state reset operators")

    sp = add("normalize", cmd_normalize, help="check normality or build a normal program")
    sp.add_argument("--program")
    sp.add_argument("--formula")
    sp.add_argument("-o", "--output")

    sp = add("algebra", cmd_algebra, help="semigroup facts")
    sp.add_argument("--automaton")
    sp.add_argument("--operator")
    sp.add_argument("--similar", nargs=2, metavar="OP")
    sp.add_argument("--prime", metavar="OP")
    sp.add_argument("--strict", action="store_true")

    sp = add("equiv", cmd_equiv, help="bounded language equivalence")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--maxlen", type=int, required=True)
    sp.add_argument("--vars")
    sp.add_argument("--kind", choices=KINDS)
    sp.add_argument("--left-kind", choices=KINDS)
    sp.add_argument("--right-kind", choices=KINDS)

    sp = add("operators", cmd_operators, help="list registered operators")
    sp.add_argument("--show")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        data, text, code = args.fn(args)
    except UsageError as exc:
        print(f"krlc: usage: {exc}", file=sys.stderr)
        return 2
    except KRLError as exc:
        print(f"krlc: {exc.code}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"krlc: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "command": args.command, **data},
                         sort_keys=True, default=str))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
