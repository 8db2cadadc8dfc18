import argparse
import json
import logging
import sys
from pathlib import Path

from combx.data.configs import SearchConfigs
from combx.data.conversion import frame_to_dict, load_frame, to_dot
from combx.data.cotree import classify, enumerate_cotrees
from combx.data.formula import ipd, variables
from combx.data.parser import parse
from combx.decide.membership import comb_bound, in_logfc, locally_tabular, logfc_semidecide
from combx.decide.structure import validates_lfc
from combx.errors import CombxError, FormulaSyntaxError, LimitExceeded, SearchBudgetExceeded
from combx.logic.morphism import embedding_exists, surjection_exists
from combx.logic.semantics import Model, Valuation, forces, forcing_set
from combx.logic.validity import find_countermodel

log = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2
RENDER_FORMATS = ["dot", "png", "svg", "pdf"]


class UsageError(CombxError):
    pass


class HelpRequested(Exception):
    def __init__(self, text):
        super().__init__(text)
        self.text = text


class _HelpAction(argparse.Action):
    def __init__(self, option_strings, dest=argparse.SUPPRESS, default=argparse.SUPPRESS, help=None):
        super().__init__(option_strings, dest=dest, default=default, nargs=0, help=help)

    def __call__(self, parser, namespace, values, option_string=None):
        raise HelpRequested(parser.format_help())


class _Parser(argparse.ArgumentParser):
    """
    An argument parser that never prints or exits; help and usage errors become exceptions
    so that :func:`run` can answer them with a JSON document.
    """

    def __init__(self, *args, **kwargs):
        kwargs["add_help"] = False
        super().__init__(*args, **kwargs)
        self.add_argument("-h", "--help", action=_HelpAction, help="Show this help as JSON")

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status=0, message=None):
        raise UsageError(message or f"{self.prog}: exited with status {status}")


def _valuation(X, text):
    assignment = {} if text is None else json.loads(text)
    valid = isinstance(assignment, dict) and all(
        isinstance(labels, list) and all(isinstance(label, str) for label in labels)
        for labels in assignment.values()
    )
    if not valid:
        raise UsageError('--valuation must map variables to lists of point labels, e.g. {"p": ["x1"]}.')
    return Valuation.from_labels(X, assignment)


def _formula_text(args):
    if args.formula is not None:
        return args.formula
    if args.formula_file is not None:
        return Path(args.formula_file).read_text().strip()
    raise UsageError("Give a formula with --formula or --formula-file.")


def _frame(args, key="frame"):
    path = getattr(args, key)
    if path is None:
        raise UsageError(f"--{key} is required.")
    return load_frame(path)


def cmd_parse(args, configs):
    f = parse(_formula_text(args))
    return {
        "formula": str(f),
        "ast": repr(f),
        "ipd": ipd(f),
        "variables": variables(f),
        "bound": comb_bound(f),
    }


def cmd_eval(args, configs):
    f, X = parse(_formula_text(args)), _frame(args)
    M = Model(_valuation(X, args.valuation))
    result = {"formula": str(f), "forcing_set": X.label_set(forcing_set(M, f))}
    if args.point is not None:
        result["point"] = args.point
        result["forces"] = forces(M, args.point, f)
    return result


def cmd_valid(args, configs):
    f, X = parse(_formula_text(args)), _frame(args)
    countermodel = find_countermodel(X, f, configs)
    return {
        "formula": str(f),
        "valid": countermodel is None,
        "countermodel": None if countermodel is None else countermodel.to_dict(),
    }


def cmd_morphism(args, configs):
    X, Y = _frame(args), _frame(args, "target")
    witness = surjection_exists(X, Y, configs)
    return {"exists": witness is not None, "witness": None if witness is None else witness.to_dict()}


def cmd_embed(args, configs):
    X, Y = _frame(args), _frame(args, "target")
    witness = embedding_exists(Y, X, configs)
    return {"exists": witness is not None, "witness": None if witness is None else witness.to_dict()}


def cmd_classify(args, configs):
    return classify(_frame(args)).to_dict()


def cmd_lfc_check(args, configs):
    return validates_lfc(_frame(args), configs).to_dict()


def cmd_decide_logfc(args, configs):
    f = parse(_formula_text(args))
    result = in_logfc(f, configs).to_dict()
    if args.max_n is not None:
        found = logfc_semidecide(f, args.max_n, configs)
        result["semidecide"] = {
            "max_n": args.max_n,
            "refutation": None if found is None else found.to_dict(),
        }
    return result


def cmd_decide_ltab(args, configs):
    if args.axioms:
        texts = args.axioms
    elif args.formula_file is not None:
        lines = Path(args.formula_file).read_text().splitlines()
        texts = [line for line in lines if line.strip()]
    else:
        texts = []
    return locally_tabular([parse(text) for text in texts], configs).to_dict()


def cmd_enumerate(args, configs):
    cotrees = []
    for X in enumerate_cotrees(args.max_size):
        cotrees.append({"frame": frame_to_dict(X), "class": classify(X).to_dict()})
    return {"max_size": args.max_size, "count": len(cotrees), "cotrees": cotrees}


def cmd_render(args, configs):
    X = _frame(args)
    if args.format == "dot":
        return {"format": "dot", "dot": to_dot(X)}
    if args.output is None:
        raise UsageError(f"--output is required for --format {args.format}.")

    from combx.draw import draw_poset

    valuation, point = None, None
    if args.formula is not None or args.formula_file is not None:
        countermodel = find_countermodel(X, parse(_formula_text(args)), configs)
        if countermodel is not None:
            valuation, point = countermodel
    elif args.valuation is not None:
        valuation = _valuation(X, args.valuation)
    fig, _ = draw_poset(X, valuation=valuation, refuting_point=point)
    fig.savefig(args.output, format=args.format, bbox_inches="tight")
    return {"format": args.format, "output": args.output}

COMMANDS = {
    "parse": cmd_parse,
    "eval": cmd_eval,
    "valid": cmd_valid,
    "morphism": cmd_morphism,
    "embed": cmd_embed,
    "classify": cmd_classify,
    "lfc-check": cmd_lfc_check,
    "decide-logfc": cmd_decide_logfc,
    "decide-ltab": cmd_decide_ltab,
    "enumerate": cmd_enumerate,
    "render": cmd_render,
}


def build_parser():
    parser = _Parser(prog="combx", description="Finite combs, bi-intuitionistic semantics and local tabularity.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs")
    parser.add_argument("--corpus", default=None, help="JSON-lines file or directory of argument lists")
    parser.add_argument("--budget", type=int, default=None, help="Valuation budget of a validity check")
    parser.add_argument("--node-budget", type=int, default=None, help="Node budget of a morphism search")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads")
    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)

    for name in COMMANDS:
        sub = subparsers.add_parser(name)
        sub.add_argument("--formula", default=None)
        sub.add_argument("--formula-file", default=None)
        sub.add_argument("--frame", default=None, help="Frame JSON path")
        sub.add_argument("--target", default=None, help="Target frame JSON path")
        sub.add_argument("--valuation", default=None, help='e.g. \'{"p": ["x1"]}\'')
        sub.add_argument("--point", default=None, help="Point label")
        sub.add_argument("--max-n", type=int, default=None)
        sub.add_argument("--max-size", type=int, default=7)
        sub.add_argument("--axioms", nargs="*", default=None)
        sub.add_argument("--format", choices=RENDER_FORMATS, default="dot")
        sub.add_argument("--output", default=None)
    return parser


def _error_document(e):
    error = {"type": type(e).__name__, "message": str(e)}
    if isinstance(e, FormulaSyntaxError):
        error["offset"] = e.offset
    if isinstance(e, SearchBudgetExceeded):
        partial = e.partial
        error["partial"] = partial.to_dict() if hasattr(partial, "to_dict") else partial
    return {"error": error}


def _exit_code(e):
    if isinstance(e, (SearchBudgetExceeded, LimitExceeded)):
        return EXIT_BUDGET
    return EXIT_USAGE


def _corpus_lines(path):
    path = Path(path)
    files = sorted(path.glob("*.jsonl")) if path.is_dir() else [path]
    for file in files:
        for line in file.read_text().splitlines():
            if line.strip():
                yield line


def _run_case(line):
    try:
        case = json.loads(line)
        argv = case["argv"] if isinstance(case, dict) else case
        if not isinstance(argv, list):
            raise UsageError("A corpus case is a list of arguments or an object with 'argv'.")
    except (ValueError, KeyError, UsageError) as e:
        return EXIT_USAGE, _error_document(e)
    return run([str(a) for a in argv])


def run(argv):
    """
    Runs one command line.

    Args:
        argv (:python:`List[str]`): The arguments, without the program name.

    Returns:
        :python:`Tuple[int, dict]`: The exit code and the JSON document of the command.
    """
    try:
        args = build_parser().parse_args(argv)
        configs = SearchConfigs(budget=args.budget, node_budget=args.node_budget, threads=args.threads)
        if args.command is None:
            raise UsageError("Give a command, or --corpus for batch mode.")
        return EXIT_OK, COMMANDS[args.command](args, configs)
    except HelpRequested as e:
        return EXIT_OK, {"help": e.text}
    except (CombxError, ValueError, OSError) as e:
        log.info(f"{type(e).__name__}: {e}")
        code = _exit_code(e) if isinstance(e, CombxError) else EXIT_USAGE
        return code, _error_document(e)


def _configure_logging(verbosity):
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbosity, 2)]
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        options, _ = build_parser().parse_known_args(argv)
    except (UsageError, HelpRequested):
        options = None
    _configure_logging(options.verbose if options is not None else 0)

    if options is not None and options.corpus is not None and options.command is None:
        worst = EXIT_OK
        try:
            lines = list(_corpus_lines(options.corpus))
        except OSError as e:
            print(json.dumps(_error_document(e)))
            return EXIT_USAGE
        for i, line in enumerate(lines):
            code, document = _run_case(line)
            print(json.dumps({"case": i, "exit_code": code, **document}))
            worst = max(worst, code)
        return worst

    code, document = run(argv)
    print(json.dumps(document, indent=2))
    return code
