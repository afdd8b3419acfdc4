"""Command-line interface.

    diffcolor gen <family> [flags]        write a graph file
    diffcolor label  (--in F | --family ...) [--scheme S]   run a scheme
    diffcolor eval   --in F --labeling F                    value of a labeling
    diffcolor bound  (--in F | --family ...)                upper bounds
    diffcolor exact  (--in F | --family ...)                exact solver
    diffcolor compare-mp (--in F | --family ...)            bipartition scheme
                                                            vs general scheme
    diffcolor export (--in F | --family ...) [--labeling F | --scheme S]  DOT

Exit codes: 0 success, 2 validation error, 3 exact-solver limit/timeout.
All output is deterministic for identical argv (random generation requires
an explicit --seed).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .bounds import upper_bound_report
from .graph import (GraphParseError, NotATreeError, Tree, gen_caterpillar,
                    gen_random_caterpillar, gen_regular_caterpillar, gen_spider,
                    parse_graph, recognize_caterpillar, recognize_spider,
                    write_graph)
from .labeling import evaluate, labeling_from_json
from .oracle import (DEFAULT_LIMIT_N, OracleLimitError, OracleTimeoutError,
                     exact_dc)
from .schemes import (label_auto, label_general_caterpillar,
                      label_regular_caterpillar, label_spider_all_even,
                      label_spider_all_odd, mp_value)

FAMILIES = ("regular-cat", "cat", "spider", "sec53", "random-cat")
SCHEMES = ("auto", "regular-cat", "spider-even", "spider-odd", "general-cat")


class CliError(ValueError):
    pass


def _add_family_flags(sp: argparse.ArgumentParser, positional: bool) -> None:
    if positional:
        sp.add_argument("family", choices=FAMILIES)
    else:
        sp.add_argument("--family", choices=FAMILIES)
    sp.add_argument("--spine", type=int, help="spine length (max length for random-cat)")
    sp.add_argument("--legs", type=int, help="legs per spine vertex (max for random-cat)")
    sp.add_argument("--leg-list", help="comma-separated per-spine leg counts, e.g. 1,0,2")
    sp.add_argument("--paths", help="comma-separated spider path lengths, e.g. 3,3")
    sp.add_argument("--k", type=int, help="sec53: half spine length (2k+1 spine vertices)")
    sp.add_argument("--delta", type=int, help="sec53: legs per even spine vertex")
    sp.add_argument("--seed", type=int, help="seed for random generation (mandatory)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffcolor",
        description="Maximum differential coloring of caterpillars and spiders.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph file")
    _add_family_flags(p_gen, positional=True)
    p_gen.add_argument("--out")

    p_label = sub.add_parser("label", help="run a labeling scheme")
    p_label.add_argument("--in", dest="in_path")
    _add_family_flags(p_label, positional=False)
    p_label.add_argument("--scheme", choices=SCHEMES, default="auto")
    p_label.add_argument("--format", choices=("json", "plain", "dot"), default="json")
    p_label.add_argument("--out")

    p_eval = sub.add_parser("eval", help="evaluate a labeling against a graph")
    p_eval.add_argument("--in", dest="in_path", required=True)
    p_eval.add_argument("--labeling", required=True)
    p_eval.add_argument("--format", choices=("json", "plain"), default="json")
    p_eval.add_argument("--out")

    p_bound = sub.add_parser("bound", help="report upper bounds")
    p_bound.add_argument("--in", dest="in_path")
    _add_family_flags(p_bound, positional=False)
    p_bound.add_argument("--format", choices=("json", "plain"), default="json")
    p_bound.add_argument("--out")

    p_exact = sub.add_parser("exact", help="exact maximum differential value")
    p_exact.add_argument("--in", dest="in_path")
    _add_family_flags(p_exact, positional=False)
    p_exact.add_argument("--limit-n", type=int, default=DEFAULT_LIMIT_N)
    p_exact.add_argument("--timeout-ms", type=int)
    p_exact.add_argument("--threads", type=int, default=1)
    p_exact.add_argument("--format", choices=("json", "plain"), default="json")
    p_exact.add_argument("--out")

    p_cmp = sub.add_parser("compare-mp",
                           help="bipartition-scheme value vs general caterpillar scheme")
    p_cmp.add_argument("--in", dest="in_path")
    _add_family_flags(p_cmp, positional=False)
    p_cmp.add_argument("--out")

    p_exp = sub.add_parser("export", help="DOT export, optionally annotated with labels")
    p_exp.add_argument("--in", dest="in_path")
    _add_family_flags(p_exp, positional=False)
    p_exp.add_argument("--labeling")
    p_exp.add_argument("--scheme", choices=SCHEMES)
    p_exp.add_argument("--out")

    return parser


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise CliError(f"malformed {what} {text!r}: {exc}") from exc


def _generate(args: argparse.Namespace) -> Tree:
    family = args.family
    if family == "regular-cat":
        if args.spine is None or args.legs is None:
            raise CliError("regular-cat requires --spine and --legs")
        return gen_regular_caterpillar(args.spine, args.legs)[0]
    if family == "cat":
        if args.leg_list is None:
            raise CliError("cat requires --leg-list")
        return gen_caterpillar(_parse_int_list(args.leg_list, "--leg-list"))[0]
    if family == "spider":
        if args.paths is None:
            raise CliError("spider requires --paths")
        return gen_spider(_parse_int_list(args.paths, "--paths"))[0]
    if family == "sec53":
        if args.k is None or args.delta is None:
            raise CliError("sec53 requires --k and --delta")
        if args.k < 1 or args.delta < 1:
            raise CliError("sec53 requires k >= 1 and delta >= 1")
        counts = [1 if i % 2 == 0 else args.delta for i in range(2 * args.k + 1)]
        return gen_caterpillar(counts)[0]
    if family == "random-cat":
        if args.seed is None:
            raise CliError("random generation requires --seed for reproducibility")
        max_spine = args.spine if args.spine is not None else 30
        max_legs = args.legs if args.legs is not None else 8
        return gen_random_caterpillar(random.Random(args.seed), max_spine, max_legs)[0]
    raise CliError(f"unknown family {family!r}")


def _resolve_tree(args: argparse.Namespace) -> Tree:
    has_in = getattr(args, "in_path", None) is not None
    has_family = getattr(args, "family", None) is not None
    if has_in == has_family:
        raise CliError("exactly one input source required: --in FILE or --family NAME")
    if has_in:
        with open(args.in_path, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    return _generate(args)


def _read_labeling(path: str):
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CliError(f"malformed labeling file {path}: {exc}") from exc
    return labeling_from_json(obj)


def _emit(text: str, out_path: str | None, stdout) -> None:
    if out_path is None:
        stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _plain_pairs(labels) -> str:
    return "".join(f"{v + 1} {x}\n" for v, x in enumerate(labels))


def to_dot(t: Tree, labels=None) -> str:
    """DOT text; node name = 1-based vertex id, displayed text = its label."""
    lines = ["graph G {"]
    for v in range(t.n):
        if labels is None:
            lines.append(f"  {v + 1};")
        else:
            lines.append(f'  {v + 1} [label="{labels[v]}"];')
    lines.extend(f"  {u + 1} -- {v + 1};" for u, v in t.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _run_scheme(t: Tree, name: str):
    if name == "auto":
        return label_auto(t)
    if name == "regular-cat":
        shape = recognize_caterpillar(t)
        if shape is None or not shape.is_regular:
            raise CliError("input is not a regular caterpillar")
        return label_regular_caterpillar(shape)
    if name == "general-cat":
        shape = recognize_caterpillar(t)
        if shape is None:
            raise CliError("input is not a caterpillar")
        return label_general_caterpillar(shape)
    spider = recognize_spider(t)
    if spider is None:
        raise CliError("input is not a spider")
    if name == "spider-even":
        return label_spider_all_even(spider)
    return label_spider_all_odd(spider)


def _cmd_gen(args, stdout) -> int:
    _emit(write_graph(_generate(args)), args.out, stdout)
    return 0


def _cmd_label(args, stdout) -> int:
    tree = _resolve_tree(args)
    result = _run_scheme(tree, args.scheme)
    if args.format == "json":
        _emit(_json_text(result.to_json()), args.out, stdout)
    elif args.format == "plain":
        _emit(_plain_pairs(result.labeling.labeling.labels), args.out, stdout)
    else:
        _emit(to_dot(tree, result.labeling.labeling.labels), args.out, stdout)
    return 0


def _cmd_eval(args, stdout) -> int:
    with open(args.in_path, encoding="utf-8") as fh:
        tree = parse_graph(fh.read())
    labeling = _read_labeling(args.labeling)
    evaluated = evaluate(tree, labeling)
    if args.format == "json":
        _emit(_json_text(evaluated.to_json()), args.out, stdout)
    else:
        _emit(f"{evaluated.value}\n", args.out, stdout)
    return 0


def _cmd_bound(args, stdout) -> int:
    report = upper_bound_report(_resolve_tree(args))
    if args.format == "json":
        _emit(_json_text(report.to_json()), args.out, stdout)
    else:
        lines = "".join(f"{name} {value}\n" for name, value in report.entries)
        _emit(lines + f"best {report.best}\n", args.out, stdout)
    return 0


def _cmd_exact(args, stdout) -> int:
    tree = _resolve_tree(args)
    if args.threads < 1:
        raise CliError("--threads must be at least 1")
    result = exact_dc(tree, limit_n=args.limit_n, timeout_ms=args.timeout_ms,
                      threads=args.threads)
    if args.format == "json":
        payload = {"dc": result.dc, "labels": list(result.witness.labels),
                   "nodes": result.nodes, "millis": result.millis}
        _emit(_json_text(payload), args.out, stdout)
    else:
        _emit(f"dc {result.dc}\n" + _plain_pairs(result.witness.labels),
              args.out, stdout)
    return 0


def _cmd_compare_mp(args, stdout) -> int:
    tree = _resolve_tree(args)
    shape = recognize_caterpillar(tree)
    if shape is None:
        raise CliError("input is not a caterpillar")
    result = label_general_caterpillar(shape)
    payload = {
        "n": tree.n,
        "mp": mp_value(tree),
        "scheme_value": result.value,
        "scheme_guarantee": result.guarantee,
        "bound_best": upper_bound_report(tree).best,
    }
    _emit(_json_text(payload), args.out, stdout)
    return 0


def _cmd_export(args, stdout) -> int:
    tree = _resolve_tree(args)
    if args.labeling is not None and args.scheme is not None:
        raise CliError("give either --labeling or --scheme, not both")
    labels = None
    if args.labeling is not None:
        labeling = _read_labeling(args.labeling)
        evaluate(tree, labeling)  # validates against the graph
        labels = labeling.labels
    elif args.scheme is not None:
        labels = _run_scheme(tree, args.scheme).labeling.labeling.labels
    _emit(to_dot(tree, labels), args.out, stdout)
    return 0


_HANDLERS = {
    "gen": _cmd_gen,
    "label": _cmd_label,
    "eval": _cmd_eval,
    "bound": _cmd_bound,
    "exact": _cmd_exact,
    "compare-mp": _cmd_compare_mp,
    "export": _cmd_export,
}


def run(argv, stdout=None, stderr=None) -> int:
    """Execute one command line; returns the exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args, stdout)
    except (CliError, GraphParseError, NotATreeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except (OracleLimitError, OracleTimeoutError) as exc:
        print(f"error: {exc}", file=stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
