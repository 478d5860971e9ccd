"""Command-line interface.

Subcommands: validate, contrib, outcome, axioms, fuzz, examples. Tree
arguments accept a built-in scenario name (fig1a, fig1b, fig2, fig3, fig4)
or a file path. Exit codes: 0 ok, 2 parse error, 3 validation error,
4 enumeration cap exceeded, 5 axiom violation, 1 anything else.
"""

import argparse
import sys

from . import config, fileio
from .aggregation import BUILTIN_AGGREGATORS, aggregator
from .agg_axioms import AGG_AXIOMS, SampleConfig, check_agg_axiom
from .axioms import (
    MEMBER_CHECKS,
    check_cc,
    check_nrv,
    check_nrv_fixed_root,
    check_nur,
)
from .contribution import BUILTIN_FUNCTIONS, contribution_function
from .engine import enumerate_scenarios, enumerate_strategies
from .errors import (
    BadParameter,
    BadQuery,
    ExplosionGuard,
    GroupRespError,
    ParseError,
    TreeValidationError,
)
from .figures import BUILTIN_NAMES, builtin
from .fuzz import FuzzConfig, run_agg_suite, run_member_suite, run_outcome_suite
from .responsibility import ResponsibilityFunction, responsibility_table

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_EXPLOSION = 4
EXIT_VIOLATION = 5


def _load_tree(token, p):
    if token in BUILTIN_NAMES:
        return builtin(token, p=p)
    return fileio.load(token)


def _split_group(raw):
    return frozenset(part.strip() for part in raw.split(",") if part.strip())


def _table(rows):
    """Align a list of string rows into fixed-width columns."""
    if not rows:
        return ""
    widths = [max(len(str(row[c])) for row in rows) for c in range(len(rows[0]))]
    lines = ["  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in rows]
    return "\n".join(lines)


def _fmt(value):
    return format(value, ".10g")


# -- subcommands ---------------------------------------------------------------


def _cmd_validate(args):
    tree = _load_tree(args.tree, args.p)
    print(f"valid: {len(tree.node_order)} nodes, {len(tree.agents)} agents, "
          f"{len(tree.undesirable)} undesirable outcomes")
    return EXIT_OK


def _contrib_columns(tree, group, agent, node):
    columns = []
    for n in tree.decision_nodes:
        owner = tree.owner(n)
        if owner not in group:
            continue
        if node and n != node:
            continue
        if agent and owner != agent:
            continue
        for action in tree.actions(n):
            columns.append((owner, n, action))
    return columns


def _cmd_contrib(args):
    tree = _load_tree(args.tree, args.p)
    group = _split_group(args.group)
    if args.dump_strategies or args.dump_scenarios:
        anchor = args.node or tree.root
        if args.dump_strategies:
            print(_dump_strategies(tree, group, anchor))
        if args.dump_scenarios:
            print(_dump_scenarios(tree, group, anchor))
        return EXIT_OK
    names = list(BUILTIN_FUNCTIONS) if args.function == "all" else [args.function]
    columns = _contrib_columns(tree, group, args.agent, args.node)
    values = {}
    for name in names:
        fn = contribution_function(name)
        values[name] = [fn(tree, group, owner, n, a).value
                        for owner, n, a in columns]
    if args.format == "structured":
        payload = {
            "group": sorted(group),
            "columns": [{"agent": o, "node": n, "action": a}
                        for o, n, a in columns],
            "values": {name: [v for v in vals] for name, vals in values.items()},
        }
        sys.stdout.write(fileio.dump_json(payload))
        return EXIT_OK
    rows = [["node"] + [n for _, n, _ in columns],
            ["action"] + [a for _, _, a in columns]]
    for name in names:
        rows.append([f"r^{name}"] + [_fmt(v) for v in values[name]])
    print(_table(rows))
    return EXIT_OK


def _dump_strategies(tree, group, anchor):
    strategies = enumerate_strategies(tree, group, anchor)
    nodes = sorted({n for s in strategies for n in s.choice},
                   key=tree.node_order.index)
    rows = [["strategy"] + nodes]
    for k, s in enumerate(strategies):
        rows.append([f"s{k}"] + [s.choice.get(n, "-") for n in nodes])
    return _table(rows)


def _dump_scenarios(tree, group, anchor):
    scenarios = enumerate_scenarios(tree, group, anchor)
    nodes = sorted({n for z in scenarios for n in z.resolution},
                   key=tree.node_order.index)
    rows = [["scenario", "actual"] + nodes]
    for k, z in enumerate(scenarios):
        rows.append([f"z{k}", z.actual] + [z.resolution.get(n, "-") for n in nodes])
    return _table(rows)


def _cmd_outcome(args):
    tree = _load_tree(args.tree, args.p)
    group = _split_group(args.group)
    fn = contribution_function(args.function)
    agg = aggregator(args.agg)
    table = responsibility_table(tree, group, fn, agg)
    if args.outcome:
        tree.require(args.outcome)
        table = {args.outcome: table[args.outcome]}
    if args.format == "structured":
        payload = {"group": sorted(group), "function": fn.name,
                   "aggregator": agg.name, "proper": agg.is_proper,
                   "responsibility": table}
        sys.stdout.write(fileio.dump_json(payload))
        return EXIT_OK
    rows = [["outcome", f"R[{agg.name}∘{fn.name}]"]]
    for leaf, value in table.items():
        rows.append([leaf, _fmt(value)])
    print(_table(rows))
    return EXIT_OK


def _member_reports(tree, fn, groups):
    for group in groups:
        for axiom, check in MEMBER_CHECKS.items():
            yield sorted(group), check(tree, fn, group)


def _outcome_reports(tree, rf):
    yield check_cc(tree, rf)
    yield check_nur(tree, rf)
    yield check_nrv(tree, rf, individual=False)
    yield check_nrv(tree, rf, individual=True)
    for child, report in check_nrv_fixed_root(tree, rf, individual=False):
        yield report
    for child, report in check_nrv_fixed_root(tree, rf, individual=True):
        yield report


def _cmd_axioms(args):
    tree = _load_tree(args.tree, args.p)
    fn = contribution_function(args.function)
    agg = aggregator(args.agg)
    groups = ([_split_group(args.group)] if args.group
              else [frozenset([a]) for a in tree.agents])
    lines = []
    violated = False
    if args.suite in ("member", "all"):
        for group, report in _member_reports(tree, fn, groups):
            violated |= report.violated
            lines.append(_report_line(report, extra=f"G={{{','.join(group)}}}"))
    if args.suite in ("agg", "all"):
        cfg = SampleConfig(seed=args.seed, samples=args.samples)
        for axiom in AGG_AXIOMS:
            report = check_agg_axiom(agg, axiom, cfg)
            violated |= report.violated
            lines.append(_report_line(report, extra=f"agg={agg.name}"))
    if args.suite in ("outcome", "all"):
        rf = ResponsibilityFunction(fn, agg)
        for report in _outcome_reports(tree, rf):
            violated |= report.violated
            lines.append(_report_line(report, extra=f"R={agg.name}∘{fn.name}"))
    print("\n".join(lines))
    return EXIT_VIOLATION if violated else EXIT_OK


def _report_line(report, extra=""):
    verdict = report.verdict
    if report.vacuous:
        verdict = "satisfied (vacuous)"
    parts = [report.axiom.ljust(8), verdict.ljust(20),
             f"instances={report.instances}"]
    if extra:
        parts.append(extra)
    if report.detail:
        parts.append(report.detail)
    if report.witness is not None:
        parts.append(f"witness={report.witness}")
    return "  ".join(parts)


def _cmd_fuzz(args):
    cfg = FuzzConfig(
        seed=args.seed,
        tree_count=args.count,
        max_depth=args.max_depth,
        max_branching=args.max_branching,
        max_agents=args.max_agents,
        probability_node_rate=0.0 if args.uncertainty_free else args.probability_rate,
        ambiguity_node_rate=0.0 if args.uncertainty_free else args.ambiguity_rate,
        info_set_rate=args.info_set_rate,
    )
    from .compliance import MEMBER_MATRIX

    unexpected = []
    summaries = []
    if args.suite in ("member", "all"):
        report = run_member_suite(cfg)
        for violation in report["violations"]:
            if MEMBER_MATRIX[violation["function"]][violation["axiom"]]:
                unexpected.append(violation)
        summaries.append(
            f"member: {report['trees']} trees, {report['checked']} checks, "
            f"{len(report['violations'])} violations "
            f"({len(unexpected)} unexpected), clamped={report['clamped']}")
    if args.suite in ("agg", "all"):
        report = run_agg_suite(seed=args.seed, samples=args.samples)
        unexpected.extend(report["unexpected"])
        total_violations = sum(r["verdict"] == "violated" for r in report["results"])
        summaries.append(
            f"agg: {len(report['results'])} checks, {total_violations} violations "
            f"({len(report['unexpected'])} unexpected)")
    if args.suite in ("outcome", "all"):
        report = run_outcome_suite(cfg)
        unexpected.extend(report["unexpected"])
        summaries.append(
            f"outcome: {report['trees']} trees, {len(report['violations'])} "
            f"violations ({len(report['unexpected'])} unexpected)")
    print("\n".join(summaries))
    if unexpected:
        sys.stdout.write(fileio.dump_json({"unexpected": unexpected[:3]}))
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_examples(args):
    tree = builtin(args.name, p=args.p)
    text = fileio.dumps(tree)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {args.name} to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="groupresp",
        description="Quantified group responsibility in multi-agent "
                    "decision trees, with an executable axiom suite.")
    parser.add_argument("--cap", type=int, default=None,
                        help="enumeration cap (default 10^6; env GROUPRESP_ENUM_CAP)")
    parser.add_argument("--eps", type=float, default=None,
                        help="numeric tolerance (default 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tree(p):
        p.add_argument("tree", help="built-in name (fig1a..fig4) or file path")
        p.add_argument("--p", type=float, default=0.3,
                       help="success probability for fig1a (default 0.3)")

    p = sub.add_parser("validate", help="validate a tree file")
    add_tree(p)
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("contrib", help="member contribution table")
    add_tree(p)
    p.add_argument("--group", required=True, help="comma-separated agent ids")
    p.add_argument("--function", default="all",
                   choices=sorted(BUILTIN_FUNCTIONS) + ["all"])
    p.add_argument("--agent", default=None)
    p.add_argument("--node", default=None)
    p.add_argument("--format", default="table", choices=("table", "structured"))
    p.add_argument("--dump-strategies", action="store_true")
    p.add_argument("--dump-scenarios", action="store_true")
    p.set_defaults(handler=_cmd_contrib)

    p = sub.add_parser("outcome", help="outcome responsibility table")
    add_tree(p)
    p.add_argument("--group", required=True)
    p.add_argument("--function", required=True, choices=sorted(BUILTIN_FUNCTIONS))
    p.add_argument("--agg", default="mprod", choices=sorted(BUILTIN_AGGREGATORS))
    p.add_argument("--outcome", default=None)
    p.add_argument("--format", default="table", choices=("table", "structured"))
    p.set_defaults(handler=_cmd_outcome)

    p = sub.add_parser("axioms", help="run axiom checkers on a tree")
    add_tree(p)
    p.add_argument("--function", default="risk", choices=sorted(BUILTIN_FUNCTIONS))
    p.add_argument("--agg", default="mprod", choices=sorted(BUILTIN_AGGREGATORS))
    p.add_argument("--suite", default="all",
                   choices=("member", "agg", "outcome", "all"))
    p.add_argument("--group", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10000)
    p.set_defaults(handler=_cmd_axioms)

    p = sub.add_parser("fuzz", help="random-tree axiom auditing")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--suite", default="member",
                   choices=("member", "agg", "outcome", "all"))
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--max-depth", type=int, default=4)
    p.add_argument("--max-branching", type=int, default=3)
    p.add_argument("--max-agents", type=int, default=3)
    p.add_argument("--probability-rate", type=float, default=0.2)
    p.add_argument("--ambiguity-rate", type=float, default=0.1)
    p.add_argument("--info-set-rate", type=float, default=0.5)
    p.add_argument("--uncertainty-free", action="store_true")
    p.set_defaults(handler=_cmd_fuzz)

    p = sub.add_parser("examples", help="emit a built-in scenario file")
    p.add_argument("name", choices=BUILTIN_NAMES)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_examples)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config.set_enumeration_cap(args.cap)
    try:
        config.set_eps(args.eps)
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TreeValidationError as exc:
        print("validation failed:", file=sys.stderr)
        for issue in exc.issues:
            print(f"  {issue}", file=sys.stderr)
        return EXIT_VALIDATION
    except ExplosionGuard as exc:
        print(f"enumeration cap exceeded: {exc}", file=sys.stderr)
        return EXIT_EXPLOSION
    except (BadParameter, BadQuery, GroupRespError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OTHER
    finally:
        config.set_enumeration_cap(None)


if __name__ == "__main__":
    sys.exit(main())
