#!/usr/bin/env python3
"""
Decision Tree Equivalence - Main Orchestrator

CLI tool for deciding predictive equivalence of decision trees, computing
abductive explanations and missing-data predictions, and running the
Quine-McCluskey/BCF baseline against worst-case tree families.

Usage:
    python main.py check-equiv t1.json t2.json
    python main.py explain --tree t1.json --assign '{x1:0,x2:1}' --class 1
    python main.py gen --family worst-case --r 3 --out gadget3.json
    python main.py bench --table 1 --r-min 3 --r-max 6
"""

import argparse
import json
import os
import sys
from typing import Dict, List, Optional

from dotenv import load_dotenv
from loguru import logger

from bench.tables import run_table1, run_table2
from cache.bcf_cache import clear_cache, get_bcf, get_cache_stats
from equiv.decide import conflict_matrix, decide
from explain.axp import explain_instance, find_one_axp
from explain.waxp import is_waxp_for_class, is_waxp_some_class, predict_with_missing
from gen.families import boolean_schema, example_function_trees, running_examples, worst_case
from gen.random_trees import random_tree
from model.assignment import PartialAssignment
from model.documents import serialize, serialize_assignment
from model.errors import DocumentError, PedtError, PreconditionError
from model.tree import classify
from model.validation import validate
from oracle.brute import brute_all_axps, brute_counterexample
from parsers.assignment_parser import load_assignment, load_point, load_tree
from qm.compare import bcf_equivalence, qm_equivalence
from qm.cover import CostModel, TieBreak, minimize
from shapley.scores import corrected_shap
from utils.helpers import configure_logging, load_config
from writers.document_writer import dump_document, format_dnf, write_document
from writers.report_writer import format_bench_table, format_conflict_matrix, write_bench_report

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class Output:
    """Routes results to stdout as text lines or as a single JSON document."""

    def __init__(self, fmt: str):
        self.fmt = fmt

    @property
    def as_doc(self) -> bool:
        return self.fmt == 'doc'

    def emit(self, doc, lines: List[str]) -> None:
        if self.as_doc:
            print(dump_document(doc))
        else:
            for line in lines:
                print(line)


def _jobs(args, config: Dict) -> int:
    return args.jobs if args.jobs is not None else int(config['run']['jobs'])


def _order(text: Optional[str]) -> Optional[List[int]]:
    if not text:
        return None
    try:
        return [int(t) for t in text.replace(' ', '').split(',') if t]
    except ValueError:
        raise DocumentError(f"invalid --order {text!r}", ["expected comma-separated feature ids"])


def cmd_check_equiv(args, config: Dict, out: Output) -> int:
    t1, t2 = load_tree(args.t1), load_tree(args.t2)
    verdict = decide(t1, t2, jobs=_jobs(args, config))
    doc = {'equivalent': verdict.equivalent, 'pairs_checked': verdict.pairs_checked}
    lines = []
    if verdict.equivalent:
        lines.append(f"✅ equivalent ({verdict.pairs_checked} pair checks)")
    else:
        w = verdict.witness
        doc['witness'] = dict(w.to_dict(), point=serialize_assignment(w.point))
        lines.append("❌ not equivalent")
        lines.append(f"   path {list(w.path1.nodes)} -> {w.path1.label} "
                     f"vs path {list(w.path2.nodes)} -> {w.path2.label}")
        lines.append(f"   point {w.point}")
        lines.append(dump_document(serialize_assignment(w.point)))
        if args.out:
            write_document(args.out, serialize_assignment(w.point))
            lines.append(f"💾 witness written to {args.out}")
    if args.matrix:
        matrix = conflict_matrix(t1, t2)
        doc['matrix'] = matrix
        lines.append(format_conflict_matrix(matrix))
    out.emit(doc, lines)
    return EXIT_OK if verdict.equivalent else EXIT_NEGATIVE


def cmd_explain(args, config: Dict, out: Output) -> int:
    tree = load_tree(args.tree)
    order = _order(args.order)
    if args.assign is None:
        raise DocumentError("explain needs --assign (or --point)")
    if args.label is None:
        point = load_point(args.assign, tree.schema)
        label, axp = explain_instance(tree, point, order)
    else:
        label = args.label
        axp = find_one_axp(tree, load_assignment(args.assign, tree.schema), label, order)
    out.emit({'class': label, 'axp': serialize_assignment(axp)}, [str(axp)])
    return EXIT_OK


def cmd_iswaxp(args, config: Dict, out: Output) -> int:
    tree = load_tree(args.tree)
    assignment = load_assignment(args.assign, tree.schema)
    if args.label is None:
        verdict = is_waxp_some_class(tree, assignment, _jobs(args, config))
    else:
        verdict = is_waxp_for_class(tree, assignment, args.label, _jobs(args, config))
    if verdict.is_waxp:
        lines = [f"✅ WAXp for class {verdict.label}"]
    elif verdict.witness_path is not None:
        lines = [f"❌ not a WAXp: path {list(verdict.witness_path.nodes)} "
                 f"reaches class {verdict.witness_path.label}"]
    else:
        lines = ["❌ not a WAXp for any class"]
    out.emit(verdict.to_dict(), lines)
    return EXIT_OK if verdict.is_waxp else EXIT_NEGATIVE


def cmd_predict_missing(args, config: Dict, out: Output) -> int:
    tree = load_tree(args.tree)
    assignment = load_assignment(args.assign, tree.schema)
    label = predict_with_missing(tree, assignment, _jobs(args, config))
    out.emit({'class': label}, [label if label is not None else "⊥"])
    return EXIT_OK if label is not None else EXIT_NEGATIVE


def _cache_dir(args, config: Dict) -> Optional[str]:
    if getattr(args, 'cache', False) or config['cache']['enabled']:
        return config['cache']['dir']
    return None


def _term_cap(args, config: Dict) -> int:
    return args.term_cap if args.term_cap is not None else int(config['caps']['bcf_terms'])


def cmd_bcf(args, config: Dict, out: Output) -> int:
    tree = load_tree(args.tree)
    dnf, source = get_bcf(tree, args.label, _cache_dir(args, config), _term_cap(args, config))
    logger.info(f"BCF for class {dnf.label}: {len(dnf)} terms ({source})")
    out.emit(dnf.to_dict(), [format_dnf(dnf)])
    return EXIT_OK


def cmd_qm_minimize(args, config: Dict, out: Output) -> int:
    tree = load_tree(args.tree)
    dnf, _ = get_bcf(tree, args.label, _cache_dir(args, config), _term_cap(args, config))
    result = minimize(dnf, TieBreak.parse(args.tie_break), CostModel(args.cost_model),
                      int(config['caps']['minimize_features']))
    out.emit(result.to_dict(), [format_dnf(result)])
    return EXIT_OK


def cmd_qm_equiv(args, config: Dict, out: Output) -> int:
    t1, t2 = load_tree(args.t1), load_tree(args.t2)
    same = qm_equivalence(t1, t2, TieBreak.parse(args.tie_break1), TieBreak.parse(args.tie_break2),
                          CostModel(args.cost_model), int(config['caps']['minimize_features']),
                          _term_cap(args, config))
    out.emit({'equivalent': same}, ["✅ minimized DNFs match" if same else "❌ minimized DNFs differ"])
    return EXIT_OK if same else EXIT_NEGATIVE


def cmd_bcf_equiv(args, config: Dict, out: Output) -> int:
    same = bcf_equivalence(load_tree(args.t1), load_tree(args.t2), _term_cap(args, config))
    out.emit({'equivalent': same}, ["✅ BCFs match" if same else "❌ BCFs differ"])
    return EXIT_OK if same else EXIT_NEGATIVE


def _generate(args) -> Dict:
    """Named trees of the requested family."""
    if args.family == 'worst-case':
        return {f"worst_case_{args.r}": worst_case(args.r)}
    if args.family == 'running':
        return dict(zip(("T1", "T2", "T3"), running_examples()))
    if args.family == 'example-fn':
        return dict(zip(("f_lexlow", "f_lexhigh"), example_function_trees()))
    schema = boolean_schema(args.features)
    return {f"random_{args.seed}": random_tree(schema, args.depth, args.seed)}


def cmd_gen(args, config: Dict, out: Output) -> int:
    trees = _generate(args)
    docs = {name: serialize(tree) for name, tree in trees.items()}
    lines = [f"🌳 {name}: {t.node_count} nodes, {t.feature_count} features, {len(t.paths)} paths"
             for name, t in trees.items()]
    if args.out:
        if len(docs) == 1:
            targets = {args.out: next(iter(docs.values()))}
        else:
            targets = {os.path.join(args.out, f"{name}.json"): doc for name, doc in docs.items()}
        for path, doc in targets.items():
            write_document(path, doc)
            lines.append(f"💾 {path}")
        out.emit({'written': list(targets)}, lines)
    else:
        out.emit(next(iter(docs.values())) if len(docs) == 1 else docs, lines)
    return EXIT_OK


def cmd_oracle_equiv(args, config: Dict, out: Output) -> int:
    t1, t2 = load_tree(args.t1), load_tree(args.t2)
    values = brute_counterexample(t1, t2, int(config['caps']['oracle_points']), _jobs(args, config))
    if values is None:
        out.emit({'equivalent': True}, ["✅ equivalent on every point"])
        return EXIT_OK
    point = PartialAssignment.from_point(t1.schema, values)
    doc = {'equivalent': False, 'point': serialize_assignment(point),
           'class1': classify(t1, point), 'class2': classify(t2, point)}
    out.emit(doc, [f"❌ counterexample {point}: {doc['class1']} vs {doc['class2']}"])
    return EXIT_NEGATIVE


def cmd_oracle_axps(args, config: Dict, out: Output) -> int:
    if args.point is None and args.label is None:
        raise PreconditionError("oracle-axps needs --class or --point")
    tree = load_tree(args.tree)
    instance = load_point(args.point, tree.schema) if args.point else None
    label = args.label if args.label is not None else classify(tree, instance)
    axps = sorted(brute_all_axps(tree, str(label), int(config['caps']['oracle_points']), instance),
                  key=lambda a: [l.sort_key() for l in a.literals])
    out.emit({'class': label, 'axps': [serialize_assignment(a) for a in axps]},
             [f"🔍 {len(axps)} AXp(s) for class {label}"] + [f"   {a}" for a in axps])
    return EXIT_OK


def cmd_shap(args, config: Dict, out: Output) -> int:
    tree = load_tree(args.tree)
    point = load_point(args.point, tree.schema)
    label = args.label if args.label is not None else classify(tree, point)
    scores = corrected_shap(tree, (point, label), int(config['caps']['shap_features']),
                            _jobs(args, config))
    lines = [f"{name}: {score} (≈{float(score):.4f})" for name, score in zip(scores.names, scores.scores)]
    out.emit({'class': label, 'scores': scores.to_dict()}, lines)
    return EXIT_OK


def cmd_bench(args, config: Dict, out: Output) -> int:
    bench = config['bench']
    jobs = _jobs(args, config)
    if args.table == 1:
        r_max = args.r_max if args.r_max is not None else bench['table1_r_max']
        if args.extended:
            r_max = max(r_max, bench['table1_r_extended'])
        r_min = args.r_min if args.r_min is not None else bench['table1_r_min']
        report = run_table1(r_min, r_max, _term_cap(args, config), _cache_dir(args, config), jobs)
    else:
        r_values = args.r_list if args.r_list else bench['table2_r_values']
        report = run_table2(tuple(r_values), jobs)

    lines = [format_bench_table(report)]
    if args.out:
        if args.out.lower().endswith('.md'):
            write_bench_report(args.out, report)
        else:
            write_document(args.out, report.to_dict())
        lines.append(f"💾 report written to {args.out}")
    out.emit(report.to_dict(), lines)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_cache(args, config: Dict, out: Output) -> int:
    cache_dir = config['cache']['dir']
    if args.action == 'clear':
        deleted = clear_cache(cache_dir, args.older_than_days)
        out.emit({'dir': cache_dir, 'deleted': deleted}, [f"🗑️ {deleted} cached BCF(s) removed from {cache_dir}"])
        return EXIT_OK
    stats = get_cache_stats(cache_dir)
    out.emit(dict(stats, dir=cache_dir),
             [f"📦 {stats['total_files']} cached BCF(s) in {cache_dir} ({stats['total_size_bytes']} bytes)"])
    return EXIT_OK


def cmd_validate(args, config: Dict, out: Output) -> int:
    report = validate(load_tree(args.tree))
    if report.ok:
        lines = ["✅ tree is valid"]
    else:
        lines = [f"❌ {len(report.violations)} violation(s)"] + [f"   {v}" for v in report.violations]
    out.emit(report.to_dict(), lines)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


COMMANDS = {
    'check-equiv': cmd_check_equiv,
    'explain': cmd_explain,
    'iswaxp': cmd_iswaxp,
    'predict-missing': cmd_predict_missing,
    'bcf': cmd_bcf,
    'qm-minimize': cmd_qm_minimize,
    'qm-equiv': cmd_qm_equiv,
    'bcf-equiv': cmd_bcf_equiv,
    'gen': cmd_gen,
    'oracle-equiv': cmd_oracle_equiv,
    'oracle-axps': cmd_oracle_axps,
    'shap': cmd_shap,
    'bench': cmd_bench,
    'validate': cmd_validate,
    'cache': cmd_cache,
}


def _int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(',') if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Predictive equivalence and explanations for decision trees',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py check-equiv T1.json T2.json
  python main.py --format doc check-equiv T1.json T3.json --matrix
  python main.py explain --tree T1.json --assign '{x1:0,x2:1}' --class 1
  python main.py qm-equiv fa.json fb.json --tie-break1 lexlow --tie-break2 lexhigh
  python main.py gen --family running --out trees/
  python main.py bench --table 2 --r-list 200,500
        """
    )
    parser.add_argument('--config', type=str, default='config.yaml',
                        help='Path to config file (default: config.yaml)')
    parser.add_argument('--log-level', type=str, default=None,
                        help='Log level for stderr diagnostics (default: from config, INFO)')
    parser.add_argument('--jobs', type=int, default=None,
                        help='Parallel workers for path scans and enumeration (default: from config, 1)')
    parser.add_argument('--format', choices=['text', 'doc'], default='text',
                        help='Output as text lines or one JSON document (default: text)')

    sub = parser.add_subparsers(dest='command', metavar='COMMAND')

    p = sub.add_parser('check-equiv', help='Decide predictive equivalence of two trees')
    p.add_argument('t1')
    p.add_argument('t2')
    p.add_argument('--matrix', action='store_true', help='Also print the path-pair conflict table')
    p.add_argument('--out', help='Write the witness point as an assignment document')

    p = sub.add_parser('explain', help='Find one abductive explanation')
    p.add_argument('--tree', required=True)
    p.add_argument('--assign', '--point', dest='assign',
                   help='Assignment file, JSON or inline {x1:0,x2:1}; a complete point when --class is omitted')
    p.add_argument('--class', dest='label', help='Class to explain (default: the predicted class)')
    p.add_argument('--order', help='Feature deletion order, e.g. 3,1,2 (default: feature-id order)')

    p = sub.add_parser('iswaxp', help='Check whether an assignment is a weak abductive explanation')
    p.add_argument('--tree', required=True)
    p.add_argument('--assign', required=True)
    p.add_argument('--class', dest='label', help='Class to check (default: any single class)')

    p = sub.add_parser('predict-missing', help='Predict with missing features')
    p.add_argument('--tree', required=True)
    p.add_argument('--assign', required=True)

    for name, help_text in (('bcf', 'Blake canonical form of one class'),
                            ('qm-minimize', 'Minimum DNF of one class')):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--tree', required=True)
        p.add_argument('--class', dest='label', required=True)
        p.add_argument('--term-cap', type=int, default=None, help='BCF term cap (default: from config)')
        p.add_argument('--cache', action='store_true', help='Use the on-disk BCF cache')
        if name == 'qm-minimize':
            p.add_argument('--tie-break', default='lexlow', help='lexlow | lexhigh | seeded:<n> (default: lexlow)')
            p.add_argument('--cost-model', choices=[c.value for c in CostModel],
                           default=CostModel.TERMS_THEN_LITERALS.value)

    p = sub.add_parser('qm-equiv', help='Compare minimized DNFs (unsound baseline)')
    p.add_argument('t1')
    p.add_argument('t2')
    p.add_argument('--tie-break1', default='lexlow')
    p.add_argument('--tie-break2', default='lexlow')
    p.add_argument('--cost-model', choices=[c.value for c in CostModel],
                   default=CostModel.TERMS_THEN_LITERALS.value)
    p.add_argument('--term-cap', type=int, default=None)

    p = sub.add_parser('bcf-equiv', help='Compare Blake canonical forms')
    p.add_argument('t1')
    p.add_argument('t2')
    p.add_argument('--term-cap', type=int, default=None)

    p = sub.add_parser('gen', help='Generate tree documents')
    p.add_argument('--family', choices=['worst-case', 'running', 'example-fn', 'random'], required=True)
    p.add_argument('--r', type=int, default=3, help='Gadget repetitions (default: 3)')
    p.add_argument('--seed', type=int, default=0, help='Random seed (default: 0)')
    p.add_argument('--depth', type=int, default=4, help='Random tree depth (default: 4)')
    p.add_argument('--features', type=int, default=4, help='Random tree boolean features (default: 4)')
    p.add_argument('--out', help='Output file, or directory for multi-tree families (default: stdout)')

    p = sub.add_parser('oracle-equiv', help='Equivalence by exhaustive enumeration')
    p.add_argument('t1')
    p.add_argument('t2')

    p = sub.add_parser('oracle-axps', help='All AXps by exhaustive enumeration')
    p.add_argument('--tree', required=True)
    p.add_argument('--point', help='Restrict to the literals of this instance')
    p.add_argument('--class', dest='label')

    p = sub.add_parser('shap', help='Exact corrected SHAP scores')
    p.add_argument('--tree', required=True)
    p.add_argument('--point', required=True)
    p.add_argument('--class', dest='label')

    p = sub.add_parser('bench', help='Reproduce the benchmark tables')
    p.add_argument('--table', type=int, choices=[1, 2], required=True)
    p.add_argument('--r-min', type=int, default=None)
    p.add_argument('--r-max', type=int, default=None)
    p.add_argument('--r-list', type=_int_list, default=None, help='Table 2 sizes, e.g. 200,500,1000')
    p.add_argument('--term-cap', type=int, default=None)
    p.add_argument('--extended', action='store_true', help='Extend table 1 to the largest size')
    p.add_argument('--cache', action='store_true')
    p.add_argument('--out', help='Report path (.md for Markdown, .json/.yaml for documents)')

    p = sub.add_parser('validate', help='Check tree well-formedness')
    p.add_argument('--tree', required=True)

    p = sub.add_parser('cache', help='Inspect or clear the on-disk BCF cache')
    p.add_argument('action', choices=['stats', 'clear'])
    p.add_argument('--older-than-days', type=int, default=None,
                   help='With clear: only remove entries older than N days (default: all)')

    return parser


def _report_error(exc: Exception, out: Output) -> int:
    if out.as_doc:
        error = {'type': type(exc).__name__, 'message': str(exc).split('\n')[0],
                 'details': list(getattr(exc, 'details', []))}
        print(json.dumps({'error': error}, ensure_ascii=False, indent=2))
    else:
        print(f"❌ {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_ERROR


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI."""
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    if not args.command:
        parser.print_help()
        return EXIT_OK

    out = Output(args.format)
    try:
        config = load_config(args.config)
        configure_logging(args.log_level or config['logging']['level'])
        logger.debug(f"config loaded from {args.config}")
        return COMMANDS[args.command](args, config, out)
    except (PedtError, OSError, ValueError) as e:
        return _report_error(e, out)


if __name__ == "__main__":
    sys.exit(main())
