"""Command-line interface: ``catalan-hopf <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a violation and 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import sharp as hp
from .errors import InvalidArgument, InvalidWord, ParseError
from .lab import explore_correspondence, shape_census
from .lr import canopy_split, lr_product
from .perms import Permutation, format_signs, mr_product, parse_signs, updown
from .serialize import sum_to_json
from .tableaux import enumerate_all, enumerate_tableaux, parse_tableau, render, tableau_to_json
from .trees import canopy, decode_tree, encode_tree, enumerate_trees, fiber_list, psi, tree_from_json, tree_to_json
from .verify import DEFAULT_SEED, SUITES, run_suites


def _tree_arg(text: str):
    """A tree encoding, or a permutation standing for its tree."""
    text = text.strip()
    if text[:1] in "(.":
        return decode_tree(text)
    return psi(Permutation.parse(text))


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, ensure_ascii=False, sort_keys=False))
    else:
        print(text)


def cmd_enumerate(args):
    if args.kind == "trees":
        items = enumerate_trees(args.n)
        if args.count:
            return _emit(args, str(len(items)), {"count": len(items)})
        return _emit(args, "\n".join(map(str, items)), {"trees": [str(t) for t in items]})
    items = enumerate_tableaux(parse_signs(args.shape)) if args.shape is not None else enumerate_all(args.n)
    if args.count:
        return _emit(args, str(len(items)), {"count": len(items)})
    if args.render:
        text = "\n\n".join(f"{t}\n{render(t)}" for t in items)
    else:
        text = "\n".join(map(str, items))
    _emit(args, text, {"tableaux": [tableau_to_json(t) for t in items]})


def cmd_product(args):
    if args.algebra == "mr":
        result = mr_product(Permutation.parse(args.left), Permutation.parse(args.right))
    elif args.algebra == "lr":
        result = lr_product(_tree_arg(args.left), _tree_arg(args.right), args.method)
    else:
        result = hp.hash_product(parse_tableau(args.left), parse_tableau(args.right), args.strategy)
    _emit(args, result.to_text(), sum_to_json(result))


def cmd_hash(args):
    args.algebra = "hash"
    cmd_product(args)


def cmd_hash_compare(args):
    report = hp.compare_strategies(args.max_total)
    lines = [f"max total size {report['max_total_size']}"]
    for name, info in report["strategies"].items():
        line = f"{name}: associative={info['associative']} failures={info['associativity_failures']} unit={info['unit']} graded={info['graded']}"
        if info["first_failure"]:
            f = info["first_failure"]
            line += f" first={' # '.join(f['triple'])} ({f['left_terms']} vs {f['right_terms']} terms)"
        lines.append(line)
    _emit(args, "\n".join(lines), report)


def cmd_fiber(args):
    t = _tree_arg(args.tree)
    perms = fiber_list(t)
    _emit(args, " + ".join(map(str, perms)), {"tree": str(t), "perms": [list(p) for p in perms]})


def cmd_psi(args):
    t = psi(Permutation.parse(args.perm))
    _emit(args, str(t), {"tree": str(t)})


def cmd_canopy(args):
    text = args.obj.strip()
    word = canopy(decode_tree(text)) if text[:1] in "(." else updown(Permutation.parse(text))
    _emit(args, format_signs(word), {"signs": list(word)})


def cmd_split(args):
    split = canopy_split(_tree_arg(args.left), _tree_arg(args.right), args.method)
    lines = [f"{format_signs(k)}: {v.to_text()}" for k, v in sorted(split.items())]
    obj = {"classes": [{"canopy": list(k), **sum_to_json(v)} for k, v in sorted(split.items())]}
    _emit(args, "\n".join(lines), obj)


def cmd_census(args):
    c = shape_census(args.n)
    lines = [f"{format_signs(s)}: trees={t} tableaux={k}" for s, (t, k) in sorted(c.per_shape.items())]
    lines.append(f"totals: trees={c.totals[0]} tableaux={c.totals[1]}")
    _emit(args, "\n".join(lines), c.to_json())


def cmd_verify(args):
    results = run_suites(args.suite, seed=args.seed, jobs=args.jobs)
    ok = all(r[1] for r in results)
    if args.format == "json":
        print(json.dumps({"ok": ok, "suites": [{"name": n, "ok": g, "log": l} for n, g, l in results]}))
    else:
        for name, good, lines in results:
            print(f"[{'PASS' if good else 'FAIL'}] {name}")
            for line in lines:
                print(f"    {line}")
    return 0 if ok else 1


def cmd_explore(args):
    report = explore_correspondence(args.n, args.strategy, args.cap)
    obj = report.to_json()
    if args.format == "text":
        lines = [f"strategy {report.strategy}, n_max {report.n_max}: {report.status}"]
        for lvl in report.levels:
            lines.append(
                f"  n={lvl['n']}: {lvl['constraints']} classes, {lvl['partials_in']} -> {lvl['partials_out']} partial bijections, "
                f"{lvl['contradiction_count']} contradictions"
            )
        print("\n".join(lines))
    else:
        print(json.dumps(obj, ensure_ascii=False))


def cmd_encode(args):
    t = tree_from_json(json.loads(args.json))
    _emit(args, encode_tree(t), {"tree": encode_tree(t)})


def cmd_decode(args):
    t = decode_tree(args.text)
    _emit(args, json.dumps(tree_to_json(t)), tree_to_json(t))


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="catalan-hopf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[fmt], help="list trees or tableaux")
    e.add_argument("kind", choices=("trees", "tableaux"))
    e.add_argument("n", type=int, nargs="?", default=0, help="number of nodes / tableau size")
    e.add_argument("--shape", help="tableaux of one shape, e.g. +-+-")
    e.add_argument("--count", action="store_true")
    e.add_argument("--render", action="store_true", help="ASCII grids for tableaux")
    e.set_defaults(func=cmd_enumerate)

    pr = sub.add_parser("product", parents=[fmt], help="multiply two basis elements")
    pr.add_argument("algebra", choices=("mr", "lr", "hash"))
    pr.add_argument("left")
    pr.add_argument("right")
    pr.add_argument("--method", choices=("reference", "fast"), default="reference")
    pr.add_argument("--strategy", choices=sorted(hp.STRATEGIES), default=hp.DEFAULT_STRATEGY)
    pr.set_defaults(func=cmd_product)

    h = sub.add_parser("hash", parents=[fmt], help="# product of two tableaux")
    h.add_argument("left")
    h.add_argument("right")
    h.add_argument("--strategy", choices=sorted(hp.STRATEGIES), default=hp.DEFAULT_STRATEGY)
    h.set_defaults(func=cmd_hash, method="reference")

    hc = sub.add_parser("hash-compare", parents=[fmt], help="associativity report per embedding strategy")
    hc.add_argument("--max-total", type=int, default=6)
    hc.set_defaults(func=cmd_hash_compare)

    f = sub.add_parser("fiber", parents=[fmt], help="permutations projecting to a tree")
    f.add_argument("tree")
    f.set_defaults(func=cmd_fiber)

    ps = sub.add_parser("psi", parents=[fmt], help="tree of a permutation")
    ps.add_argument("perm")
    ps.set_defaults(func=cmd_psi)

    c = sub.add_parser("canopy", parents=[fmt], help="canopy of a tree or Up-Down word of a permutation")
    c.add_argument("obj")
    c.set_defaults(func=cmd_canopy)

    sp = sub.add_parser("split", parents=[fmt], help="Loday-Ronco product grouped by canopy")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--method", choices=("reference", "fast"), default="reference")
    sp.set_defaults(func=cmd_split)

    cs = sub.add_parser("census", parents=[fmt], help="trees per canopy vs tableaux per shape")
    cs.add_argument("n", type=int)
    cs.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", parents=[fmt], help="run the verification suites")
    v.add_argument("--suite", action="append", choices=sorted(SUITES))
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("explore", help="search tree-tableau correspondences")
    x.add_argument("--format", choices=("text", "json"), default="json")
    x.add_argument("n", type=int)
    x.add_argument("--strategy", choices=sorted(hp.STRATEGIES), default=hp.DEFAULT_STRATEGY)
    x.add_argument("--cap", type=int, default=64)
    x.set_defaults(func=cmd_explore)

    en = sub.add_parser("encode", parents=[fmt], help="nested-array JSON tree to string")
    en.add_argument("json")
    en.set_defaults(func=cmd_encode)

    de = sub.add_parser("decode", parents=[fmt], help="tree string to nested-array JSON")
    de.add_argument("text")
    de.set_defaults(func=cmd_decode)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (ParseError, InvalidArgument, InvalidWord, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
