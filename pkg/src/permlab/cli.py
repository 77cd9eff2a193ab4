"""Command-line interface.  Results go to stdout as JSON (default) or CSV.

Exit status: 0 on success, 1 when a computation fails (bound exceeded,
bad input value, failed verification), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import classes, derangements, machines, order, rooks, sequences, survey, verify
from .cache import cached
from .errors import PermlabError
from .fastcount import count_av_fast
from .perm import (
    PermutationError, contains, format_perm, occurrences, parse_perm,
)


def _perm(text: str):
    try:
        return parse_perm(text)
    except PermutationError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {(",".join(map(str, k)) if isinstance(k, tuple) else str(k)): _jsonable(v)
                for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return x


def _profile(seq) -> dict:
    return vars(order.shape_profile(seq)).copy()


# -- command handlers: each returns a JSON-ready dict or list of rows -----


def cmd_contains(a):
    occ = occurrences(a.pattern, a.perm) if a.list else None
    out = {"pattern": format_perm(a.pattern), "perm": format_perm(a.perm),
           "contains": contains(a.pattern, a.perm)}
    if occ is not None:
        out["occurrences"] = occ
    return out


def cmd_downset(a):
    ranks = order.downset_ranks(a.perm)
    return {"perm": format_perm(a.perm), "ranks": ranks, **_profile(ranks)}


def cmd_interval(a):
    ranks = order.interval_rank_sequence(a.sigma, a.pi)
    return {"sigma": format_perm(a.sigma), "pi": format_perm(a.pi), "ranks": ranks, **_profile(ranks)}


def cmd_comp(a):
    ranks = order.comp_downset_rank(a.w, a.order)
    out = {"composition": list(a.w), "order": a.order, "ranks": ranks, **_profile(ranks)}
    if a.order == "componentwise":
        out["sagan_polynomial"] = order.sagan_polynomial(a.w)
    return out


def cmd_partition(a):
    ranks = order.partition_downset_rank(a.shape)
    return {"partition": list(a.shape), "ranks": ranks, **_profile(ranks)}


def _principal_checkpoint(args):
    # one cache entry per representative, so an interrupted run picks up where it stopped
    beta, depth = args
    return cached("principal", {"beta": format_perm(beta), "depth": depth},
                  lambda: classes.count_principal(args))


def cmd_wilf(a):
    def compute():
        counter = None if a.no_cache else _principal_checkpoint
        w = classes.wilf_classify(a.n, a.depth, a.threads, counter)
        return {"n": w.n, "depth": w.depth, "count": w.count,
                "classes": [[format_perm(p) for p in c] for c in w.classes],
                "sequences": [list(s) for s in w.sequences]}
    return cached("wilf", {"n": a.n, "depth": a.depth}, compute, not a.no_cache)


def cmd_symclasses(a):
    orbits = classes.symmetry_classes(a.n)
    return {"n": a.n, "count": len(orbits), "representatives": [format_perm(o[0]) for o in orbits]}


def cmd_gk(a):
    out = {"perm": format_perm(a.perm), "k": a.k, "g_k": classes.g_k(a.perm, a.k)}
    if a.k == 2:
        out["ray_west_j"] = classes.ray_west_j(a.perm)
    return out


def cmd_count(a):
    spec = classes.ClassSpec.parse(a.basis)
    seq = cached("count", {"basis": str(spec), "n": a.n},
                 lambda: count_av_fast(spec, a.n), not a.no_cache)
    return [{"n": n, "count": c} for n, c in enumerate(seq)]


def cmd_frp(a):
    shape = rooks.FerrersShape(a.shape)
    out = {"shape": str(shape), "admissible": shape.admissible}
    shape.require_admissible()
    if a.avoid is not None:
        out["avoid"] = format_perm(a.avoid)
        out["count"] = rooks.count_avoiding_frps(shape, a.avoid)
    else:
        out["count"] = len(rooks.frps(shape))
    if a.dominance:
        d = rooks.stankova_dominance(shape)
        out["dominance"] = {"132": d.count_132, "321": d.count_321, "231": d.count_231, "holds": d.holds}
    return out


def cmd_swe(a):
    r = rooks.shape_wilf_probe(a.beta, a.gamma, a.n_max)
    return {"beta": format_perm(a.beta), "gamma": format_perm(a.gamma), "n_max": a.n_max,
            "equivalent_so_far": r.equivalent_so_far, "shapes_checked": r.shapes_checked,
            "separating_shape": str(r.separating_shape) if r.separating_shape else None,
            "counts": list(r.counts) if r.counts else None}


def cmd_derange(a):
    spec = classes.ClassSpec.parse(a.cls)
    if a.stat == "count":
        seq = derangements.derangement_counts(spec, a.n)
        return [{"n": n, "derangements": seq[n]} for n in range(1, a.n + 1)]
    if a.stat == "proportion":
        ratios = derangements.derangement_proportions(spec, a.n)
        return [{"n": n, "proportion": sequences.render_ratio(ratios[n]), "exact": str(ratios[n])}
                for n in range(1, a.n + 1)]
    if a.stat == "fixexc":
        table = derangements.fix_exc_distribution(spec, a.n)
        return [{"n": n, "fixed_points": f, "excedances": e, "count": c}
                for n in range(a.n + 1) for (f, e), c in sorted(table[n].items())]
    coeffs = derangements.g_polynomial_123(a.n)
    return {"n": a.n, "G": coeffs, "G(1)": derangements.evaluate(coeffs, 1),
            "G(-1)": derangements.evaluate(coeffs, -1)}


def cmd_separable(a):
    dp = derangements.separable_displacement_dp(a.n)
    return [{"n": n, "separable": dp.totals[n], "derangements": dp.derangements[n],
             "displacement_sets": len(dp.any[n])} for n in range(1, a.n + 1)]


def _parse_poly(text: str) -> sequences.BivariatePoly:
    import sympy
    x, f = sympy.symbols("x f")
    poly = sympy.Poly(sympy.sympify(text, locals={"x": x, "f": f}), x, f)
    out = {}
    for (i, j), c in poly.terms():
        if not c.is_integer:
            raise PermlabError(f"coefficient {c} is not an integer")
        out[i, j] = int(c)
    return out


def cmd_seq(a):
    seq = sequences.read_sequence(a.file)
    if a.op == "hankel":
        r = sequences.hankel_report(seq, a.order or (len(seq) + 1) // 2)
        return {"determinants": list(r.determinants), "shifted_determinants": list(r.shifted_determinants),
                "first_negative_index": r.first_negative_index,
                "first_negative_shifted_index": r.first_negative_shifted_index}
    if a.op == "cf":
        cf = sequences.stieltjes_cf(seq)
        return {"alphas": [str(x) for x in cf.alphas], "breakdown_index": cf.breakdown_index,
                "terminated": cf.terminated, "nonnegative": cf.nonnegative,
                "first_negative_index": cf.first_negative_index}
    if a.op == "ratio":
        other = sequences.read_sequence(a.denominator)
        return [{"n": n, "ratio": sequences.render_ratio(r)}
                for n, r in enumerate(sequences.ratio_profile(seq, other))]
    poly = _parse_poly(a.poly) if a.poly else sequences.TWO_TWO_STACK_POLY
    r = sequences.algebraic_residual(poly, seq)
    return {"vanishes": r.vanishes, "first_nonzero_degree": r.first_nonzero_degree,
            "checked_through": r.checked_through}


def cmd_sort(a):
    p = a.perm
    out: dict[str, Any] = {"machine": a.machine, "perm": format_perm(p)}
    if a.machine == "series":
        out["sortable"] = machines.series_sortable(p, a.t, a.ordered, a.budget)
        if a.witness and out["sortable"]:
            out["witness"] = machines.series_witness(p, a.t, a.ordered)
    elif a.machine == "rs":
        out["sortable"] = machines.rs_stack_sortable(p, a.r, a.s, a.budget)
    elif a.machine == "cmachine":
        basis = classes.ClassSpec.parse(a.basis).basis
        out["generates"] = machines.c_machine_generatable(basis, a.s, p)
    elif a.machine == "pq":
        if a.capacity:
            out["sortable"] = machines.bounded_pq_sortable(p, a.capacity)
        else:
            out["sortable"] = True
        out["pairs_count"] = machines.pq_pairs_count(len(p)) if len(p) <= 7 else None
    else:
        out["sortable"] = machines.west_sortable(p, a.t)
        out["image"] = format_perm(machines.greedy_stack_sort(p))
    return out


def cmd_survey(a):
    if a.name == "downset-unimodality":
        r = survey.downset_unimodality(a.max_len, a.sample_len or None, a.samples, a.seed)
    elif a.name == "composition-subword":
        r = survey.composition_subword(a.max_sum)
    else:
        r = survey.gn_minus_one(a.max_n)
    if a.out:
        r.write(a.out)
    return r.to_json()


def cmd_verify(a):
    results = verify.run_suite(a.only)
    rows = [vars(r) for r in results]
    a._failed = not all(r.passed for r in results)
    return rows


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes for parallel steps (default: logical cores)")
    common.add_argument("--no-cache", action="store_true", help="ignore the on-disk cache")

    parser = argparse.ArgumentParser(prog="permlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("contains", cmd_contains, "pattern containment test")
    p.add_argument("pattern", type=_perm)
    p.add_argument("perm", type=_perm)
    p.add_argument("--list", action="store_true", help="also list occurrences (1-based)")

    p = add("downset", cmd_downset, "rank sequence of a principal downset")
    p.add_argument("perm", type=_perm)

    p = add("interval", cmd_interval, "rank sequence of the interval [sigma, pi]")
    p.add_argument("sigma", type=_perm)
    p.add_argument("pi", type=_perm)

    p = add("comp", cmd_comp, "downset ranks of a composition")
    p.add_argument("w", type=_ints, help="parts, e.g. 1,3,2")
    p.add_argument("--order", choices=["subword", "componentwise"], default="subword")

    p = add("partition", cmd_partition, "downset ranks in Young's lattice")
    p.add_argument("shape", type=_ints, help="parts, e.g. 8,8,4,4")

    p = add("wilf", cmd_wilf, "candidate Wilf classes of length-n patterns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, default=9)

    p = add("symclasses", cmd_symclasses, "symmetry classes of S_n")
    p.add_argument("--n", type=int, required=True)

    p = add("gk", cmd_gk, "number of length |beta|+k permutations containing beta")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--k", type=int, default=1)

    p = add("count", cmd_count, "|Av_n(B)| for n = 0..N")
    p.add_argument("--basis", required=True, help='e.g. "Av(2413,3142)" or 2413,3142')
    p.add_argument("--n", type=int, required=True)

    p = add("frp", cmd_frp, "full rook placements on a Ferrers shape")
    p.add_argument("--shape", type=_ints, required=True, help="column heights, e.g. 4,4,3,2")
    p.add_argument("--avoid", type=_perm)
    p.add_argument("--dominance", action="store_true")

    p = add("swe", cmd_swe, "search for a shape separating two patterns")
    p.add_argument("--beta", type=_perm, required=True)
    p.add_argument("--gamma", type=_perm, required=True)
    p.add_argument("--n-max", type=int, default=6)

    p = add("derange", cmd_derange, "derangements in a principal or finitely based class")
    p.add_argument("--class", dest="cls", required=True, help='basis, e.g. 132 or "Av(2413,3142)"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=["count", "proportion", "fixexc", "gpoly"], default="count")

    p = add("separable", cmd_separable, "separable permutations by displacement-set DP")
    p.add_argument("--n", type=int, required=True)

    p = add("seq", cmd_seq, "diagnostics on a sequence file (one integer per line)")
    p.add_argument("op", choices=["hankel", "cf", "residual", "ratio"])
    p.add_argument("file")
    p.add_argument("--order", type=int)
    p.add_argument("--poly", help="polynomial in x and f, default the (2,2)-stack equation")
    p.add_argument("--denominator", help="second sequence file for ratio")

    p = add("sort", cmd_sort, "sorting and generating machines")
    p.add_argument("machine", choices=["series", "rs", "cmachine", "pq", "west"])
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--ordered", action="store_true")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--basis", default="21", help="container basis for cmachine")
    p.add_argument("--capacity", type=int)
    p.add_argument("--budget", type=int, default=machines.DEFAULT_BUDGET)

    p = add("survey", cmd_survey, "bounded counterexample scans")
    p.add_argument("name", choices=sorted(survey.SURVEYS))
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--sample-len", type=int, default=11, help="0 disables sampling")
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-sum", type=int, default=18)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--out", help="write the report (with certificates) to this file")

    p = add("verify", cmd_verify, "run the embedded regression suite")
    p.add_argument("--suite", choices=["paper"], default="paper")
    p.add_argument("--only", nargs="*", choices=sorted(verify.CHECKS))
    return parser


def _emit(result, fmt: str, stream) -> None:
    result = _jsonable(result)
    if fmt == "json":
        json.dump(result, stream, indent=2)
        stream.write("\n")
        return
    writer = csv.writer(stream, lineterminator="\r\n")
    if isinstance(result, list) and result and isinstance(result[0], dict):
        keys = list(result[0])
        writer.writerow(keys)
        for row in result:
            writer.writerow([_cell(row.get(k)) for k in keys])
    else:
        writer.writerow(["key", "value"])
        for k, v in result.items():
            writer.writerow([k, _cell(v)])


def _cell(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return "" if v is None else str(v)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (PermlabError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    buf = io.StringIO()
    _emit(result, args.format, buf)
    sys.stdout.write(buf.getvalue())
    return 1 if getattr(args, "_failed", False) else 0


if __name__ == "__main__":
    sys.exit(main())
