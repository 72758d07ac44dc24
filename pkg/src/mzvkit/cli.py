"""Command-line front end.

Subcommands cover the algebra (dual, shuffle, harmonic, derive, act, series),
relation generation and exact ranks (relations, rank), and numerical
evaluation and verification (eval, verify).  Output is deterministic; with
--format json it is machine-readable JSON lines.  Exit status is 0 on
success and all-pass, 1 on domain errors or any verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import numerics, qsym, relations
from .derivations import (
    conjugate,
    cyclic_C,
    cyclic_C_bar,
    derivation_D,
    derivation_Dn,
    ihara_kaneko,
)
from .words import (
    DomainError,
    Poly,
    composition_of,
    dual_composition,
    format_composition,
    format_poly,
    parse_composition,
    parse_word,
    poly_to_obj,
)


def _poly_out(p: Poly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(poly_to_obj(p), sort_keys=True)
    return format_poly(p)


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_dual(args, fmt):
    c = parse_composition(args.composition)
    d = dual_composition(c)
    if fmt == "json":
        return [json.dumps({"dual": list(d)})], 0
    return [format_composition(d)], 0


def _cmd_product(args, fmt):
    from .products import harmonic, shuffle

    op = shuffle if args.command == "shuffle" else harmonic
    p = op(Poly.word(parse_word(args.u)), Poly.word(parse_word(args.v)))
    return [_poly_out(p, fmt)], 0


def _cmd_derive(args, fmt):
    w = parse_word(args.word)
    if args.op == "D":
        p = derivation_D().apply(w)
    elif args.op == "Dbar":
        p = conjugate(derivation_D()).apply(w)
    elif args.op == "Dn":
        p = derivation_Dn(args.n).apply(w)
    elif args.op == "partial_n":
        p = ihara_kaneko(args.n).apply(w)
    elif args.op == "C":
        p = cyclic_C(w)
    else:
        p = cyclic_C_bar(w)
    return [_poly_out(p, fmt)], 0


def _cmd_act(args, fmt):
    if args.elem == "word":
        if len(args.words) != 2:
            raise DomainError("act --elem word needs two word arguments: actor target")
        u = Poly.word(parse_word(args.words[0]))
        target = args.words[1]
    else:
        if args.n is None:
            raise DomainError("act --elem pn/en/hn requires --n")
        if len(args.words) != 1:
            raise DomainError("act needs one target word")
        u = {"pn": qsym.power_p, "en": qsym.elementary_e, "hn": qsym.complete_h}[args.elem](args.n)
        target = args.words[0]
    p = qsym.act(u, Poly.word(parse_word(target)))
    return [_poly_out(p, fmt)], 0


def _cmd_series(args, fmt):
    w = Poly.word(parse_word(args.word))
    fn = {
        "sigma": qsym.sigma_t,
        "exp-partial": qsym.exp_partial_t,
        "phi": qsym.phi_bar_sigma,
    }[args.op]
    series = fn(w, args.order)
    lines = []
    for k in range(args.order + 1):
        coeff = series.coeff(k)
        if fmt == "json":
            lines.append(json.dumps({"degree": k, "coeff": poly_to_obj(coeff)}, sort_keys=True))
        else:
            lines.append(f"t^{k}: {format_poly(coeff)}")
    return lines, 0


def _families(arg: str):
    if arg == "all":
        return relations.FAMILIES
    fams = tuple(f.strip() for f in arg.split(",") if f.strip())
    for f in fams:
        if f not in relations.FAMILIES:
            raise DomainError(f"unknown family: {f!r} (expected one of {', '.join(relations.FAMILIES)})")
    return fams


def _relation_obj(r):
    return {
        "family": r.family,
        "weight": r.weight,
        "params": dict(r.params),
        "element": poly_to_obj(r.element),
    }


def _cmd_relations(args, fmt):
    rels = relations.generate(args.weight, _families(args.families))
    if fmt == "json":
        return [json.dumps(_relation_obj(r), sort_keys=True) for r in rels], 0
    return [f"{r.label()}: {format_poly(r.element)}" for r in rels], 0


def _cmd_rank(args, fmt):
    report = relations.rank_report(args.weight, _families(args.families))
    if fmt == "json":
        return [json.dumps(report.to_obj(), sort_keys=True)], 0
    lines = [f"weight {report.weight}: basis size {len(report.basis)}"]
    for fam, rk in report.family_ranks.items():
        lines.append(f"  {fam}: rank {rk} ({report.relation_counts[fam]} relations)")
    lines.append(f"  union rank {report.cumulative_rank}, nullity {report.nullity}")
    return lines, 0


def _cmd_verify(args, fmt):
    rels = relations.generate(args.weight, _families(args.families))
    reports = numerics.verify(rels, cutoff=args.cutoff, slack=args.slack, digits=args.precision)
    lines = []
    ok = True
    for rep in reports:
        ok = ok and rep.passed
        if fmt == "json":
            lines.append(json.dumps(rep.to_obj(), sort_keys=True))
        else:
            status = "pass" if rep.passed else "FAIL"
            lines.append(
                f"{status} {rep.relation} residual={rep.residual:.3e} threshold={rep.threshold:.3e}"
            )
    return lines, 0 if ok else 1


def _cmd_eval(args, fmt):
    c = parse_composition(args.composition)
    r = numerics.mzv_eval(c, cutoff=args.cutoff, digits=args.precision)
    if fmt == "json":
        return [
            json.dumps(
                {
                    "composition": list(c),
                    "value": str(r.value),
                    "cutoff": r.truncation,
                    "tail_bound": r.tail_bound,
                },
                sort_keys=True,
            )
        ], 0
    return [f"{format_composition(c)} = {r.value}  (cutoff {r.truncation}, tail <= {r.tail_bound:.3e})"], 0


def build_parser() -> argparse.ArgumentParser:
    default_digits = int(os.environ.get("MZV_PRECISION", numerics.DEFAULT_DIGITS))
    top = argparse.ArgumentParser(prog="mzv", description=__doc__)
    top.add_argument("--format", choices=("text", "json"), default="text")
    top.add_argument("--out", default=None, help="write output to a file instead of stdout")
    # accepted before or after the subcommand; SUPPRESS keeps the subparser
    # from clobbering a value parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dual", parents=[common], help="dual of an admissible composition")
    p.add_argument("composition")

    for name in ("shuffle", "harmonic"):
        p = sub.add_parser(name, parents=[common], help=f"{name} product of two words")
        p.add_argument("u")
        p.add_argument("v")

    p = sub.add_parser("derive", parents=[common], help="apply a derivation or cyclic derivation")
    p.add_argument("--op", choices=("D", "Dbar", "Dn", "partial_n", "C", "Cbar"), required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("word")

    p = sub.add_parser("act", parents=[common], help="act by a quasi-symmetric element on a word")
    p.add_argument("--elem", choices=("pn", "en", "hn", "word"), required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("words", nargs="+")

    p = sub.add_parser("series", parents=[common], help="truncated t-series applied to a word")
    p.add_argument("--op", choices=("sigma", "exp-partial", "phi"), required=True)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("word")

    p = sub.add_parser("relations", parents=[common], help="generate relation families at a weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--families", default="all")

    p = sub.add_parser("rank", parents=[common], help="exact ranks of relation spans at a weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--families", default="all")

    p = sub.add_parser("verify", parents=[common], help="numerically verify relation families")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--families", default="all")
    p.add_argument("--cutoff", type=int, default=numerics.DEFAULT_CUTOFF)
    p.add_argument("--precision", type=int, default=default_digits)
    p.add_argument("--slack", type=float, default=numerics.DEFAULT_SLACK)

    p = sub.add_parser("eval", parents=[common], help="evaluate one composition")
    p.add_argument("composition")
    p.add_argument("--cutoff", type=int, default=numerics.DEFAULT_CUTOFF)
    p.add_argument("--precision", type=int, default=default_digits)

    return top


_HANDLERS = {
    "dual": _cmd_dual,
    "shuffle": _cmd_product,
    "harmonic": _cmd_product,
    "derive": _cmd_derive,
    "act": _cmd_act,
    "series": _cmd_series,
    "relations": _cmd_relations,
    "rank": _cmd_rank,
    "verify": _cmd_verify,
    "eval": _cmd_eval,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines, code = _HANDLERS[args.command](args, args.format)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(lines, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
