"""Command-line front end.

Every command writes one JSON document holding the echoed command and
either a ``result`` or an ``error`` with a machine-readable code.  Exit
status is 0 on success, 2 on domain errors and 1 on input errors.
"""
import argparse
import os
import sys

from .classes import classify
from .decomposition import (
    cone_setup,
    core_ws,
    factor_cone,
    factor_nucleolus,
    factor_probabilistic,
    factor_selectope,
    factor_weber,
    linear_coordinates,
    marginal_games,
    max_decompose,
    solution_table,
    tau_cone,
    unanimity_basis,
)
from .errors import CoopError, DomainError, ParseError
from .game import coalition_label, restrict_additive, zero_normalize
from .generators import zero_normalized_rays
from .io import (
    allocation_to_json,
    dumps,
    format_coalition,
    format_rational,
    game_to_document,
    parse_game,
    parse_region,
    parse_weights,
    polytope_to_json,
    to_json,
)
from .polyhedra import point, vertices
from .solutions import (
    core_h,
    nucleolus,
    probabilistic_value,
    selectope,
    shapley,
    shapley_weights,
    weber,
)

CONCEPTS = ("core", "weber", "selectope", "shapley", "probabilistic", "nucleolus")
SCHEMES = ("zero-norm", "max", "linear", "cone", "marginal")
DIAGRAMS = ("probabilistic", "weber", "selectope", "nucleolus", "ws-core", "cone")
CONE_CLASSES = ("tm0", "supermodular0")
LP_BOUND = 8


def _coalitions_json(masks):
    return {"coalitions": [format_coalition(a) for a in masks]}


def _witness(name, w):
    """Readable witness: coalitions as ``"1,3"`` keys, players as indices."""
    if name == "weakly_superadditive":
        return {"coalition": format_coalition(w[0]), "player": w[1]}
    if name in ("monotone", "supermodular"):
        return _coalitions_json(w)
    if name == "zero_normalized":
        return {"player": w}
    if name == "zero_monotone":
        cond, inner = w
        return {"condition": cond, "detail": _witness(cond, inner)}
    if name == "balanced":
        if isinstance(w, dict):
            return {"balancing_weights": {format_coalition(a): format_rational(x) for a, x in w.items()}}
        return {"core_point": allocation_to_json(w)}
    if isinstance(w, str):
        return w
    return {"coalition": format_coalition(w)}


def report_to_json(report):
    out = {}
    for name, flag in report.as_dict().items():
        entry = {"holds": flag.holds}
        if flag.witness is not None:
            entry["witness"] = _witness(name, flag.witness)
        out[name] = entry
    return out


def _polytope_or_point(x):
    if hasattr(x, "vertices"):
        return {"polytope": polytope_to_json(x)}
    return {"allocation": allocation_to_json(x)}


def _tau_to_json(tau):
    if isinstance(tau, dict):
        return {k if isinstance(k, str) else _index_label(k): to_json(g) for k, g in tau.items()}
    return {"evaluated": len(tau.evaluated)}


def _index_label(k):
    if isinstance(k, tuple):
        return ",".join(map(str, k))
    return str(k)


def record_to_json(rec, tau_labels=None):
    tau = rec.tau_output
    if tau_labels is not None:
        tau = {tau_labels(k): g for k, g in tau.items()}
    return {
        "scheme": rec.scheme,
        "commutes": rec.commutes,
        "z_size": rec.z_size,
        "nontrivial": rec.nontrivial,
        "tau": _tau_to_json(tau),
        "alpha": _polytope_or_point(rec.alpha_output),
        "direct": _polytope_or_point(rec.direct_sigma),
    }


def _load_basis(directory, n):
    if directory is None:
        return unanimity_basis(n)
    try:
        names = sorted(f for f in os.listdir(directory) if f.endswith(".json"))
    except OSError as exc:
        raise ParseError(f"{directory}: {exc.strerror}") from None
    return [parse_game(os.path.join(directory, f)) for f in names]


def _weights(args, n):
    return parse_weights(args.weights) if args.weights else shapley_weights(n)


def _region(args):
    return parse_region(args.kset) if args.kset else None


def cmd_classify(args):
    v = parse_game(args.file)
    report = classify(v, lp=v.n <= LP_BOUND)
    return {"n": v.n, "classes": report_to_json(report), "chain_holds": report.chain_holds()}


def cmd_solve(args):
    v = parse_game(args.file)
    c = args.concept
    if c == "core":
        return _polytope_or_point(vertices(core_h(v)))
    if c == "weber":
        return _polytope_or_point(weber(v))
    if c == "selectope":
        return _polytope_or_point(selectope(v))
    if c == "shapley":
        return _polytope_or_point(shapley(v))
    if c == "probabilistic":
        return _polytope_or_point(probabilistic_value(v, _weights(args, v.n)))
    return _polytope_or_point(nucleolus(v, _region(args)))


def cmd_decompose(args):
    v = parse_game(args.file)
    s = args.scheme
    if s == "zero-norm":
        hat, additive = zero_normalize(v)
        return {"zero_normalized": game_to_document(hat), "additive": allocation_to_json(restrict_additive(additive))}
    if s == "max":
        return {coalition_label(b).strip("{}"): game_to_document(g) for b, g in max_decompose(v).items()}
    if s == "linear":
        basis = _load_basis(args.basis, v.n)
        coords = linear_coordinates(v, basis)
        return {"basis": [game_to_document(g) for g in basis], "coordinates": [format_rational(c) for c in coords]}
    if s == "cone":
        setup = cone_setup(args.cone, v.n)
        hat, additive = zero_normalize(v)
        tau, gens = tau_cone(v, setup.cone_h, setup.fan)
        return {
            "generators": [game_to_document(g) for g in gens],
            "cells": [list(c) for c in setup.fan.cells],
            "parts": [game_to_document(tau[i]) for i in range(1, len(gens) + 1)],
            "additive": allocation_to_json(restrict_additive(additive)),
        }
    return {str(i): to_json(g) for i, g in marginal_games(v).items()}


def cmd_verify(args):
    v = parse_game(args.file)
    d = args.diagram
    if d == "probabilistic":
        return record_to_json(factor_probabilistic(v, _weights(args, v.n)))
    if d == "weber":
        return record_to_json(factor_weber(v))
    if d == "selectope":
        return record_to_json(factor_selectope(v))
    if d == "nucleolus":
        return record_to_json(factor_nucleolus(v, _region(args)))
    if d == "ws-core":
        return record_to_json(core_ws(v), lambda b: "" if b == 0 else format_coalition(b))
    setup = cone_setup(args.cone, v.n)
    table = solution_table(setup.generators, shapley)
    rec = factor_cone(
        v, setup.cone_h, setup.fan, table, lambda w: point(restrict_additive(w)), shapley
    )
    return record_to_json(rec)


def cmd_rays(args):
    rays = zero_normalized_rays(args.cls, args.n)
    return {"class": args.cls, "n": args.n, "count": len(rays), "generators": [game_to_document(g) for g in rays]}


def build_parser():
    p = argparse.ArgumentParser(prog="coopdecomp", description="Exact computations on cooperative games.")
    p.add_argument("--output", help="write the result document here instead of standard output")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="membership in every game class")
    c.add_argument("file")
    c.set_defaults(run=cmd_classify)

    c = sub.add_parser("solve", parents=[common], help="compute a solution concept")
    c.add_argument("--concept", required=True, choices=CONCEPTS)
    c.add_argument("--weights", help="probabilistic weights file (default: Shapley weights)")
    c.add_argument("--kset", help="H-polytope K for the nucleolus (default: imputation set)")
    c.add_argument("file")
    c.set_defaults(run=cmd_solve)

    c = sub.add_parser("decompose", parents=[common], help="split a game into elementary pieces")
    c.add_argument("--scheme", required=True, choices=SCHEMES)
    c.add_argument("--basis", help="directory of basis game files (default: unanimity games)")
    c.add_argument("--cone", default="supermodular0", choices=CONE_CLASSES)
    c.add_argument("file")
    c.set_defaults(run=cmd_decompose)

    c = sub.add_parser("verify", parents=[common], help="check that a factorization diagram commutes")
    c.add_argument("--diagram", required=True, choices=DIAGRAMS)
    c.add_argument("--weights")
    c.add_argument("--kset")
    c.add_argument("--cone", default="supermodular0", choices=CONE_CLASSES)
    c.add_argument("file")
    c.set_defaults(run=cmd_verify)

    c = sub.add_parser("rays", parents=[common], help="extreme rays of a zero-normalized cone")
    c.add_argument("--class", dest="cls", required=True, choices=CONE_CLASSES)
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(run=cmd_rays)
    return p


def _echo(args):
    return {k: v for k, v in vars(args).items() if k not in ("run", "output") and v is not None}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    echo = _echo(args)
    code = 0
    try:
        doc = {"command": echo, "result": args.run(args)}
    except CoopError as exc:
        code = 2 if isinstance(exc, DomainError) else 1
        doc = {"command": echo, "error": {"code": exc.code, "message": str(exc)}}
        witness = getattr(exc, "witness", None)
        if witness is not None:
            doc["error"]["witness"] = to_json(witness)
    text = dumps(doc)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"{args.output}: {exc.strerror}\n")
            return 1
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
