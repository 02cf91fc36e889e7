"""Command line entry point: ``teter <subcommand> ...`` (or ``python3 -m teter``).

Exit status: 0 on success, 1 on domain errors (a JSON error record goes to
stdout) or selfcheck disagreements, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import families, simplicial
from .homs import (
    are_companions,
    is_symmetric,
    teter_number_multigraded,
    teter_type_multigraded,
    trace_members,
    trace_multigraded,
)
from .linalg import DEFAULT_PRIME, DEFAULT_TRIALS, teter_type_randomized
from .monomial import format_monomial, minimalize, parse_ideal
from .poset import build_divisor_poset, ideal_view, poset_to_json, to_dot


class DomainError(ValueError):
    pass


# input helpers


def load_ideal(source: str, names=None):
    """File path (JSON record or expression) or an inline expression."""
    if os.path.exists(source):
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read {source}: {exc}") from None
    elif source.endswith(".json"):
        raise DomainError(f"no such file: {source}")
    else:
        text = source
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"bad JSON in {source}: {exc}") from None
        return parse_ideal(data)
    return parse_ideal(text, names)


def load_json(source: str) -> dict:
    try:
        if os.path.exists(source):
            with open(source) as fh:
                return json.load(fh)
        return json.loads(source)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot load JSON from {source!r}: {exc}") from None


def int_list(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def gens_in(P, text: str):
    """Parse a generator list like 'x, y^2' in the variables of P."""
    ideal = parse_ideal(text, P.names)
    return list(ideal.generators)


def _mono_list(P, gens):
    return [P.fmt(g) for g in gens]


# subcommands


def cmd_trace(args):
    P = build_divisor_poset(load_ideal(args.source, args.vars))
    report = trace_multigraded(P)
    data = report.to_dict()
    data["vars"] = list(P.names)
    if args.format == "text":
        lines = [
            f"ring: S/{P.ideal}  (dim {len(P)})",
            f"trace: {report.trace}",
            f"gorenstein: {report.gorenstein}",
            f"nearly gorenstein: {report.nearly_gorenstein}",
            f"teter type (multigraded): {report.teter_type_multigraded}"
            + (f" via degree {list(report.witness_degree)}" if report.witness_degree else ""),
            f"multigraded teter number: {report.teter_number_multigraded}",
        ]
        return data, "\n".join(lines)
    return data, None


def cmd_teter_type(args):
    P = build_divisor_poset(load_ideal(args.source, args.vars))
    if args.sense == "multi":
        verdict, witness = teter_type_multigraded(P)
        data = {"sense": "multigraded", "verdict": verdict, "witness_degree": list(witness) if witness else None}
    else:
        sense = "graded" if args.sense == "graded" else "local"
        data = teter_type_randomized(P, sense, args.prime, args.trials, args.seed).to_dict()
    return data, None


def cmd_teter_number(args):
    P = build_divisor_poset(load_ideal(args.source, args.vars))
    result = teter_number_multigraded(P)
    if result is None:
        data = {"teter_number_multigraded": None, "status": "not computed", "witness_degrees": None}
    else:
        data = {"teter_number_multigraded": result[0], "witness_degrees": [list(m) for m in result[1]]}
    return data, None


def cmd_poset(args):
    P = build_divisor_poset(load_ideal(args.source, args.vars))
    view = ideal_view(P, gens_in(P, args.highlight)) if args.highlight else None
    if args.dot or args.format == "dot":
        return None, to_dot(P, view).rstrip("\n")
    data = poset_to_json(P)
    data["vars"] = list(P.names)
    data["socle"] = [list(s) for s in P.socle]
    return data, None


def cmd_symmetric(args):
    P = build_divisor_poset(load_ideal(args.source, args.vars))
    V = ideal_view(P, gens_in(P, args.gens))
    m = is_symmetric(P, V)
    data = {
        "gen": [list(g) for g in V.gen],
        "soc": [list(s) for s in V.soc],
        "symmetric_degree": list(m) if m is not None else None,
    }
    if args.format == "text":
        text = f"Gen {_mono_list(P, V.gen)}  Soc {_mono_list(P, V.soc)}  " + (
            f"symmetric via {format_monomial(m, P.names)}" if m is not None else "not symmetric")
        return data, text
    return data, None


def cmd_companion(args):
    P = build_divisor_poset(load_ideal(args.source, args.vars))
    V1 = ideal_view(P, gens_in(P, args.i))
    V2 = ideal_view(P, gens_in(P, args.j))
    m = are_companions(P, V1, V2)
    union = is_symmetric(P, V1.union(V2)) if m is not None else None
    data = {
        "companion_degree": list(m) if m is not None else None,
        "union_symmetric_degree": list(union) if union is not None else None,
    }
    return data, None


def _engine_sets(ideal):
    P = build_divisor_poset(ideal)
    soc = sorted(tuple(sorted(simplicial.monomial_face(u))) for u in P.socle)
    gens = sorted(tuple(sorted(simplicial.monomial_face(u))) for u in minimalize(trace_members(P)))
    return soc, gens, P


def cmd_family(args):
    fam = args.family
    verify = args.verify
    if fam == "aci":
        return families.aci_report(_need(args.a, "--a"), _need(args.b, "--b"), verify).to_dict(), None
    if fam == "power-quotient":
        return families.power_quotient_report(_need(args.a, "--a"), _need(args.k, "--k"), verify).to_dict(), None
    if fam == "chopin":
        return families.chopin_report(_need(args.a, "--a"), _need(args.k, "--k"), verify).to_dict(), None
    if fam == "mozart":
        return families.mozart_report(_need(args.n, "--n"), _need(args.k, "--k"), verify).to_dict(), None
    if fam == "ci2":
        a, b = _need(args.a, "--a"), _need(args.b, "--b")
        if len(a) != 1 or len(b) != 1:
            raise DomainError("ci2 takes single integers for --a and --b")
        return families.ci2_report(a[0], b[0], _need(args.k, "--k"), verify).to_dict(), None
    if fam == "beethoven":
        return families.beethoven_report(_need(args.n, "--n"), _need(args.w0, "--w0"), verify).to_dict(), None
    if fam == "flag":
        return _family_flag(args), None
    if fam == "path":
        return _family_path(args), None
    if fam == "cycle":
        return _family_cycle(args), None
    if fam == "lattice":
        return _family_lattice(args), None
    raise DomainError(f"unknown family {fam}")


def _need(value, flag):
    if value is None:
        raise DomainError(f"this family needs {flag}")
    return value


def _family_flag(args):
    if args.complex:
        delta = simplicial.complex_from_dict(load_json(args.complex))
    else:
        facets = [int_list(f) for f in _need(args.facets, "--complex or --facets").split(";")]
        delta = simplicial.complex_from_facets(_need(args.n, "--n"), facets)
    gens = simplicial.flag_trace_gens(delta)
    data = {
        "family": "flag",
        "complex": delta.to_dict(),
        "trace_generators": [list(g) for g in gens],
        "minimal_free_faces": [sorted(F) for F in simplicial.minimal_free_faces(delta)],
        "verified": None,
    }
    if args.verify:
        P = build_divisor_poset(simplicial.kdelta_ideal(delta))
        data["verified"] = set(minimalize(trace_members(P))) == set(gens)
        data["teter_type"] = teter_type_multigraded(P)[0] == "yes"
    return data


def _family_path(args):
    n = _need(args.n, "--n")
    permissible, tau = simplicial.path_sequences(n)
    data = {"family": "path", "n": n, "permissible": [list(s) for s in permissible],
            "tau_permissible": [list(s) for s in tau], "verified": None}
    if args.verify:
        soc, gens, _ = _engine_sets(simplicial.kdelta_ideal(simplicial.independence_complex(simplicial.path_graph(n), n)))
        data["verified"] = soc == sorted(permissible) and gens == sorted(tau)
    return data


def _family_cycle(args):
    n = _need(args.n, "--n")
    socle, gens = simplicial.cycle_sequences(n)
    data = {"family": "cycle", "n": n, "socle_sets": [list(s) for s in socle],
            "trace_gen_sets": [list(s) for s in gens], "verified": None}
    if args.verify:
        soc, tr, _ = _engine_sets(simplicial.kdelta_ideal(simplicial.independence_complex(simplicial.cycle_graph(n), n)))
        data["verified"] = soc == sorted(socle) and tr == sorted(gens)
    return data


def _family_lattice(args):
    P0 = simplicial.poset_from_dict(load_json(args.poset)) if args.poset else simplicial.POSETLL
    info = simplicial.distributive_data(P0)
    names = info.complex.vertex_names()
    data = {
        "family": "lattice",
        "poset": P0.to_dict(),
        "lattice_size": len(info.lattice),
        "linear_extensions": [list(pi) for pi in info.extensions],
        "c_sharp": [[list(a) for a in chain] for chain in info.sharp_chains],
        "trace_generators": [[names[i] for i, e in enumerate(g) if e] for g in info.trace_gens],
        "verified": None,
    }
    if args.verify:
        P = build_divisor_poset(info.ideal())
        trace_ok = set(minimalize(info.trace_gens)) == set(minimalize(trace_members(P)))
        views = [ideal_view(P, [low]) for low, _ in simplicial.interval_decomposition(P0)]
        disjoint = all(not (a.members & b.members) for k, a in enumerate(views) for b in views[k + 1:])
        symmetric = all(is_symmetric(P, v) is not None for v in views)
        data["verified"] = trace_ok and disjoint and symmetric
        data["intervals_disjoint"] = disjoint
        data["intervals_symmetric"] = symmetric
    return data


def cmd_probe(args):
    spec = families.PowerQuotientSpec(_need(args.a, "--a"), _need(args.k, "--k"))
    return families.conjecture_probe(spec).to_dict(), None


def cmd_selfcheck(args):
    from .selfcheck import run_selfcheck

    report = run_selfcheck(args.samples, args.max_vars, args.max_exp, args.seed, args.prime)
    return report.to_dict(), None


# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="teter", description="Canonical traces and Teter type of Artinian monomial algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")
    common.add_argument("-o", "--output", help="also write the artifact to this path")

    ring = argparse.ArgumentParser(add_help=False)
    ring.add_argument("source", help="ideal file (JSON record or expression) or an inline expression")
    ring.add_argument("--vars", type=lambda s: [v.strip() for v in s.split(",")], help="variable order, e.g. x,y")

    p = sub.add_parser("trace", parents=[common, ring], help="multigraded trace report")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("teter-type", parents=[common, ring], help="Teter type in one sense")
    p.add_argument("--sense", choices=("multi", "graded", "local"), default="multi")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_teter_type)

    p = sub.add_parser("teter-number", parents=[common, ring], help="multigraded Teter number")
    p.set_defaults(func=cmd_teter_number)

    p = sub.add_parser("poset", parents=[common, ring], help="divisor poset as JSON or DOT")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--highlight", help="generators of a poset ideal to highlight")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("symmetric", parents=[common, ring], help="is the poset ideal symmetric?")
    p.add_argument("--gens", required=True)
    p.set_defaults(func=cmd_symmetric)

    p = sub.add_parser("companion", parents=[common, ring], help="are two poset ideals companions?")
    p.add_argument("--i", required=True)
    p.add_argument("--j", required=True)
    p.set_defaults(func=cmd_companion)

    p = sub.add_parser("family", parents=[common], help="closed-form family traces")
    p.add_argument("family", choices=("aci", "power-quotient", "chopin", "mozart", "ci2", "beethoven",
                                      "flag", "path", "cycle", "lattice"))
    p.add_argument("--a", type=int_list)
    p.add_argument("--b", type=int_list)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--w0", type=int_list, help="squarefree exponent vector")
    p.add_argument("--complex", help="complex JSON file or literal")
    p.add_argument("--facets", help="facets like '1,2,3;3,4' (with --n)")
    p.add_argument("--poset", help="poset JSON file or literal (default: the four-element example)")
    p.add_argument("--verify", action="store_true", help="cross-check against the engine")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("probe-conjecture", parents=[common], help="compare the engine with the level ideal I_k")
    p.add_argument("--a", type=int_list, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("selfcheck", parents=[common], help="differential fuzzing against the oracles")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--max-vars", type=int, default=3)
    p.add_argument("--max-exp", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def _render(data, text, fmt):
    if text is not None and fmt in ("text", "dot"):
        return text
    if data is None:
        return text
    if fmt == "text":
        return "\n".join(f"{k}: {json.dumps(v)}" for k, v in data.items())
    return dump_json(data)


def dump_json(data: dict) -> str:
    """One top-level key per line, values kept compact."""
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in data.items())
    return "{\n" + body + "\n}"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, text = args.func(args)
    except ValueError as exc:
        record = {"error": str(exc), "kind": type(exc).__name__, "command": args.command}
        print(json.dumps(record))
        return 1
    out = _render(data, text, args.format)
    print(out)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    if args.command == "selfcheck" and not data["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
