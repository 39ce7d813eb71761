"""Command line front end: build, verify, accept, structure-constants, convert.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import csv
import io
import json
import sys

from . import affine as aff
from . import gamma as gm
from . import particles as pt
from .cartan import UnsupportedType, build_affine_data
from .pmgraph import (
    graph_from_json,
    graph_from_matrix,
    graph_to_csv,
    graph_to_dot,
    graph_to_json,
    multiplicative_basis_at,
    path_matrix,
    typed_isomorphic,
)


class UsageError(Exception):
    pass


GRAPHS = ("rho", "gamma", "b0", "wj", "fundamental", "grassmannian", "particle", "keys")
SUITES = ("main-theorem", "pieri", "expansion", "uj", "isomorphism", "certificate", "automaton", "dihedral-counterexample")


def _data(args):
    if args.type is None:
        raise UsageError("--type is required")
    try:
        return build_affine_data(args.type, args.rank)
    except UnsupportedType as exc:
        raise UsageError(str(exc))


def _weights(data, spec):
    """'rho' or None -> all of I*; '2' or '1,3' -> that J'."""
    if spec in (None, "rho"):
        return list(range(1, data.rank + 1))
    if spec == "Lambda0":
        raise UsageError("Lambda0 is only meaningful for --mode grassmannian")
    try:
        Jp = sorted({int(x) for x in spec.split(",")})
    except ValueError:
        raise UsageError(f"bad weight spec {spec!r}")
    if not Jp or Jp[0] < 1 or Jp[-1] > data.rank:
        raise UsageError(f"weights must lie in 1..{data.rank}")
    return Jp


def _lattice(text):
    try:
        return [tuple(int(x) for x in part.split(",")) for part in text.split(";")]
    except ValueError:
        raise UsageError(f"bad lattice basis {text!r}")


def _domain(data, text):
    out = []
    for w in text.split(","):
        w = w.strip()
        out.append(aff.identity(data) if w == "e" else aff.parse_word(data, w))
    return out


def build_graph(data, args):
    kind = args.graph
    if kind == "rho":
        return gm.build_gamma_rho(data)
    if kind == "gamma":
        return gm.build_gamma_gamma(data, _weights(data, args.weights))
    if kind == "b0":
        return gm.build_gamma_B0(data)
    if kind == "wj":
        return gm.build_gamma_WJ_geometric(data, _weights(data, args.weights))
    if kind == "fundamental":
        if not args.lattice or not args.domain:
            raise UsageError("--graph fundamental needs --lattice and --domain")
        try:
            return gm.build_gamma_fundamental(data, _lattice(args.lattice), _domain(data, args.domain))
        except gm.DomainError as exc:
            raise UsageError(f"invalid fundamental domain: {exc}")
    if kind == "grassmannian":
        return gm.build_grassmannian_graph(data, args.max_length)
    if kind == "particle":
        return pt.build_particle_graph(data, _weights(data, args.weights))
    if kind == "keys":
        return pt.key_orbit_graph(data, _weights(data, args.weights))
    raise UsageError(f"unknown graph {kind!r}")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(G, fmt):
    if fmt == "json":
        return graph_to_json(G)
    if fmt == "dot":
        return graph_to_dot(G)
    if fmt == "csv":
        return graph_to_csv(G)
    raise UsageError(f"unknown format {fmt!r}")


def cmd_build(args):
    data = _data(args)
    _emit(_render(build_graph(data, args), args.format), args.out)
    return 0


def cmd_convert(args):
    try:
        with open(args.input) as fh:
            G = graph_from_json(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read graph: {exc}")
    _emit(_render(G, args.format), args.out)
    return 0


def _report(name, ok, details=None, counterexample=None):
    out = {"suite": name, "ok": bool(ok)}
    if details:
        out["details"] = details
    if counterexample is not None:
        out["counterexample"] = counterexample
    return out


def _plain(x):
    return json.loads(json.dumps(x, default=str))


def dihedral_suite():
    """The weighted dihedral automaton must not certify as positively multiplicative."""
    rows = []
    for a, b, c, d in ((2, 1, 1, 1), (1, 2, 1, 1)):
        G = graph_from_matrix([[0, 0, 0], [a, 0, d], [b, c, 0]], 0)
        cert = multiplicative_basis_at(G, 0)
        Minv = path_matrix(G, 0).inverse()
        rows.append(
            {
                "abcd": [a, b, c, d],
                "verdict": cert.verdict,
                "M_inverse": [[str(Minv[i, j]) for j in range(3)] for i in range(3)],
                "negative_constants": [list(k) for k in cert.offending],
            }
        )
    ok = all(r["verdict"] != "positively_multiplicative" for r in rows)
    return _report("dihedral-counterexample", ok, {"expected": "not positively multiplicative", "cases": rows})


def cmd_verify(args):
    suite = args.suite
    if suite == "dihedral-counterexample":
        rep = dihedral_suite()
    else:
        data = _data(args)
        if suite == "main-theorem":
            r = gm.verify_main_theorem(data, _weights(data, args.weights), certify=not args.no_certify)
            details = {k: v for k, v in r.details.items() if k != "certificate"}
            rep = _report(r.name, r.ok, _plain(details), _plain(r.mismatches[0]) if r.mismatches else None)
        elif suite == "pieri":
            r = gm.verify_pieri(data, args.max_length)
            rep = _report(r.name, r.ok, r.details, _plain(r.mismatches[0]) if r.mismatches else None)
        elif suite == "expansion":
            r = gm.verify_expansion(data, args.depth)
            rep = _report(r.name, r.ok, {"depth": args.depth}, _plain(r.mismatches[0]) if r.mismatches else None)
        elif suite == "uj":
            r = gm.verify_UJ(data, _weights(data, args.weights), args.bound)
            rep = _report(r.name, r.ok, r.details, _plain(r.mismatches[0]) if r.mismatches else None)
        elif suite == "isomorphism":
            Jp = _weights(data, args.weights)
            G = gm.build_gamma_gamma(data, Jp)
            problems = pt.particle_isomorphism(data, Jp, G)
            details = {"vertices": len(G), "particle": not problems}
            if data.type_label == "A":
                ok_keys, _ = typed_isomorphic(pt.forget_weights(G), pt.key_orbit_graph(data, Jp))
                details["key_tableaux"] = ok_keys
                problems = problems or ([] if ok_keys else [("key tableau orbit graph differs",)])
            rep = _report(f"isomorphism {data.name} J'={Jp}", not problems, details, _plain(problems[0]) if problems else None)
        elif suite == "certificate":
            G = build_graph(data, args)
            cert = multiplicative_basis_at(G, 0)
            rep = _report(
                f"certificate {G.kind}",
                cert.positive,
                {"verdict": cert.verdict, "method": cert.method, "vertices": len(G), "reason": cert.reason},
                _plain(cert.offending[0]) if cert.offending else None,
            )
        elif suite == "automaton":
            L = args.max_length
            Jp = None if args.weights in (None, "rho") else _weights(data, args.weights)
            got = gm.enumerate_reduced(data, L, Jp)
            want = gm.reduced_word_counts_oracle(data, L, Jp)
            rep = _report(f"automaton {data.name}", got == want, {"accepted": got, "oracle": want})
        else:
            raise UsageError(f"unknown suite {suite!r}")
    _emit(json.dumps(rep, indent=2) + "\n", args.out)
    return 0 if rep["ok"] else 1


def cmd_accept(args):
    data = _data(args)
    letters = list(args.letters)
    if any(not 0 <= i <= data.rank for i in letters):
        raise UsageError(f"letters must lie in 0..{data.rank}")
    if args.reading == "written":
        letters = letters[::-1]
    Jp = None
    if args.mode == "gamma":
        Jp = _weights(data, args.weights)
    ok = gm.automaton_accepts(data, letters, Jp)
    _emit(("true" if ok else "false") + "\n", args.out)
    return 0


def cmd_structure_constants(args):
    data = _data(args)
    kw = {}
    kind = {"b0": "B0", "wj": "WJ"}.get(args.kind, args.kind)
    if kind == "fundamental":
        if not args.lattice or not args.domain:
            raise UsageError("--kind fundamental needs --lattice and --domain")
        kw = {"lattice_basis": _lattice(args.lattice), "domain": _domain(data, args.domain)}
    elif kind == "WJ":
        kw = {"Jprime": _weights(data, args.weights)}
    G, cert, table = gm.structure_constants(data, kind, **kw)
    rows = [
        {"left": j, "right": k, "result": i, "coefficient": G.fmt(c) if hasattr(c, "terms") else str(c)}
        for (j, k, i), c in sorted(table.items(), key=lambda kv: tuple(G.vertices.index(x) for x in kv[0]))
    ]
    legend = {name: meaning for name, meaning in G.legend}
    if args.format == "json":
        text = json.dumps({"verdict": cert.verdict, "legend": legend, "constants": rows}, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["left", "right", "result", "coefficient"])
        for r in rows:
            w.writerow([r["left"], r["right"], r["result"], r["coefficient"]])
        w.writerow([])
        for name, meaning in legend.items():
            w.writerow(["#", name, meaning])
        text = buf.getvalue()
    else:
        raise UsageError(f"unknown format {args.format!r}")
    _emit(text, args.out)
    return 0 if cert.positive else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p):
    p.add_argument("--type", help="A, B, C, D or G2 (A2, C3 ... also accepted)")
    p.add_argument("--rank", type=int)
    p.add_argument("--weights", help="'rho', or comma-separated indices of J'")
    p.add_argument("--out", help="write to this file instead of stdout")


def make_parser():
    parser = _Parser(prog="affinepm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    b = sub.add_parser("build", help="build a graph and serialize it")
    _common(b)
    b.add_argument("--graph", choices=GRAPHS, default="rho")
    b.add_argument("--lattice", help="basis of L in fundamental-weight coordinates, e.g. '1,0;0,2'")
    b.add_argument("--domain", help="comma-separated reduced words, e.g. 'e,0,10,210'")
    b.add_argument("--max-length", type=int, default=6)
    b.add_argument("--format", choices=("json", "dot", "csv"), default="json")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run a verification suite")
    _common(v)
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--graph", choices=GRAPHS, default="b0")
    v.add_argument("--lattice")
    v.add_argument("--domain")
    v.add_argument("--max-length", type=int, default=8)
    v.add_argument("--depth", type=int, default=6)
    v.add_argument("--bound", type=int, default=4)
    v.add_argument("--no-certify", action="store_true")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("accept", help="run a word through the reduced-word automaton")
    _common(a)
    a.add_argument("--mode", choices=("grassmannian", "gamma"), default="grassmannian")
    a.add_argument(
        "--reading",
        choices=("automaton", "written"),
        default="automaton",
        help="automaton: letters in the order the automaton reads them (rightmost generator first); "
        "written: letters as the product s_i1 ... s_iN is written",
    )
    a.add_argument("letters", nargs="*", type=int)
    a.set_defaults(func=cmd_accept)

    s = sub.add_parser("structure-constants", help="structure constants of a positive basis")
    _common(s)
    s.add_argument("--kind", choices=("b0", "fundamental", "wj"), default="b0")
    s.add_argument("--lattice")
    s.add_argument("--domain")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_structure_constants)

    c = sub.add_parser("convert", help="re-serialize a JSON graph")
    c.add_argument("input")
    c.add_argument("--format", choices=("json", "dot", "csv"), default="json")
    c.add_argument("--out")
    c.set_defaults(func=cmd_convert)
    return parser


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a command is required")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"affinepm: error: {exc}\n")
        sys.stderr.write(parser.format_usage())
        return 2


if __name__ == "__main__":
    sys.exit(main())
