"""Shared helpers for the test suite: golden-file loading and graph comparison."""

import json
from fractions import Fraction
from pathlib import Path

from affinepm import particles
from affinepm.cartan import build_affine_data
from affinepm.cli import build_graph, make_parser
from affinepm.laurent import LaurentPoly, RationalFunction

GOLDEN = Path(__file__).parent / "golden"


def load_golden(name):
    return json.loads((GOLDEN / name).read_text())


def build_from_golden(spec):
    b = spec["build"]
    argv = ["build", "--type", b["type"], "--graph", b["graph"]]
    if b.get("rank") is not None:
        argv += ["--rank", str(b["rank"])]
    for key in ("weights", "lattice", "domain"):
        if key in b:
            argv += [f"--{key}", b[key]]
    args = make_parser().parse_args(argv)
    data = build_affine_data(b["type"], b.get("rank"))
    return data, build_graph(data, args)


def vertex_keys(data, G, key):
    if key == "window":
        return [",".join(map(str, particles.windowC_of(data, w).window)) for w in G.meta["elements"]]
    return list(G.vertices)


def edge_table(spec):
    """(data, built edges, golden edges) as sorted lists of comparable tuples."""
    data, G = build_from_golden(spec)
    keys = vertex_keys(data, G, spec.get("vertex_key"))
    untyped = spec.get("untyped", False)
    built = sorted(
        (keys[e.src], keys[e.dst], None if untyped else e.type, G.fmt(e.weight)) for e in G.edges
    )
    golden = sorted(tuple(e) for e in spec["edges"])
    return keys, built, golden



# the six-vertex example used to illustrate path matrices
NV = 3
z1, z2, z3 = (LaurentPoly.var(i, NV) for i in range(NV))
one = LaurentPoly.constant(1, NV)
half = Fraction(1, 2)


def rf(num, den=None):
    return RationalFunction(num, den)


A_EXAMPLE = [
    [0, 0, z1, z3, z2, 0],
    [1, 0, 0, 0, 0, z2],
    [0, 1, 0, 0, 0, z3],
    [0, 1, 0, 0, 0, z1],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
]

M1_PRINTED = [
    [1, 0, 0, z1 + z3, 2 * z2, 0],
    [0, 1, 0, 0, z1 + z3, 4 * z2],
    [0, 0, 1, 0, 0, z1 + 3 * z3],
    [0, 0, 1, 0, 0, 3 * z1 + z3],
    [0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, 2, 0],
]

d13 = z1 - z3
M1_INV_PRINTED = [
    [1, 0, 0, 0, rf(-(z1 + z3) * half), rf(-z2)],
    [0, 1, rf(2 * z2, d13), rf(2 * z2, -d13), 0, rf(-(z1 + z3) * half)],
    [0, 0, rf(3 * z1 + z3, 2 * d13), rf(z1 + 3 * z3, -2 * d13), 0, 0],
    [0, 0, 0, 0, Fraction(1, 2), 0],
    [0, 0, 0, 0, 0, Fraction(1, 2)],
    [0, 0, rf(-one, 2 * d13), rf(-one, -2 * d13), 0, 0],
]

B3_PRINTED = [
    [0, z1, z2, 0, 0, z1 * z3],
    [0, 0, z1, 0, z2, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, z1, z2],
    [0, 1, 0, 0, 0, z1],
    [0, 0, 0, 1, 0, 0],
]
