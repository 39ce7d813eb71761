"""Weighted digraphs, path matrices and positive-multiplicativity certificates.

A graph on vertices v_1..v_n has adjacency matrix A with A[i][j] the sum of the
weights of the arrows v_j -> v_i.  The graph is multiplicative at v_{i0} when the
Krylov matrix M_{i0} = [e_{i0}, A e_{i0}, ..., A^{n-1} e_{i0}] is invertible; the
basis is then b_i = sum_m (M_{i0}^{-1})[m][i] A^m, so that b_i e_{i0} = e_i and
the structure constants are c_{jk}^i = b_j[i][k].
"""

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np

from .laurent import (
    FFMatrix,
    LaurentPoly,
    NotDivisible,
    RationalFunction,
    Singular,
    minimal_polynomial,
)


@dataclass
class Edge:
    src: int
    dst: int
    type: object
    weight: LaurentPoly


@dataclass
class WeightedDigraph:
    vertices: list
    edges: list
    nvars: int
    words: list = None
    legend: list = None
    kind: str = ""
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.words is None:
            self.words = list(self.vertices)
        if self.legend is None:
            self.legend = [(f"z{i + 1}", f"z{i + 1}") for i in range(self.nvars)]
        for e in self.edges:
            if not e.weight or not e.weight.is_nonnegative():
                raise ValueError("edge weights must be nonzero with positive coefficients")

    def __len__(self):
        return len(self.vertices)

    @property
    def var_names(self):
        return [name for name, _ in self.legend]

    def fmt(self, poly):
        return poly.format(self.var_names)

    def index(self, label):
        return self.vertices.index(label)

    def adjacency(self):
        n = len(self.vertices)
        zero = LaurentPoly.constant(0, self.nvars)
        a = [[zero] * n for _ in range(n)]
        for e in self.edges:
            a[e.dst][e.src] = a[e.dst][e.src] + e.weight
        return a

    def adjacency_ff(self):
        return FFMatrix(self.adjacency(), self.nvars)

    def out_edges(self):
        out = [[] for _ in self.vertices]
        for e in self.edges:
            out[e.src].append(e)
        return out

    def edge_set(self):
        """Multiset of (src label, dst label, type, weight) used by golden tests."""
        return sorted(
            (self.vertices[e.src], self.vertices[e.dst], e.type, tuple(sorted(e.weight.terms.items())))
            for e in self.edges
        )

    def split_weights(self):
        """Copy in which every edge carries a single monomial."""
        edges = []
        for e in self.edges:
            for exps in sorted(e.weight.terms):
                edges.append(Edge(e.src, e.dst, e.type, LaurentPoly.monomial(exps, e.weight.terms[exps])))
        return WeightedDigraph(list(self.vertices), edges, self.nvars, list(self.words), list(self.legend), self.kind, dict(self.meta))


# path matrices


def path_matrix(G, k, A=None):
    """M_k: column m is A^m e_k, i.e. total weights of length-m paths from v_k."""
    n = len(G)
    if A is None:
        A = G.adjacency()
    zero = LaurentPoly.constant(0, G.nvars)
    col = [zero] * n
    col[k] = LaurentPoly.constant(1, G.nvars)
    cols = [col]
    for _ in range(n - 1):
        prev = cols[-1]
        nxt = []
        for i in range(n):
            acc = zero
            for j in range(n):
                if A[i][j] and prev[j]:
                    acc = acc + A[i][j] * prev[j]
            nxt.append(acc)
        cols.append(nxt)
    return FFMatrix([[cols[m][i] for m in range(n)] for i in range(n)], G.nvars)


# certificates

POSITIVE = "positively_multiplicative"
NOT_POSITIVE = "multiplicative_not_positive"
NOT_MULTIPLICATIVE = "not_multiplicative"


@dataclass
class PMCertificate:
    base_vertex: int
    structure_constants: dict  # (j, k, i) -> LaurentPoly, nonzero entries only
    verdict: str
    n: int
    nvars: int
    reason: str = ""
    kernel: list = None
    min_poly_degree: int = None
    offending: list = field(default_factory=list)
    method: str = ""

    @property
    def basis(self):
        """b_1..b_n as FFMatrix objects (built on demand)."""
        if self.verdict == NOT_MULTIPLICATIVE:
            return None
        out = []
        for j in range(self.n):
            rows = [[0] * self.n for _ in range(self.n)]
            for k in range(self.n):
                for i in range(self.n):
                    c = self.structure_constants.get((j, k, i))
                    if c is not None:
                        rows[i][k] = c
            out.append(FFMatrix(rows, self.nvars))
        return out

    def constant(self, j, k, i):
        c = self.structure_constants.get((j, k, i))
        return c if c is not None else LaurentPoly.constant(0, self.nvars)

    @property
    def positive(self):
        return self.verdict == POSITIVE


def multiplicative_basis_at(G, i0=0, method="auto"):
    """Certify (positive) multiplicativity of G at vertex i0.

    ``exact``: invert M_{i0} over Q(z) and read off the basis.
    ``modular``: reconstruct the structure constants from evaluations modulo
    primes, then check b_{i0} = I and A b_j = sum_i A[i][j] b_i exactly in
    Q[z^{+-1}]; together with invertibility of M_{i0} these identities force the
    candidates to be the true basis, so the modular step is only a guess.
    """
    n = len(G)
    if method == "auto":
        method = "exact" if n <= 6 else "modular"
    if method == "exact":
        return _certify_exact(G, i0)
    return _certify_modular(G, i0)


def _certify_exact(G, i0):
    n, nv = len(G), G.nvars
    A = G.adjacency()
    M = path_matrix(G, i0, A)
    try:
        Minv = M.inverse()
    except Singular as exc:
        return PMCertificate(i0, {}, NOT_MULTIPLICATIVE, n, nv, reason="M_{i0} is singular", kernel=exc.kernel, method="exact")
    Aff = FFMatrix(A, nv)
    powers = [FFMatrix.identity(n, nv)]
    for _ in range(n - 1):
        powers.append(Aff * powers[-1])
    consts, offending = {}, []
    positive = True
    for j in range(n):
        b = FFMatrix.zeros(n, n, nv)
        for m in range(n):
            c = Minv[m, j]
            if c:
                b = b + powers[m].scale(c)
        for i in range(n):
            for k in range(n):
                x = b[i, k]
                if not x:
                    continue
                try:
                    p = x.to_poly()
                except NotDivisible:
                    positive = False
                    offending.append((j, k, i))
                    consts[(j, k, i)] = x
                    continue
                consts[(j, k, i)] = p
                if not p.is_nonnegative():
                    positive = False
                    offending.append((j, k, i))
    verdict = POSITIVE if positive else NOT_POSITIVE
    cert = PMCertificate(i0, consts, verdict, n, nv, min_poly_degree=n, offending=offending, method="exact")
    if positive:
        _check_identities(G, cert)
    return cert


# modular reconstruction

_PRIMES = []


def _is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _primes():
    if not _PRIMES:
        p = (1 << 20) - 1
        while len(_PRIMES) < 8:
            if _is_prime(p):
                _PRIMES.append(p)
            p -= 2
    return _PRIMES


def _mod_inverse_matrix(M, p):
    """Inverse of an integer matrix mod p, or None if singular."""
    n = M.shape[0]
    a = np.concatenate([M % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if len(nz) == 0:
            return None
        r = c + nz[0]
        if r != c:
            a[[c, r]] = a[[r, c]]
        inv = pow(int(a[c, c]), -1, p)
        a[c] = (a[c] * inv) % p
        f = a[:, c].copy()
        f[c] = 0
        a = (a - np.outer(f, a[c]) % p) % p
    return a[:, n:]


class _Evaluator:
    def __init__(self, G, i0):
        self.G = G
        self.i0 = i0
        self.n = len(G)
        self.entries = [(e.dst, e.src, e.weight) for e in G.edges]

    def tensor(self, point, p):
        """c[j, k, i] mod p at ``point``; None when M_{i0} is singular there."""
        n = self.n
        A = np.zeros((n, n), dtype=np.int64)
        for i, j, w in self.entries:
            A[i, j] = (A[i, j] + w.evaluate_mod(point, p)) % p
        Af = A.astype(np.float64)
        P = np.zeros((n, n, n), dtype=np.float64)  # P[m] = A^m
        P[0] = np.eye(n)
        for m in range(1, n):
            P[m] = np.fmod(Af @ P[m - 1], p)
        M = P[:, :, self.i0].T.astype(np.int64)  # M[i, m]
        N = _mod_inverse_matrix(M, p)
        if N is None:
            return None
        # c[i, j, k] = sum_m P[m, i, j] N[m, k]
        T = P.reshape(n, n * n).T
        C = np.fmod(T @ N.astype(np.float64), p).astype(np.int64).reshape(n, n, n)
        return np.transpose(C, (1, 2, 0))  # [j, k, i]


def _vandermonde_inverse(nodes, p):
    d = len(nodes)
    V = np.array([[pow(x, e, p) for e in range(d)] for x in nodes], dtype=np.int64)
    inv = _mod_inverse_matrix(V, p)
    assert inv is not None
    return inv


def _interp_axis(values, axis, nodes, p):
    inv = _vandermonde_inverse(nodes, p).astype(np.float64)
    moved = np.moveaxis(values, axis, 0).astype(np.float64)
    shape = moved.shape
    out = np.fmod(inv @ moved.reshape(shape[0], -1), p).astype(np.int64).reshape(shape)
    return np.moveaxis(out, 0, axis)


def _rational_reconstruct(a, m):
    """Fraction r/s with r = a s mod m and |r|, s <= sqrt(m/2), or None."""
    a %= m
    if a == 0:
        return Fraction(0)
    bound = int((m // 2) ** 0.5)
    r0, r1, s0, s1 = m, a, 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1) if s1 > 0 else Fraction(-r1, -s1)


def _degree_window(ev, nv, p, rng, span=16):
    """Per-variable exponent ranges found by interpolating along random lines."""
    lo, hi = [0] * nv, [0] * nv
    for v in range(nv):
        base = [rng.randrange(2, p - 1) for _ in range(nv)]
        width = 2 * span + 1
        nodes = rng.sample(range(2, p - 1), width)
        vals = []
        for x in nodes:
            pt = list(base)
            pt[v] = x
            t = ev.tensor(pt, p)
            if t is None:
                raise _Unlucky()
            vals.append(t * pow(x, span, p) % p)
        coeffs = _interp_axis(np.stack(vals), 0, nodes, p)
        nz = [e for e in range(width) if coeffs[e].any()]
        if nz:
            lo[v], hi[v] = nz[0] - span, nz[-1] - span
            if nz[0] == 0 or nz[-1] == width - 1:
                raise _WindowTooSmall()
    return lo, hi


class _Unlucky(Exception):
    pass


class _WindowTooSmall(Exception):
    pass


def _reconstruct(ev, nv, primes, rng, span):
    n = ev.n
    lo, hi = _degree_window(ev, nv, primes[0], rng, span)
    dims = [h - l + 1 for l, h in zip(lo, hi)]
    residues = []
    for p in primes:
        nodes = [rng.sample(range(2, p - 1), d) for d in dims]
        grid = np.zeros(tuple(dims) + (n, n, n), dtype=np.int64)
        for idx in np.ndindex(*dims):
            pt = [nodes[v][idx[v]] for v in range(nv)]
            t = ev.tensor(pt, p)
            if t is None:
                raise _Unlucky()
            scale = 1
            for v in range(nv):
                scale = scale * pow(pt[v], -lo[v], p) % p
            grid[idx] = t * scale % p
        for v in range(nv):
            grid = _interp_axis(grid, v, nodes[v], p)
        residues.append(grid)
    modulus = 1
    for p in primes:
        modulus *= p
    consts = {}
    nzmask = np.zeros(residues[0].shape, dtype=bool)
    for r in residues:
        nzmask |= r != 0
    for pos in zip(*np.nonzero(nzmask)):
        # CRT across primes
        a, m = 0, 1
        for p, r in zip(primes, residues):
            x = int(r[pos])
            t = ((x - a) * pow(m, -1, p)) % p
            a, m = a + m * t, m * p
        c = _rational_reconstruct(a, modulus)
        if c is None:
            raise _Unlucky()
        if c:
            exps = tuple(pos[v] + lo[v] for v in range(nv))
            key = tuple(int(x) for x in pos[nv:])
            consts.setdefault(key, {})[exps] = c
    return {k: LaurentPoly(t, nv) for k, t in consts.items()}


def _certify_modular(G, i0, seed=20240611):
    n, nv = len(G), G.nvars
    ev = _Evaluator(G, i0)
    rng = random.Random(seed)
    primes = _primes()
    # invertibility of M_{i0} at one point certifies det M_{i0} != 0
    cyclic = False
    for _ in range(4):
        pt = [rng.randrange(2, primes[0] - 1) for _ in range(nv)]
        if ev.tensor(pt, primes[0]) is not None:
            cyclic = True
            break
    if not cyclic:
        cert = _certify_exact(G, i0) if n <= 8 else None
        if cert is not None:
            return cert
        return PMCertificate(i0, {}, NOT_MULTIPLICATIVE, n, nv, reason="M_{i0} singular at every sampled point", method="modular")
    span = 12
    nprimes = 2
    for _ in range(6):
        try:
            consts = _reconstruct(ev, nv, primes[:nprimes], rng, span)
        except _WindowTooSmall:
            span *= 2
            continue
        except _Unlucky:
            nprimes = min(nprimes + 1, len(primes))
            continue
        cert = PMCertificate(i0, consts, POSITIVE, n, nv, min_poly_degree=n, method="modular")
        if _check_identities(G, cert, raise_on_failure=False):
            offending = [key for key, c in consts.items() if not c.is_nonnegative()]
            if offending:
                cert.verdict = NOT_POSITIVE
                cert.offending = offending
            return cert
        nprimes = min(nprimes + 1, len(primes))
    if n <= 8:
        return _certify_exact(G, i0)
    # M_{i0} is invertible, so G is multiplicative; the constants just did not
    # come out as Laurent polynomials in any window we tried.
    return PMCertificate(
        i0, {}, NOT_POSITIVE, n, nv, min_poly_degree=n, method="modular",
        reason="structure constants are not Laurent polynomials in the searched window",
    )


def _check_identities(G, cert, raise_on_failure=True):
    """b_{i0} = I and A b_j = sum_i A[i][j] b_i, exactly."""
    n, i0 = cert.n, cert.base_vertex
    consts = cert.structure_constants
    ok = True
    # b_{i0} = identity
    for k in range(n):
        for i in range(n):
            c = consts.get((i0, k, i))
            want = 1 if i == k else 0
            if (c is None and want) or (c is not None and c != want):
                ok = False
    b = [dict() for _ in range(n)]  # b[j][(i, k)]
    for (j, k, i), c in consts.items():
        if isinstance(c, RationalFunction):
            ok = False
            continue
        b[j][(i, k)] = c
    out = G.out_edges()
    for j in range(n):
        lhs = {}
        for (m, k), c in b[j].items():
            for e in out[m]:
                key = (e.dst, k)
                lhs[key] = lhs.get(key, 0) + e.weight * c
        rhs = {}
        for e in out[j]:
            for key, c in b[e.dst].items():
                rhs[key] = rhs.get(key, 0) + e.weight * c
        keys = set(lhs) | set(rhs)
        for key in keys:
            if lhs.get(key, 0) - rhs.get(key, 0):
                ok = False
                break
        if not ok:
            break
    if not ok and raise_on_failure:
        raise AssertionError("certificate identities fail")
    return ok


def minimal_polynomial_degree(G, exact=None):
    """deg mu_A.  If some path matrix M_k is invertible at a point modulo a
    prime, the vectors A^m e_k (m < n) are independent over Q(z) and deg mu = n;
    only otherwise is the minimal polynomial computed exactly."""
    n = len(G)
    if exact is None:
        exact = n <= 6
    if not exact:
        rng = random.Random(n)
        p = _primes()[0]
        for k in range(n):
            pt = [rng.randrange(2, p - 1) for _ in range(G.nvars)]
            if _Evaluator(G, k).tensor(pt, p) is not None:
                return n
    return len(minimal_polynomial(G.adjacency_ff())) - 1


# expansion


def expand(G, root, depth):
    """The expansion of G at ``root`` through level ``depth`` (levels start at 1).

    Vertex labels are (vertex label, exponent tuple, level)."""
    for e in G.edges:
        if not e.weight.is_monomial():
            raise ValueError("expansion needs monomial weights; call split_weights() first")
    out = G.out_edges()
    zero = (0,) * G.nvars
    start = (root, zero, 1)
    index = {start: 0}
    labels = [start]
    edges = {}
    level = [start]
    for lev in range(1, depth):
        nxt = []
        for v, beta, _ in level:
            for e in out[v]:
                (exps, coef), = e.weight.terms.items()
                tgt = (e.dst, tuple(a + b for a, b in zip(beta, exps)), lev + 1)
                if tgt not in index:
                    index[tgt] = len(labels)
                    labels.append(tgt)
                    nxt.append(tgt)
                key = (index[(v, beta, lev)], index[tgt], e.type)
                edges[key] = edges.get(key, 0) + coef
        level = nxt
    vertices = [(G.vertices[v], beta, lev) for v, beta, lev in labels]
    E = [Edge(s, d, t, LaurentPoly.constant(c, 0)) for (s, d, t), c in edges.items()]
    return WeightedDigraph(vertices, E, 0, kind="expansion")


def level_sizes(G):
    """Counts per level for graphs whose labels end with the level."""
    counts = {}
    for v in G.vertices:
        counts[v[-1]] = counts.get(v[-1], 0) + 1
    return [counts[k] for k in sorted(counts)]


# isomorphism


def _to_nx(G, respect_types, respect_weights):
    H = nx.DiGraph()
    H.add_nodes_from(range(len(G)))
    lab = {}
    for e in G.edges:
        key = (e.type if respect_types else None,
               tuple(sorted((k, str(c)) for k, c in e.weight.terms.items())) if respect_weights else None)
        lab.setdefault((e.src, e.dst), []).append(key)
    for (s, d), keys in lab.items():
        H.add_edge(s, d, label=tuple(sorted(keys, key=repr)))
    return H


def typed_isomorphic(G1, G2, respect_types=True, respect_weights=True):
    """(True, mapping) when an isomorphism exists, mapping G1 indices to G2 indices."""
    if len(G1) != len(G2) or len(G1.edges) != len(G2.edges):
        return False, None
    H1 = _to_nx(G1, respect_types, respect_weights)
    H2 = _to_nx(G2, respect_types, respect_weights)
    gm = nx.algorithms.isomorphism.DiGraphMatcher(
        H1, H2, edge_match=lambda a, b: a["label"] == b["label"]
    )
    for mapping in gm.isomorphisms_iter():
        return True, dict(sorted(mapping.items()))
    return False, None


def graph_from_matrix(rows, nvars, labels=None):
    """Graph whose adjacency matrix is ``rows`` (entry [i][j] = weight j -> i)."""
    n = len(rows)
    edges = []
    for i in range(n):
        for j in range(n):
            w = rows[i][j]
            if not isinstance(w, LaurentPoly):
                w = LaurentPoly.constant(w, nvars)
            if w:
                edges.append(Edge(j, i, None, w))
    labels = labels or [f"v{i + 1}" for i in range(n)]
    return WeightedDigraph(labels, edges, nvars)


# serialization


def graph_to_dict(G):
    return {
        "kind": G.kind,
        "nvars": G.nvars,
        "legend": {name: meaning for name, meaning in G.legend},
        "vertices": [
            {"id": t, "word": str(w), "label": str(v)} for t, (v, w) in enumerate(zip(G.vertices, G.words))
        ],
        "edges": [
            {"src": e.src, "dst": e.dst, "type": e.type, "weight": e.weight.to_json()} for e in G.edges
        ],
    }


def graph_to_json(G):
    return json.dumps(graph_to_dict(G), indent=2) + "\n"


def graph_from_json(text):
    d = json.loads(text) if isinstance(text, str) else text
    nv = d["nvars"]
    verts = sorted(d["vertices"], key=lambda v: v["id"])
    edges = [Edge(e["src"], e["dst"], e["type"], LaurentPoly.from_json(e["weight"], nv)) for e in d["edges"]]
    return WeightedDigraph(
        [v["label"] for v in verts], edges, nv, [v["word"] for v in verts], list(d["legend"].items()), d["kind"]
    )


_DOT_COLOURS = ["black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]


def graph_to_dot(G):
    """DOT text; edges are coloured by type and labelled only when the weight is not 1."""
    lines = [f"digraph {json.dumps(G.kind or 'G')} {{"]
    for t, v in enumerate(G.vertices):
        lines.append(f"  v{t} [label={json.dumps(str(v))}];")
    for e in G.edges:
        colour = _DOT_COLOURS[e.type % len(_DOT_COLOURS)] if isinstance(e.type, int) else "gray"
        attrs = [f"color={colour}"]
        if e.weight != 1:
            attrs.append(f"label={json.dumps(G.fmt(e.weight))}")
        if e.type is not None:
            attrs.append(f'type="{e.type}"')
        lines.append(f"  v{e.src} -> v{e.dst} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_csv(G):
    """One row per edge: source, target, type, weight."""
    lines = ["src,dst,type,weight"]
    for e in G.edges:
        t = "" if e.type is None else str(e.type)
        lines.append(f"{G.vertices[e.src]},{G.vertices[e.dst]},{t},{G.fmt(e.weight)}")
    return "\n".join(lines) + "\n"
