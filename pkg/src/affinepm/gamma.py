"""Builders for the graphs attached to affine Weyl groups, and the verifiers
that compare the Coxeter-combinatorial constructions with alcove geometry.

Two pipelines are kept apart on purpose.  ``build_gamma_rho`` and
``build_gamma_gamma`` only use lengths and coset representatives in W.
``build_gamma_WJ_geometric``, ``build_gamma_B0`` and ``build_gamma_fundamental``
only use sample points, crossings and translations of alcoves.  The main
theorem check compares the two.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import affine as aff
from .cartan import GeoWeight
from .laurent import LaurentPoly
from .pmgraph import (
    Edge,
    WeightedDigraph,
    expand,
    minimal_polynomial_degree,
    multiplicative_basis_at,
    typed_isomorphic,
)
from .weyl import (
    complement,
    enumerate_group,
    enumerate_WJ,
    min_coset_rep,
    reflection,
    simple_reflection,
)

GammaGraph = WeightedDigraph


def wordlabel(word):
    return aff.word_str(word)


def _coxeter_vertices(data, J):
    W = enumerate_WJ(data, J) if J else enumerate_group(data)
    return W, {w: t for t, w in enumerate(W)}


def _gamma_legend(Jp):
    return [(f"z{j}", f"alpha_{j}^vee mod Q_J^vee") for j in Jp]


def build_gamma_gamma(data, Jprime):
    """Gamma_gamma for gamma = sum_{j in J'} omega_j; vertices W^J, J = I* - J'."""
    Jp = sorted(set(Jprime))
    if not Jp:
        raise ValueError("J' must be nonempty")
    J = complement(data, Jp)
    W, index = _coxeter_vertices(data, J)
    theta = data.highest_root().coords
    s_theta = reflection(data, theta)
    theta_v = _theta_v(data)
    nv = len(Jp)
    edges = []
    for w in W:
        lw = w.length()
        for i in range(1, data.rank + 1):
            u = simple_reflection(data, i) * w
            if u in index and u.length() == lw + 1:
                edges.append(Edge(index[w], index[u], i, LaurentPoly.constant(data.marks[i], nv)))
        u = min_coset_rep(s_theta * w, J)
        if u.length() < lw:
            # wt(s_0 w) = w^{-1}(theta^vee)
            wt = w.right_coroot(theta_v)
            exps = tuple(wt[j - 1] for j in Jp)
            edges.append(Edge(index[w], index[u], 0, LaurentPoly.monomial(exps)))
    labels = [wordlabel(w.reduced_word()) for w in W]
    kind = "rho" if len(Jp) == data.rank else f"gamma({','.join(map(str, Jp))})"
    return WeightedDigraph(labels, edges, nv, labels, _gamma_legend(Jp), kind, {"J": J, "Jprime": Jp, "elements": W})


def _theta_v(data):
    return aff._geom(data)["theta_v"]


def build_gamma_rho(data):
    return build_gamma_gamma(data, range(1, data.rank + 1))


# geometric side


def build_gamma_WJ_geometric(data, Jprime):
    """Graph of the multiplication by xi_{rho_1} on the W^J fundamental domain.

    Vertices are the alcoves of W lying in A_J.  For each such w and each
    positive crossing w -> x = s_i w with x in A_J, write x = u' . t_a (u' in
    W^J, a in Q^vee / Q_J^vee) and record the arrow w -> u' with weight
    a_i z^a.  The adjacency matrix is therefore Mat_{W^J}(m_{xi_{rho_1}})."""
    Jp = sorted(set(Jprime))
    J = complement(data, Jp)
    W = aff.weyl_in_J_alcove(data, J)
    W.sort(key=lambda u: (u.length(), u.reduced_word()))
    index = {u: t for t, u in enumerate(W)}
    nv = len(Jp)
    edges = []
    for u in W:
        w = aff.from_weyl(u)
        for i in range(data.rank + 1):
            if aff.crossing_sign(w, i) < 0:
                continue
            x = w.left_mul(i)
            if not aff.in_J_alcove(x, J):
                continue
            up, cls = aff.UJ_factor(x, J)
            if aff.bullet_translate(aff.from_weyl(up), aff.lift_class(data, cls, J), J) != x:
                raise AssertionError("UJ factorization failed")
            edges.append(Edge(index[u], index[up], i, LaurentPoly.monomial(cls, data.marks[i])))
    labels = [wordlabel(u.reduced_word()) for u in W]
    legend = [(f"z{j}", f"alpha_{j}^vee mod Q_J^vee") for j in Jp]
    return WeightedDigraph(labels, edges, nv, labels, legend, f"WJ_geometric({','.join(map(str, Jp))})", {"J": J, "Jprime": Jp, "elements": W})


def mat_of(G):
    return G.adjacency()


def bar_transpose(matrix):
    n = len(matrix)
    return [[matrix[j][i].bar() for j in range(n)] for i in range(n)]


@dataclass
class Report:
    ok: bool
    name: str
    details: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)


def verify_main_theorem(data, Jprime=None, certify=True):
    """Check Mat_{W^J}(m_{xi_{rho_1}}) == transpose(bar(A_{Gamma_gamma})) entrywise.

    The two sides come from independent pipelines.  With ``certify`` the
    geometric graph is then certified positively multiplicative at e with
    deg mu equal to the vertex count.  Gamma_gamma inherits positivity through
    the bar-transpose of that basis, which is not the basis normalized at e of
    Gamma_gamma itself, so no certificate of Gamma_gamma at e is demanded.
    """
    Jp = list(range(1, data.rank + 1)) if Jprime in (None, "rho") else sorted(Jprime)
    G = build_gamma_gamma(data, Jp)
    H = build_gamma_WJ_geometric(data, Jp)
    mismatches = []
    if G.vertices != H.vertices:
        mismatches.append(("vertex order", G.vertices, H.vertices))
    else:
        lhs = H.adjacency()
        rhs = bar_transpose(G.adjacency())
        n = len(G)
        for i in range(n):
            for j in range(n):
                if lhs[i][j] != rhs[i][j]:
                    mismatches.append((G.vertices[i], G.vertices[j], str(lhs[i][j]), str(rhs[i][j])))
    details = {"vertices": len(G), "J'": Jp}
    ok = not mismatches
    if certify and ok:
        ch = multiplicative_basis_at(H, 0)
        details["geometric_verdict"] = ch.verdict
        details["min_poly_degree"] = minimal_polynomial_degree(H)
        ok = ch.positive and details["min_poly_degree"] == len(H)
        details["certificate"] = ch
    return Report(ok, f"main theorem {data.name} J'={Jp}", details, mismatches)


# affine Grassmannians and B_0


def build_grassmannian_graph(data, L):
    """Weak order on affine Grassmannian elements of length <= L (edges w -> s_i w)."""
    els = aff.enumerate_grassmannians_up_to(data, L)
    index = {w: t for t, w in enumerate(els)}
    edges = []
    for w in els:
        for i in range(data.rank + 1):
            u = w.left_mul(i)
            if u in index and u.length() == w.length() + 1:
                edges.append(Edge(index[w], index[u], i, LaurentPoly.constant(data.marks[i], 0)))
    labels = [wordlabel(w.reduced_word()) for w in els]
    return WeightedDigraph(labels, edges, 0, labels, [], f"grassmannian_truncation({L})", {"elements": els})


def _minus_omega(data, j):
    return tuple(-1 if t == j - 1 else 0 for t in range(data.rank))


def compute_B0(data):
    """Affine Grassmannian w with w * t_{-omega_i} non-Grassmannian for every i."""
    c = data._cache
    if "B0" in c:
        return c["B0"]
    bound = len(data.positive_roots()) * max(data.marks) + 2 * data.rank + 2
    els = aff.enumerate_grassmannians_up_to(data, bound)
    out = [
        w
        for w in els
        if all(not aff.star_translate(w, _minus_omega(data, j)).is_grassmannian() for j in range(1, data.rank + 1))
    ]
    expected = len(enumerate_group(data)) // data.det()
    if len(out) != expected:
        raise AssertionError(f"|B0| = {len(out)}, expected {expected}")
    c["B0"] = out
    return out


def reduce_to_B0(data, x):
    """Greedy (b, kappa): subtract omega_j (smallest j first) while the result
    stays Grassmannian.  Returns b in B0 and kappa in fundamental-weight coords."""
    kappa = [0] * data.rank
    while True:
        for j in range(1, data.rank + 1):
            y = aff.star_translate(x, _minus_omega(data, j))
            if y.is_grassmannian():
                x = y
                kappa[j - 1] += 1
                break
        else:
            return x, tuple(kappa)


def build_gamma_B0(data):
    B = compute_B0(data)
    index = {w: t for t, w in enumerate(B)}
    nv = data.rank
    edges = []
    for w in B:
        for i in range(data.rank + 1):
            if aff.crossing_sign(w, i) < 0:
                continue
            x = w.left_mul(i)
            assert x.is_grassmannian()
            b, kappa = reduce_to_B0(data, x)
            edges.append(Edge(index[w], index[b], i, LaurentPoly.monomial(kappa, data.marks[i])))
    labels = [wordlabel(w.reduced_word()) for w in B]
    legend = [(f"z{j}", f"omega_{j}") for j in range(1, nv + 1)]
    return WeightedDigraph(labels, edges, nv, labels, legend, "B0", {"elements": B})


# fundamental domains for a sublattice L of P


def _solve_lattice(basis, vec):
    """Integer coordinates of vec in the lattice basis, or None."""
    n = len(vec)
    k = len(basis)
    a = [[Fraction(basis[c][r]) for c in range(k)] + [Fraction(vec[r])] for r in range(n)]
    row = 0
    piv = []
    for c in range(k):
        p = next((r for r in range(row, n) if a[r][c]), None)
        if p is None:
            continue
        a[row], a[p] = a[p], a[row]
        pv = a[row][c]
        a[row] = [x / pv for x in a[row]]
        for r in range(n):
            if r != row and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        piv.append(c)
        row += 1
    if any(a[r][k] for r in range(row, n)):
        return None
    sol = [Fraction(0)] * k
    for r, c in enumerate(piv):
        sol[c] = a[r][k]
    if any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


def _offset(data, x, b):
    s = aff._geom(data)["scale"]
    return tuple(Fraction(p - q, s) for p, q in zip(x.point(), b.point()))


def locate_in_domain(data, lattice_basis, domain, x):
    """All (b, coords) with A_0 x = A_0 b + sum coords_t L_t."""
    hits = []
    for b in domain:
        sol = _solve_lattice(lattice_basis, _offset(data, x, b))
        if sol is not None:
            hits.append((b, sol))
    return hits


class DomainError(ValueError):
    def __init__(self, msg, counterexample):
        super().__init__(msg)
        self.counterexample = counterexample


def validate_domain(data, lattice_basis, domain, radius=3):
    """Every alcove with |k_alpha| <= radius is a unique L-translate of a domain alcove."""
    if aff.identity(data) not in domain:
        raise DomainError("domain must contain the fundamental alcove", None)
    window = _window(data, radius)
    for x in window:
        hits = locate_in_domain(data, lattice_basis, domain, x)
        if len(hits) != 1:
            raise DomainError(f"alcove {x} is covered {len(hits)} times", x)
    return True


def _window(data, radius):
    from collections import deque

    e = aff.identity(data)
    seen = {e}
    q = deque([e])
    while q:
        w = q.popleft()
        for i in range(data.rank + 1):
            u = w.left_mul(i)
            if u not in seen and max(abs(k) for k in u.kvec()) <= radius:
                seen.add(u)
                q.append(u)
    return seen


def build_gamma_fundamental(data, lattice_basis, domain, validate=True):
    """Graph of the multiplication by xi_{rho_1} in the basis indexed by the
    L-fundamental domain ``domain``: each positive crossing b -> x = s_i b with
    x = b' + kappa gives an arrow b -> b' of weight a_i z^kappa (coordinates of
    kappa in the basis of L)."""
    basis = [tuple(v.coords) if isinstance(v, GeoWeight) else tuple(v) for v in lattice_basis]
    if validate:
        validate_domain(data, basis, domain)
    index = {w: t for t, w in enumerate(domain)}
    nv = len(basis)
    edges = []
    for w in domain:
        for i in range(data.rank + 1):
            if aff.crossing_sign(w, i) < 0:
                continue
            x = w.left_mul(i)
            (b, sol), = locate_in_domain(data, basis, domain, x)
            edges.append(Edge(index[w], index[b], i, LaurentPoly.monomial(sol, data.marks[i])))
    labels = [wordlabel(w.reduced_word()) for w in domain]
    legend = [(f"z{t + 1}", "L_" + str(t + 1) + "=" + str(list(v))) for t, v in enumerate(basis)]
    return WeightedDigraph(labels, edges, nv, labels, legend, "fundamental_domain", {"elements": list(domain), "L": basis})


# Pieri rule and automata


def verify_pieri(data, L):
    """Order-theoretic Pieri index sets (from the BFS word-length oracle) agree
    with the geometric positive-crossing sets for all Grassmannian w, l(w) <= L."""
    dist = aff.bfs_lengths(data, L + 2)
    n = data.rank

    def grass(w):
        d = dist[w]
        return all(dist.get(w * aff.generator(data, j), d + 1) > d for j in range(1, n + 1))

    mismatches = []
    count = 0
    for w, d in dist.items():
        if d > L or not grass(w):
            continue
        count += 1
        order = {i for i in range(n + 1) if dist.get(w.left_mul(i), d + 1) == d + 1 and grass(w.left_mul(i))}
        geo = {i for i in range(n + 1) if aff.crossing_sign(w, i) > 0}
        if order != geo:
            mismatches.append((wordlabel(w.reduced_word()), sorted(order), sorted(geo)))
    return Report(not mismatches, f"pieri {data.name} L={L}", {"elements": count}, mismatches)


def automaton_graph(data, Jprime=None):
    return build_gamma_rho(data) if not Jprime else build_gamma_gamma(data, Jprime)


def automaton_accepts(data, word, Jprime=None, graph=None):
    """Read ``word`` (letters in reading order: the rightmost generator first)
    backwards along the arrows of Gamma_rho (or Gamma_gamma)."""
    G = graph or automaton_graph(data, Jprime)
    incoming = {}
    for e in G.edges:
        incoming.setdefault((e.dst, e.type), []).append(e.src)
    v = 0
    for letter in word:
        srcs = incoming.get((v, letter))
        if not srcs:
            return False
        v = srcs[0]
    return True


def enumerate_reduced(data, L, Jprime=None):
    """Counts by length of words accepted by the automaton."""
    G = automaton_graph(data, Jprime)
    incoming = {}
    for e in G.edges:
        incoming.setdefault(e.dst, []).append((e.type, e.src))
    counts = [0] * (L + 1)
    frontier = {0: 1}
    counts[0] = 1
    for ell in range(1, L + 1):
        nxt = {}
        for v, c in frontier.items():
            for _, u in incoming.get(v, []):
                nxt[u] = nxt.get(u, 0) + c
        counts[ell] = sum(nxt.values())
        frontier = nxt
    return counts


def reduced_word_counts_oracle(data, L, Jprime=None):
    """Number of reduced words of Grassmannian elements (in A_J when J' given)
    of each length, computed from the BFS word-length oracle."""
    dist = aff.bfs_lengths(data, L + 1)
    n = data.rank
    J = complement(data, Jprime) if Jprime else []

    def keep(w):
        d = dist[w]
        if d > L:
            return False
        if not all(dist.get(w * aff.generator(data, j), d + 1) > d for j in range(1, n + 1)):
            return False
        return aff.in_J_alcove(w, J)

    els = sorted((w for w in dist if keep(w)), key=lambda w: dist[w])
    red = {}
    counts = [0] * (L + 1)
    for w in els:
        d = dist[w]
        if d == 0:
            red[w] = 1
        else:
            red[w] = sum(red.get(w.left_mul(i), 0) for i in range(n + 1) if dist.get(w.left_mul(i)) == d - 1)
        counts[d] += red[w]
    return counts


def structure_constants(data, kind="B0", **kw):
    """Structure constants keyed by vertex words: (w_j, w_k, w_i) -> c_{jk}^i."""
    if kind == "B0":
        G = build_gamma_B0(data)
    elif kind == "fundamental":
        G = build_gamma_fundamental(data, kw["lattice_basis"], kw["domain"])
    elif kind == "WJ":
        G = build_gamma_WJ_geometric(data, kw["Jprime"])
    else:
        raise ValueError(f"unknown kind {kind!r}")
    cert = multiplicative_basis_at(G, 0)
    table = {(G.vertices[j], G.vertices[k], G.vertices[i]): c for (j, k, i), c in cert.structure_constants.items()}
    return G, cert, table


def verify_expansion(data, depth):
    """expand(Gamma_B0, e, depth) against weak order on Grassmannians of length < depth.

    An arrow of Gamma_B0 carries the type of the crossing at b in B0.  After a
    translation by a weight outside Q^vee the same crossing has another type
    (translations by P act on I through diagram automorphisms), so each arrow
    of the expansion is retyped by the crossing it really is: vertex
    (b, z^kappa) is the alcove b * t_kappa.  The comparison then respects both
    types and weights."""
    B0 = build_gamma_B0(data)
    G = B0.split_weights()
    E = expand(G, 0, depth)
    B = B0.meta["elements"]
    alcove = {}
    for t, (lab, beta, _) in enumerate(E.vertices):
        alcove[t] = aff.star_translate(B[B0.vertices.index(lab)], beta)
    retyped = []
    for e in E.edges:
        x, y = alcove[e.src], alcove[e.dst]
        types = [i for i in range(data.rank + 1) if x.left_mul(i) == y]
        if len(types) != 1:
            return Report(False, f"expansion {data.name} depth={depth}", {"expansion": E}, [("not adjacent", e)])
        retyped.append(Edge(e.src, e.dst, types[0], e.weight))
    E = WeightedDigraph(E.vertices, retyped, 0, kind="expansion")
    H = build_grassmannian_graph(data, depth - 1)
    ok, mapping = typed_isomorphic(E, H, respect_types=True, respect_weights=True)
    return Report(ok, f"expansion {data.name} depth={depth}", {"expansion": E, "weak_order": H, "mapping": mapping})


def verify_UJ(data, Jprime, bound=4):
    """Theorem UJ on a window: (u, a) -> u . t_a is a bijection from the pairs
    landing in the window onto the A_J alcoves with |k_alpha| <= bound, and
    crossing signs between adjacent A_J alcoves are invariant under . t_a."""
    J = complement(data, Jprime)
    window = aff.enumerate_J_window(data, J, bound)
    WJ = [aff.from_weyl(u) for u in aff.weyl_in_J_alcove(data, J)]
    hit = {}
    problems = []
    # classes range over a box large enough to reach every alcove of the window
    Jp = sorted(Jprime)
    box = range(-2 * bound - 2, 2 * bound + 3)
    for u in WJ:
        for cls in product(box, repeat=len(Jp)):
            x = aff.bullet_translate(u, aff.lift_class(data, cls, J), J)
            if x in window:
                if x in hit:
                    problems.append(("not injective", x))
                hit[x] = (u, cls)
    missing = [x for x in window if x not in hit]
    if missing:
        problems.append(("not surjective", len(missing)))
    # crossing invariance: adjacent pairs inside A_J
    checked = 0
    for x in window:
        u, cls = hit.get(x, (None, None))
        if u is None:
            continue
        for i in range(data.rank + 1):
            y = x.left_mul(i)
            if not aff.in_J_alcove(y, J):
                continue
            sign = aff.crossing_sign(x, i)
            for shift in product((-1, 0, 1), repeat=len(Jp)):
                lift = aff.lift_class(data, shift, J)
                xs = aff.bullet_translate(x, lift, J)
                ys = aff.bullet_translate(y, lift, J)
                # the translated pair is again adjacent; compare the signs
                k = [i2 for i2 in range(data.rank + 1) if xs.left_mul(i2) == ys]
                if len(k) != 1:
                    problems.append(("translated pair not adjacent", x, i, shift))
                    continue
                if aff.crossing_sign(xs, k[0]) != sign:
                    problems.append(("sign changed", x, i, shift))
                checked += 1
    return Report(not problems, f"UJ {data.name} J'={Jp}", {"window": len(window), "pairs_checked": checked}, problems)
