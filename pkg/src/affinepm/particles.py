"""Combinatorial models for types A and C: window notation, coloured particle
graphs and type-A key tableaux.

Each model rebuilds Gamma_gamma without touching Coxeter lengths or alcoves,
so an isomorphism with the graph from ``gamma`` is an honest cross-check.

Windows use the right action on Z: the window of w lists (1)w, ..., (m)w and
left multiplication by a generator acts on positions, so the window of a
reduced word is obtained by applying its letters from right to left.
"""

from dataclasses import dataclass
from itertools import permutations

from . import affine as aff
from .cartan import UnsupportedType
from .laurent import LaurentPoly
from .pmgraph import Edge, WeightedDigraph
from .weyl import WeylElement, complement


def _check(data, t):
    if data.type_label != t:
        raise UnsupportedType(f"the {t}-type model does not apply to {data.name}")


def _word_of(w):
    if isinstance(w, (WeylElement, aff.AffineElement)):
        return w.reduced_word()
    return list(w)


# type A windows


@dataclass(frozen=True)
class TypeAWindow:
    window: tuple

    def __str__(self):
        return "[" + ",".join(map(str, self.window)) + "]"


def windowA_generator_action(i, win):
    """s_i . win for a window of length n + 1."""
    j = list(win.window if isinstance(win, TypeAWindow) else win)
    m = len(j)
    if i == 0:
        j[0], j[-1] = j[-1] - m, j[0] + m
    elif 1 <= i < m:
        j[i - 1], j[i] = j[i], j[i - 1]
    else:
        raise ValueError(f"generator {i} out of range")
    return TypeAWindow(tuple(j))


def windowA_of(data, w):
    """Window of w (an affine or finite element, or a word)."""
    _check(data, "A")
    win = TypeAWindow(tuple(range(1, data.rank + 2)))
    for i in reversed(_word_of(w)):
        win = windowA_generator_action(i, win)
    return win


def windowA_image(win, k):
    """(k)sigma for any integer k."""
    m = len(win.window)
    q, r = divmod(k - 1, m)
    return win.window[r] + q * m


def windowA_compose(x, y):
    """Window of the product xy (right action: first x, then y)."""
    return TypeAWindow(tuple(windowA_image(y, j) for j in x.window))


# type C windows


@dataclass(frozen=True)
class TypeCWindow:
    window: tuple

    def __str__(self):
        return "[" + ",".join(map(str, self.window)) + "]"


def windowC_generator_action(i, win, n=None):
    j = list(win.window if isinstance(win, TypeCWindow) else win)
    n = len(j) if n is None else n
    N = 2 * n + 1
    if i == 0:
        j[0] = -j[0]
    elif 1 <= i < n:
        j[i - 1], j[i] = j[i], j[i - 1]
    elif i == n:
        j[-1] = N - j[-1]
    else:
        raise ValueError(f"generator {i} out of range")
    return TypeCWindow(tuple(j))


def windowC_of(data, w):
    _check(data, "C")
    win = TypeCWindow(tuple(range(1, data.rank + 1)))
    for i in reversed(_word_of(w)):
        win = windowC_generator_action(i, win)
    return win


def windowC_image(win, k):
    """(k)sigma from the window, using (-k)sigma = -(k)sigma and N-periodicity."""
    n = len(win.window)
    N = 2 * n + 1
    q, r = divmod(k, N)
    if r == 0:
        v = 0
    elif r <= n:
        v = win.window[r - 1]
    else:
        v = N - win.window[N - r - 1]
    return v + q * N


def windowC_compose(x, y):
    return TypeCWindow(tuple(windowC_image(y, j) for j in x.window))


# colour words


def _blocks_A(n, Jprime):
    """Orbits of W_J on {1..n+1}: consecutive runs cut after each j in J'."""
    blocks, cur = [], []
    for v in range(1, n + 2):
        cur.append(v)
        if v in Jprime or v == n + 1:
            blocks.append(cur)
            cur = []
    return blocks


def _colours_C(n, Jprime):
    """Blocks of {1..n} cut after each j in J' (the last block ends at n)."""
    blocks, cur = [], []
    for v in range(1, n + 1):
        cur.append(v)
        if v in Jprime or v == n:
            blocks.append(cur)
            cur = []
    return blocks


@dataclass(frozen=True)
class ColorWord:
    letters: tuple  # type A: colours; type C: (colour, spin) with spin in "+-" or "" for the self-dual colour

    def __str__(self):
        if self.letters and isinstance(self.letters[0], tuple):
            return " ".join(f"{c}{s}" for c, s in self.letters)
        return "".join(map(str, self.letters))


def color_word_of(data, Jprime, w):
    """The colour word of a finite Weyl element (constant on cosets w W_J)."""
    Jp = set(Jprime)
    n = data.rank
    if data.type_label == "A":
        colour = {v: c for c, b in enumerate(_blocks_A(n, Jp), 1) for v in b}
        return ColorWord(tuple(colour[j] for j in windowA_of(data, w).window))
    if data.type_label == "C":
        blocks = _colours_C(n, Jp)
        selfdual = n not in Jp
        colour = {v: c for c, b in enumerate(blocks, 1) for v in b}
        N = 2 * n + 1
        out = []
        for j in windowC_of(data, w).window:
            c = colour[j] if j <= n else colour[N - j]
            if selfdual and c == len(blocks):
                out.append((c, ""))
            else:
                out.append((c, "-" if j <= n else "+"))
        return ColorWord(tuple(out))
    raise UnsupportedType(f"no particle model for {data.name}")


def _distinct_words(multiset):
    return sorted(set(permutations(multiset)))


def build_particle_graph(data, Jprime):
    """The coloured particle graph built from the word rules alone."""
    Jp = sorted(set(Jprime))
    if not Jp:
        raise ValueError("J' must be nonempty")
    if data.type_label == "A":
        return _particles_A(data, Jp)
    if data.type_label == "C":
        return _particles_C(data, Jp)
    raise UnsupportedType(f"no particle model for {data.name}; only types A and C are covered")


def _legend(Jp):
    return [(f"z{j}", f"alpha_{j}^vee mod Q_J^vee") for j in Jp]


def _particles_A(data, Jp):
    n = data.rank
    blocks = _blocks_A(n, set(Jp))
    nv = len(Jp)
    # colour c and c + 1 are separated by the boundary k_c = max B_c, which lies in J'
    var = {c: Jp.index(b[-1]) for c, b in enumerate(blocks, 1) if b[-1] in Jp}
    words = _distinct_words([c for c, b in enumerate(blocks, 1) for _ in b])
    index = {w: t for t, w in enumerate(words)}
    edges = []
    for w in words:
        for i in range(1, n + 1):
            if w[i - 1] < w[i]:
                v = list(w)
                v[i - 1], v[i] = v[i], v[i - 1]
                edges.append(Edge(index[w], index[tuple(v)], i, LaurentPoly.constant(data.marks[i], nv)))
        if w[-1] < w[0]:
            v = list(w)
            v[0], v[-1] = v[-1], v[0]
            exps = [0] * nv
            for c in range(w[-1], w[0]):
                exps[var[c]] -= 1
            edges.append(Edge(index[w], index[tuple(v)], 0, LaurentPoly.monomial(exps, data.marks[0])))
    labels = ["".join(map(str, w)) for w in words]
    return WeightedDigraph(labels, edges, nv, labels, _legend(Jp), f"particle({','.join(map(str, Jp))})", {"model": "particle", "words": words})


def _particles_C(data, Jp):
    n = data.rank
    blocks = _colours_C(n, set(Jp))
    r = len(blocks)
    selfdual = n not in Jp
    nv = len(Jp)

    def key(letter):
        c, s = letter
        if s == "":
            return r
        if s == "-":
            return c
        return (2 * r if selfdual else 2 * r + 1) - c

    def q(c):
        exps = [0] * nv
        for t, j in enumerate(Jp):
            if j >= blocks[c - 1][0]:
                exps[t] -= 1
        return exps

    # the letters: every position of {1..n} gets a colour, signed unless self-dual
    colours = [c for c, b in enumerate(blocks, 1) for _ in b]
    words = set()
    for arrangement in set(permutations(colours)):
        signed = [t for t, c in enumerate(arrangement) if not (selfdual and c == r)]
        for mask in range(1 << len(signed)):
            letters = [(c, "") for c in arrangement]
            for b, t in enumerate(signed):
                letters[t] = (arrangement[t], "+" if mask >> b & 1 else "-")
            words.add(tuple(letters))
    words = sorted(words, key=lambda w: (sum(s == "+" for _, s in w), [key(x) for x in w]))
    index = {w: t for t, w in enumerate(words)}
    edges = []
    for w in words:
        for i in range(1, n):
            if key(w[i - 1]) < key(w[i]):
                v = list(w)
                v[i - 1], v[i] = v[i], v[i - 1]
                edges.append(Edge(index[w], index[tuple(v)], i, LaurentPoly.constant(data.marks[i], nv)))
        c, s = w[-1]
        if s == "-":
            v = list(w)
            v[-1] = (c, "+")
            edges.append(Edge(index[w], index[tuple(v)], n, LaurentPoly.constant(data.marks[n], nv)))
        c, s = w[0]
        if s == "+":
            v = list(w)
            v[0] = (c, "-")
            edges.append(Edge(index[w], index[tuple(v)], 0, LaurentPoly.monomial(q(c), data.marks[0])))
    labels = [str(ColorWord(w)) for w in words]
    return WeightedDigraph(labels, edges, nv, labels, _legend(Jp), f"particle({','.join(map(str, Jp))})", {"model": "particle", "words": words})


def particle_isomorphism(data, Jprime, gamma_graph):
    """Check that w -> colour word of w is an isomorphism from Gamma_gamma onto
    the particle graph, types and weights included.  Returns the list of
    discrepancies (empty on success)."""
    P = build_particle_graph(data, Jprime)
    pidx = {ColorWord(w): t for t, w in enumerate(P.meta["words"])}
    image = [pidx.get(color_word_of(data, Jprime, u)) for u in gamma_graph.meta["elements"]]
    problems = []
    if None in image or len(set(image)) != len(image) or len(image) != len(P):
        return [("vertex map is not a bijection", image)]
    mapped = sorted((image[e.src], image[e.dst], e.type, str(e.weight)) for e in gamma_graph.edges)
    target = sorted((e.src, e.dst, e.type, str(e.weight)) for e in P.edges)
    if mapped != target:
        problems.append(("edge sets differ", sorted(set(mapped) ^ set(target))))
    return problems


# key tableaux


@dataclass(frozen=True)
class KeyTableau:
    columns: tuple  # columns left to right, each a sorted tuple, lengths weakly decreasing

    def is_key(self):
        cols = self.columns
        return all(set(cols[t + 1]) <= set(cols[t]) for t in range(len(cols) - 1))

    def __str__(self):
        return "|".join("".join(map(str, c)) for c in self.columns)


def key_tableau_of(Jprime):
    """T_gamma: one column 1..j for each j in J', longest first."""
    return KeyTableau(tuple(tuple(range(1, j + 1)) for j in sorted(Jprime, reverse=True)))


def key_action(T, i, n):
    """s_i . T in type A_n (entries 1..n+1)."""
    m = n + 1
    a, b = (m, 1) if i == 0 else (i, i + 1)
    cols = []
    for col in T.columns:
        s = set(col)
        if a in s and b not in s:
            s = (s - {a}) | {b}
        elif b in s and a not in s:
            s = (s - {b}) | {a}
        cols.append(tuple(sorted(s)))
    if i == 0:
        # rearrange so that rows weakly increase again
        by_len = {}
        for c in cols:
            by_len.setdefault(len(c), []).append(c)
        cols = []
        for length in sorted(by_len, reverse=True):
            cols.extend(sorted(by_len[length]))
        cols = _sort_rows(cols)
    return KeyTableau(tuple(cols))


def _sort_rows(cols):
    """Reorder columns of equal length so that every row weakly increases."""
    out = list(cols)
    changed = True
    while changed:
        changed = False
        for t in range(len(out) - 1):
            a, b = out[t], out[t + 1]
            if len(a) == len(b) and a > b:
                out[t], out[t + 1] = b, a
                changed = True
    return out


def _raises(T, i, n):
    """Orientation of the type-i move: entries go from i to i+1, or from n+1 to 1."""
    a = n + 1 if i == 0 else i
    return any(a in c and (1 if i == 0 else i + 1) not in c for c in T.columns)


def key_orbit_graph(data, Jprime):
    """Orbit of T_gamma under the generators, one typed arrow T -> s_i . T for
    each move that sends entries i to i+1 (n+1 to 1 for i = 0)."""
    _check(data, "A")
    n = data.rank
    start = key_tableau_of(Jprime)
    order = [start]
    index = {start: 0}
    t = 0
    while t < len(order):
        T = order[t]
        for i in range(n + 1):
            U = key_action(T, i, n)
            if not U.is_key():
                raise AssertionError(f"{U} is not a key tableau")
            if U not in index:
                index[U] = len(order)
                order.append(U)
        t += 1
    edges = []
    for T in order:
        for i in range(n + 1):
            U = key_action(T, i, n)
            if U != T and _raises(T, i, n):
                edges.append(Edge(index[T], index[U], i, LaurentPoly.constant(1, 0)))
    labels = [str(T) for T in order]
    return WeightedDigraph(labels, edges, 0, labels, [], "key_tableaux", {"model": "tableau", "tableaux": order})


def forget_weights(G):
    """Same typed arrows, every weight replaced by 1 (no variables)."""
    edges = [Edge(e.src, e.dst, e.type, LaurentPoly.constant(1, 0)) for e in G.edges]
    return WeightedDigraph(list(G.vertices), edges, 0, list(G.words), [], G.kind, dict(G.meta))


def Jprime_of(data, J):
    return complement(data, J)
