"""The affine Weyl group W_a = W x Q^vee and its alcove geometry.

Convention: W_a acts on the right of points.  The element w = (u, lam), with
u in W and lam a coroot, sends x to (x)w = u^{-1}(x) + lam, so products compose
left to right:

    (u1, l1)(u2, l2) = (u1 u2, u2^{-1}(l1) + l2).

The alcove of w is A_0 w, the image of the fundamental alcove.  The generator
s_0 is (s_theta, theta^vee), the reflection in the wall (x, theta) = 1.

Points are kept in fundamental-weight coordinates x_j = (x, alpha_j), scaled by
an integer so that all sample points are integral.
"""

from collections import deque
from fractions import Fraction
from math import lcm

from .cartan import GeoWeight, RootVector
from .weyl import (
    enumerate_group,
    enumerate_parabolic,
    identity as weyl_identity,
    min_coset_rep,
    reflection,
    simple_reflection,
)


def _geom(data):
    """Cached geometric tables for a root system."""
    g = data._cache.get("geom")
    if g is None:
        n = data.rank
        scale = (n + 1) * lcm(*data.marks[1:])
        p0 = tuple(scale // ((n + 1) * data.marks[i + 1]) for i in range(n))
        roots = [r.coords for r in data.positive_roots()]
        theta = data.highest_root().coords
        g = {
            "scale": scale,
            "p0": p0,
            "roots": roots,
            "theta": theta,
            "theta_v": data.coroot(RootVector(theta)).coords,
            "A": data.finite_cartan,
        }
        data._cache["geom"] = g
    return g


class AffineElement:
    __slots__ = ("data", "finite", "trans", "_point", "_k", "_hash", "_word")

    def __init__(self, finite, trans):
        self.data = finite.data
        self.finite = finite
        self.trans = tuple(int(x) for x in trans)
        self._point = None
        self._k = None
        self._hash = None
        self._word = None

    # group structure

    def __mul__(self, other):
        u1, l1 = self.finite, self.trans
        u2, l2 = other.finite, other.trans
        moved = u2.right_coroot(l1)
        return AffineElement(u1 * u2, tuple(a + b for a, b in zip(moved, l2)))

    def inverse(self):
        u = self.finite
        # (u, l)^{-1} = (u^{-1}, -u(l))
        return AffineElement(u.inverse(), tuple(-x for x in u.apply_coroot(self.trans)))

    def __eq__(self, other):
        return (
            isinstance(other, AffineElement)
            and self.finite == other.finite
            and self.trans == other.trans
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.finite.action, self.trans))
        return self._hash

    def __repr__(self):
        return "AffineElement(" + word_str(self.reduced_word()) + ")"

    @property
    def sf(self):
        return self.finite

    @property
    def wt(self):
        return self.trans

    # geometry

    def point(self):
        """Scaled sample point of the alcove A_0 w."""
        if self._point is None:
            g = _geom(self.data)
            n = self.data.rank
            r = self.finite.action
            p0, a, s = g["p0"], g["A"], g["scale"]
            lam = self.trans
            self._point = tuple(
                sum(p0[i] * r[i][j] for i in range(n)) + s * sum(lam[i] * a[i][j] for i in range(n))
                for j in range(n)
            )
        return self._point

    def kvec(self):
        """k_alpha = floor((p_w, alpha)) over the positive roots, in root order."""
        if self._k is None:
            g = _geom(self.data)
            p, s = self.point(), g["scale"]
            out = []
            for r in g["roots"]:
                v = sum(a * b for a, b in zip(r, p))
                if v % s == 0:
                    raise AssertionError("sample point lies on a wall")
                out.append(v // s)
            self._k = tuple(out)
        return self._k

    def length(self):
        return sum(abs(k) for k in self.kvec())

    def is_grassmannian(self):
        return all(k >= 0 for k in self.kvec())

    def degree(self):
        return sum(self.kvec())

    def left_mul(self, i):
        return generator(self.data, i) * self

    def reduced_word(self):
        """Greedy word: strip a left descent each time, taking the smallest
        finite index first and s_0 only when no finite index descends.  This
        reproduces the words printed with the figures (102120 rather than 012120)."""
        if self._word is None:
            word = []
            w = self
            while True:
                lw = w.length()
                if lw == 0:
                    break
                for i in list(range(1, self.data.rank + 1)) + [0]:
                    u = w.left_mul(i)
                    if u.length() < lw:
                        word.append(i)
                        w = u
                        break
            self._word = tuple(word)
        return list(self._word)


def word_str(word):
    return "e" if not word else "".join(str(i) for i in word)


def identity(data):
    return AffineElement(weyl_identity(data), (0,) * data.rank)


def from_weyl(u):
    return AffineElement(u, (0,) * u.data.rank)


def translation(data, coroot):
    return AffineElement(weyl_identity(data), coroot)


def generator(data, i):
    key = ("aff_s", i)
    c = data._cache
    if key not in c:
        if i == 0:
            g = _geom(data)
            c[key] = AffineElement(reflection(data, g["theta"]), g["theta_v"])
        else:
            c[key] = from_weyl(simple_reflection(data, i))
    return c[key]


aff_generator = generator


def aff_multiply(w1, w2):
    return w1 * w2


def from_word(data, word):
    w = identity(data)
    for i in word:
        w = w * generator(data, i)
    return w


def parse_word(data, text):
    """'e' or a string of digits such as '2120' (single-digit ranks only)."""
    text = text.strip()
    if text in ("", "e"):
        return identity(data)
    return from_word(data, [int(ch) for ch in text])


def length_affine(w):
    return w.length()


def alcove_coordinates(w):
    return dict(zip((r.coords for r in w.data.positive_roots()), w.kvec()))


def separating_root(w, i):
    """Index (in the positive-root list) of the root whose hyperplane separates
    A_0 w and A_0 s_i w, and the two k values."""
    a, b = w.kvec(), w.left_mul(i).kvec()
    diff = [t for t in range(len(a)) if a[t] != b[t]]
    assert len(diff) == 1
    t = diff[0]
    return t, a[t], b[t]


def crossing_sign(w, i):
    """+1 when the step A_0 w -> A_0 s_i w is a positive crossing, else -1."""
    _, ka, kb = separating_root(w, i)
    return 1 if kb > ka else -1


def is_grassmannian(w):
    return w.is_grassmannian()


def in_J_alcove(w, J):
    if not J:
        return True
    k = w.kvec()
    idx = _J_root_indices(w.data, J)
    return all(k[t] == 0 for t in idx)


def _J_root_indices(data, J):
    key = ("Jroots", tuple(sorted(J)))
    c = data._cache
    if key not in c:
        Js = set(J)
        c[key] = [
            t
            for t, r in enumerate(data.positive_roots())
            if all(r.coords[j] == 0 for j in range(data.rank) if j + 1 not in Js)
        ]
    return c[key]


def enumerate_grassmannians_up_to(data, L):
    """Affine Grassmannian elements of length <= L, by BFS on positive crossings."""
    e = identity(data)
    out = [e]
    seen = {e}
    level = [e]
    for _ in range(L):
        nxt = []
        for w in level:
            for i in range(data.rank + 1):
                u = w.left_mul(i)
                if u not in seen and u.is_grassmannian() and u.length() == w.length() + 1:
                    seen.add(u)
                    nxt.append(u)
        nxt.sort(key=lambda u: u.reduced_word())
        out.extend(nxt)
        level = nxt
    return out


def bfs_lengths(data, L):
    """Word-length oracle: BFS in the Cayley graph of (W_a, S_a) up to distance L.
    Returns {element: distance}."""
    e = identity(data)
    dist = {e: 0}
    q = deque([e])
    while q:
        w = q.popleft()
        d = dist[w]
        if d == L:
            continue
        for i in range(data.rank + 1):
            u = w.left_mul(i)
            if u not in dist:
                dist[u] = d + 1
                q.append(u)
    return dist


# localization: reading a point back as an alcove


def _pair(root, p):
    return sum(a * b for a, b in zip(root, p))


def _reflect_point(data, p, i):
    """(p)s_i for the scaled point p (i = 0 allowed)."""
    g = _geom(data)
    n, a, s = data.rank, g["A"], g["scale"]
    if i == 0:
        th, thv = g["theta"], g["theta_v"]
        c = _pair(th, p) - s
        # x - ((x, theta) - 1) theta^vee
        return tuple(p[j] - c * sum(thv[t] * a[t][j] for t in range(n)) for j in range(n))
    c = p[i - 1]
    return tuple(p[j] - c * a[i - 1][j] for j in range(n))


def locate(data, point):
    """The element w with sample point exactly ``point`` (scaled coordinates)."""
    g = _geom(data)
    s, th = g["scale"], g["theta"]
    word = []
    p = tuple(point)
    while True:
        i = next((j for j in range(data.rank) if p[j] < 0), None)
        if i is not None:
            word.append(i + 1)
            p = _reflect_point(data, p, i + 1)
        elif _pair(th, p) > s:
            word.append(0)
            p = _reflect_point(data, p, 0)
        else:
            break
    if p != g["p0"]:
        raise AssertionError("point is not an alcove sample point")
    w = identity(data)
    for i in reversed(word):
        w = w * generator(data, i)
    return w


def star_translate(w, mu):
    """w * t_mu: the alcove A_0 w + mu read back as an element of W_a.
    ``mu`` is a GeoWeight or a tuple of fundamental-weight coordinates."""
    data = w.data
    m = mu.coords if isinstance(mu, GeoWeight) else tuple(mu)
    if any(Fraction(x).denominator != 1 for x in m):
        raise ValueError("mu must lie in the weight lattice P")
    s = _geom(data)["scale"]
    p = tuple(a + s * int(b) for a, b in zip(w.point(), m))
    return locate(data, p)


# J-alcoves


def _components(data, J):
    J = sorted(J)
    a = data.finite_cartan
    comps, seen = [], set()
    for j in J:
        if j in seen:
            continue
        comp, stack = [], [j]
        seen.add(j)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in J:
                if y not in seen and a[x - 1][y - 1]:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _J_walls(data, J):
    """Affine reflections bounding A_J: (s_j, 0) for j in J and
    (s_{theta_K}, theta_K^vee) for each connected component K of J."""
    key = ("Jwalls", tuple(sorted(J)))
    c = data._cache
    if key not in c:
        walls = []
        for j in sorted(J):
            root = tuple(int(t == j - 1) for t in range(data.rank))
            walls.append((root, 0, from_weyl(simple_reflection(data, j))))
        for comp in _components(data, J):
            roots = [
                r.coords
                for r in data.positive_roots()
                if all(r.coords[t] == 0 for t in range(data.rank) if t + 1 not in comp)
            ]
            th = max(roots, key=sum)
            thv = data.coroot(RootVector(th)).coords
            walls.append((th, 1, AffineElement(reflection(data, th), thv)))
        c[key] = walls
    return c[key]


def project_to_J_alcove(x, J):
    """p_J(x): the unique x w (w in W_J x Q_J^vee) whose alcove lies in A_J."""
    if not J:
        return x
    data = x.data
    s = _geom(data)["scale"]
    walls = _J_walls(data, J)
    while True:
        p = x.point()
        for root, level, refl in walls:
            v = _pair(root, p)
            if (level == 0 and v < 0) or (level == 1 and v > s):
                x = x * refl
                break
        else:
            return x


def bullet_translate(u, alpha, J):
    """u . t_alpha = p_J(u t_alpha) for u in A_J and alpha a coroot (any lift)."""
    if not in_J_alcove(u, J):
        raise ValueError("u must lie in A_J")
    return project_to_J_alcove(u * translation(u.data, alpha), J)


def quotient_class(data, coroot, J):
    """Class of a coroot in Q^vee / Q_J^vee: keep the J'-coordinates."""
    return tuple(c for i, c in enumerate(coroot) if i + 1 not in set(J))


def lift_class(data, cls, J):
    Jp = [i for i in range(1, data.rank + 1) if i not in set(J)]
    out = [0] * data.rank
    for i, c in zip(Jp, cls):
        out[i - 1] = c
    return tuple(out)


def vJ(data, alpha, J):
    """The unique v in W_J with v t_alpha in A_J."""
    hits = [
        v for v in enumerate_parabolic(data, J) if in_J_alcove(from_weyl(v) * translation(data, alpha), J)
    ]
    if len(hits) != 1:
        raise AssertionError("v_J is not unique")
    return hits[0]


def UJ_factor(x, J):
    """For x in A_J return (u', class) with u' in W^J and x = u' . t_class."""
    if not in_J_alcove(x, J):
        raise ValueError("x must lie in A_J")
    u = min_coset_rep(x.finite, J)
    cls = quotient_class(x.data, x.trans, J)
    return u, cls


def enumerate_J_window(data, J, bound):
    """All alcoves in A_J with |k_alpha| <= bound for every positive root,
    found by BFS through crossings that stay in the region."""
    e = identity(data)
    seen = {e}
    q = deque([e])
    while q:
        w = q.popleft()
        for i in range(data.rank + 1):
            u = w.left_mul(i)
            if u in seen:
                continue
            if in_J_alcove(u, J) and max(abs(k) for k in u.kvec()) <= bound:
                seen.add(u)
                q.append(u)
    return seen


def weyl_in_J_alcove(data, J):
    """W intersected with A_J, as elements of W (equals W^J)."""
    return [u for u in enumerate_group(data) if in_J_alcove(from_weyl(u), J)]
