"""Finite Weyl groups as integer matrices acting on simple-root coordinates.

An element w is stored as the matrix R whose j-th column is w(alpha_j) written
in simple roots, so R_{uv} = R_u R_v.  Reduced words are read left to right:
the word (i_1, ..., i_k) means s_{i_1} ... s_{i_k}.
"""

from fractions import Fraction

from .cartan import RootVector


def _matmul(a, b):
    n, m, k = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(m)) for j in range(k)) for i in range(n))


def _matvec(a, v):
    return tuple(sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a)))


class WeylElement:
    __slots__ = ("data", "action", "_length", "_word", "_inv", "_hash", "_coroot_right")

    def __init__(self, data, action):
        self.data = data
        self.action = tuple(tuple(r) for r in action)
        self._length = None
        self._word = None
        self._inv = None
        self._hash = None
        self._coroot_right = None

    @property
    def cached_length(self):
        return self._length

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.action == other.action

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.action)
        return self._hash

    def __mul__(self, other):
        if self.data.rank != other.data.rank:
            raise ValueError("dimension mismatch")
        return WeylElement(self.data, _matmul(self.action, other.action))

    def __repr__(self):
        w = self.reduced_word()
        return "WeylElement(" + ("e" if not w else "".join(map(str, w))) + ")"

    def apply_root(self, coords):
        """w(beta) for beta in simple-root coordinates."""
        return _matvec(self.action, coords)

    def apply(self, x):
        if isinstance(x, RootVector):
            if x.is_coroot:
                return RootVector(self.apply_coroot(x.coords), True)
            return RootVector(self.apply_root(x.coords))
        from .cartan import GeoWeight

        if isinstance(x, GeoWeight):
            # (w x, alpha_j) = (x, w^{-1} alpha_j)
            r = self.inverse().action
            n = len(r)
            return GeoWeight(tuple(sum(x.coords[i] * r[i][j] for i in range(n)) for j in range(n)))
        raise TypeError("cannot apply to " + type(x).__name__)

    def apply_coroot(self, coords):
        d = self.data.half_norms
        n = len(coords)
        r = self.action
        # w(alpha_j^vee) = sum_i R_ij d_i / d_j alpha_i^vee
        out = [sum(Fraction(r[i][j] * d[i]) / d[j] * coords[j] for j in range(n)) for i in range(n)]
        return tuple(int(x) for x in out)

    def right_coroot(self, coords):
        """w^{-1}(lambda) for a coroot lambda; this is the right action (lambda)w."""
        if self._coroot_right is None:
            inv = self.inverse()
            n = self.data.rank
            d = self.data.half_norms
            r = inv.action
            self._coroot_right = tuple(
                tuple(int(Fraction(r[i][j] * d[i]) / d[j]) for j in range(n)) for i in range(n)
            )
        m = self._coroot_right
        return tuple(sum(m[i][j] * coords[j] for j in range(len(coords))) for i in range(len(coords)))

    def length(self):
        if self._length is None:
            self._length = sum(
                1 for b in self.data.positive_roots() if any(c < 0 for c in self.apply_root(b.coords))
            )
        return self._length

    def left_descents(self):
        """i with l(s_i w) < l(w), i.e. w^{-1}(alpha_i) < 0."""
        inv = self.inverse().action
        n = self.data.rank
        return [i + 1 for i in range(n) if any(inv[k][i] < 0 for k in range(n))]

    def right_descents(self):
        """i with l(w s_i) < l(w), i.e. w(alpha_i) < 0."""
        n = self.data.rank
        return [i + 1 for i in range(n) if any(self.action[k][i] < 0 for k in range(n))]

    def reduced_word(self):
        """Greedy reduced word: repeatedly strip the smallest left descent."""
        if self._word is None:
            word = []
            w = self
            while True:
                ds = w.left_descents()
                if not ds:
                    break
                word.append(ds[0])
                w = simple_reflection(self.data, ds[0]) * w
            self._word = tuple(word)
            self._length = len(word)
        return list(self._word)

    def inverse(self):
        if self._inv is None:
            # w is orthogonal for the invariant form: R^{-1} = G^{-1} R^t G
            g = self.data.gram
            gi = self.data._cache.get("gram_inv")
            if gi is None:
                from .cartan import _rational_inverse

                gi = self.data._cache["gram_inv"] = _rational_inverse(g)
            rt = tuple(zip(*self.action))
            m = _matmul(_matmul(gi, rt), g)
            w = WeylElement(self.data, [[int(x) for x in r] for r in m])
            w._inv = self
            w._length = self._length
            self._inv = w
        return self._inv

    def is_identity(self):
        return all(self.action[i][j] == (i == j) for i in range(len(self.action)) for j in range(len(self.action)))


def identity(data):
    n = data.rank
    return WeylElement(data, [[int(i == j) for j in range(n)] for i in range(n)])


def simple_reflection(data, i):
    n = data.rank
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    key = ("s", i)
    cache = data._cache
    if key not in cache:
        a = data.finite_cartan
        m = [[int(r == c) for c in range(n)] for r in range(n)]
        for j in range(n):
            m[i - 1][j] -= a[i - 1][j]
        w = WeylElement(data, m)
        w._length = 1
        w._word = (i,)
        w._inv = w
        cache[key] = w
    return cache[key]


def from_word(data, word):
    w = identity(data)
    for i in word:
        w = w * simple_reflection(data, i)
    return w


def multiply(u, v):
    return u * v


def apply(u, x):
    return u.apply(x)


def length(u):
    return u.length()


def reduced_word(u):
    return u.reduced_word()


def reflection(data, root):
    """s_beta for a root beta (simple-root coordinates)."""
    n = data.rank
    b = tuple(root.coords if isinstance(root, RootVector) else root)
    bv = data.coroot(RootVector(b)).coords
    a = data.finite_cartan
    # s_beta(alpha_j) = alpha_j - <beta^vee, alpha_j> beta
    m = [[int(r == c) for c in range(n)] for r in range(n)]
    for j in range(n):
        p = sum(bv[i] * a[i][j] for i in range(n))
        for r in range(n):
            m[r][j] -= p * b[r]
    return WeylElement(data, m)


def longest_element(data):
    return enumerate_group(data)[-1]


def enumerate_group(data):
    """All of W, ordered by (length, reduced word)."""
    if "W" not in data._cache:
        e = identity(data)
        e._length = 0
        e._word = ()
        seen = {e}
        level = [e]
        out = [e]
        while level:
            nxt = []
            for w in level:
                for i in range(1, data.rank + 1):
                    u = simple_reflection(data, i) * w
                    if u not in seen and u.length() == w.length() + 1:
                        seen.add(u)
                        nxt.append(u)
            nxt.sort(key=lambda u: u.reduced_word())
            out.extend(nxt)
            level = nxt
        data._cache["W"] = out
    return data._cache["W"]


def min_coset_rep(u, J):
    """Minimal length element u^J of the left coset u W_J (no right descent in J)."""
    J = set(J)
    while True:
        d = [j for j in u.right_descents() if j in J]
        if not d:
            return u
        u = u * simple_reflection(u.data, d[0])


def coset_factor(u, J):
    """(u^J, u_J) with u = u^J u_J and u_J in W_J."""
    uj = min_coset_rep(u, J)
    return uj, uj.inverse() * u


def is_min_coset_rep(u, J):
    return not set(u.right_descents()) & set(J)


def enumerate_WJ(data, J):
    return [w for w in enumerate_group(data) if is_min_coset_rep(w, J)]


def enumerate_parabolic(data, J):
    """The parabolic subgroup W_J."""
    return [w for w in enumerate_group(data) if set(w.reduced_word()) <= set(J)]


def complement(data, Jprime):
    return sorted(set(range(1, data.rank + 1)) - set(Jprime))
