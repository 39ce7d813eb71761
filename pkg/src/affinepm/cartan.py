"""Affine Cartan data for untwisted types: Cartan matrices, marks, comarks,
roots, coroots and the pairing between the weight lattice and the roots.

Conventions.  ``a[i][j] = <alpha_i^vee, alpha_j> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)``.
Roots are stored by their simple-root coordinates, coroots by their
simple-coroot coordinates.  A geometric weight x is stored by the numbers
``(x, alpha_j)``, i.e. in the basis of fundamental weights dual to the roots.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd


class UnsupportedType(ValueError):
    pass


@dataclass(frozen=True)
class RootVector:
    coords: tuple
    is_coroot: bool = False

    def is_positive(self):
        return all(c >= 0 for c in self.coords) and any(self.coords)

    def __neg__(self):
        return RootVector(tuple(-c for c in self.coords), self.is_coroot)


@dataclass(frozen=True)
class GeoWeight:
    coords: tuple

    def __add__(self, other):
        return GeoWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return GeoWeight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GeoWeight(tuple(-a for a in self.coords))

    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self.coords)


def _finite_cartan(t, n):
    if t == "G2":
        if n != 2:
            raise UnsupportedType("G2 has rank 2")
        return [[2, -3], [-1, 2]]
    a = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    if t == "A":
        if n < 1:
            raise UnsupportedType("A_n needs n >= 1")
    elif t == "B":
        if n < 2:
            raise UnsupportedType("B_n needs n >= 2")
        a[n - 1][n - 2] = -2
    elif t == "C":
        if n < 2:
            raise UnsupportedType("C_n needs n >= 2")
        a[n - 2][n - 1] = -2
    elif t == "D":
        if n < 4:
            raise UnsupportedType("D_n needs n >= 4")
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    else:
        raise UnsupportedType(f"unsupported type {t!r}")
    return a


def _primitive(v):
    g = reduce(gcd, v)
    return tuple(x // g for x in v)


@dataclass(eq=False)
class AffineCartanData:
    type_label: str
    rank: int
    finite_cartan: list
    affine_cartan: list
    marks: tuple
    comarks: tuple
    gram: list
    half_norms: tuple  # (alpha_i, alpha_i)/2
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def n(self):
        return self.rank

    @property
    def name(self):
        return "G2" if self.type_label == "G2" else f"{self.type_label}{self.rank}"

    def __eq__(self, other):
        return isinstance(other, AffineCartanData) and (self.type_label, self.rank) == (
            other.type_label,
            other.rank,
        )

    def __hash__(self):
        return hash((self.type_label, self.rank))

    def det(self):
        """|P / Q^vee| for the geometric weight lattice P."""
        if "det" not in self._cache:
            self._cache["det"] = _int_det(self.finite_cartan)
        return self._cache["det"]

    # roots

    def positive_roots(self):
        if "roots" not in self._cache:
            n, a = self.rank, self.finite_cartan
            simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
            seen = set(simple)
            frontier = list(simple)
            while frontier:
                new = []
                for b in frontier:
                    for i in range(n):
                        p = sum(a[i][j] * b[j] for j in range(n))
                        c = tuple(b[j] - (p if j == i else 0) for j in range(n))
                        if all(x >= 0 for x in c) and c not in seen:
                            seen.add(c)
                            new.append(c)
                frontier = new
            self._cache["roots"] = [
                RootVector(c) for c in sorted(seen, key=lambda c: (sum(c), c))
            ]
        return self._cache["roots"]

    def highest_root(self):
        return max(self.positive_roots(), key=lambda r: sum(r.coords))

    def inner(self, x, y):
        """(x, y) for two root-coordinate vectors."""
        n = self.rank
        return sum(self.gram[i][j] * x[i] * y[j] for i in range(n) for j in range(n))

    def coroot(self, root):
        c = root.coords if isinstance(root, RootVector) else root
        nn = self.inner(c, c)
        out = tuple(Fraction(2 * c[j] * self.half_norms[j]) / nn for j in range(self.rank))
        if any(x.denominator != 1 for x in out):
            raise AssertionError("non-integral coroot")
        return RootVector(tuple(int(x) for x in out), True)

    def coroot_to_weight(self, c):
        """Simple-coroot coordinates -> fundamental-weight coordinates."""
        c = c.coords if isinstance(c, RootVector) else c
        n, a = self.rank, self.finite_cartan
        return GeoWeight(tuple(sum(c[i] * a[i][j] for i in range(n)) for j in range(n)))

    def root_to_weight(self, r):
        r = r.coords if isinstance(r, RootVector) else r
        n = self.rank
        return GeoWeight(tuple(sum(r[i] * self.gram[i][j] for i in range(n)) for j in range(n)))

    def weight_to_coroot(self, w):
        """Inverse of coroot_to_weight; rational coordinates in general."""
        w = w.coords if isinstance(w, GeoWeight) else w
        inv = self._inverse_cartan()
        n = self.rank
        return tuple(sum(Fraction(w[j]) * inv[j][i] for j in range(n)) for i in range(n))

    def _inverse_cartan(self):
        if "ainv" not in self._cache:
            self._cache["ainv"] = _rational_inverse(self.finite_cartan)
        return self._cache["ainv"]

    def fundamental_weight(self, i):
        """omega_i for i in 1..n."""
        return GeoWeight(tuple(1 if j == i - 1 else 0 for j in range(self.rank)))

    def pairing(self, x, y):
        """(x, y) with x a GeoWeight, root or coroot and y a root."""
        yc = y.coords if isinstance(y, RootVector) else tuple(y)
        if isinstance(y, RootVector) and y.is_coroot:
            raise ValueError("second argument must be a root")
        if isinstance(x, GeoWeight):
            w = x
        elif isinstance(x, RootVector) and x.is_coroot:
            w = self.coroot_to_weight(x)
        else:
            w = self.root_to_weight(x)
        if len(w.coords) != len(yc):
            raise ValueError("rank mismatch")
        return sum(Fraction(a) * b for a, b in zip(w.coords, yc))


def _int_det(m):
    m = [[Fraction(x) for x in r] for r in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return int(det)


def _rational_inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c])
        a[c], a[p] = a[p], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [r[n:] for r in a]


def _symmetrizer(a):
    n = len(a)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if a[i][j] and d[j] is None:
                # d_i a_ij = d_j a_ji
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    top = max(d)
    return tuple(x / top for x in d)


def _normalize_label(type_label, rank):
    t = str(type_label).upper()
    if t in ("G", "G2"):
        return "G2", 2 if rank is None else rank
    if len(t) > 1 and t[0] in "ABCD" and t[1:].isdigit():
        return t[0], int(t[1:])
    if rank is None:
        raise UnsupportedType("rank required")
    return t, int(rank)


def build_affine_data(type_label, rank=None):
    t, n = _normalize_label(type_label, rank)
    a = _finite_cartan(t, n)
    d = _symmetrizer(a)
    gram = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    data = AffineCartanData(t, n, a, None, None, None, gram, d)
    theta = data.highest_root().coords
    theta_v = data.coroot(RootVector(theta)).coords
    aff = [[2] + [-sum(theta_v[i] * a[i][j] for i in range(n)) for j in range(n)]]
    for i in range(n):
        aff.append([-sum(a[i][j] * theta[j] for j in range(n))] + list(a[i]))
    data.affine_cartan = aff
    data.marks = _primitive((1,) + tuple(theta))
    data.comarks = _primitive((1,) + tuple(theta_v))
    N = n + 1
    assert all(sum(aff[i][j] * data.marks[j] for j in range(N)) == 0 for i in range(N))
    assert all(sum(data.comarks[i] * aff[i][j] for i in range(N)) == 0 for j in range(N))
    return data


def positive_roots(data):
    return data.positive_roots()


def highest_root(data):
    return data.highest_root()


def pairing(data, x, y):
    return data.pairing(x, y)
