"""Exact Laurent polynomials in Q[z_1^{+-1}, ..., z_r^{+-1}], rational functions
over them, and dense linear algebra over the fraction field."""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm


class NotDivisible(ArithmeticError):
    pass


class Singular(ArithmeticError):
    """Raised by FFMatrix.inverse; ``kernel`` is a nonzero vector v with M v = 0."""

    def __init__(self, kernel):
        super().__init__("matrix is singular")
        self.kernel = kernel


def _q(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    return c


def _fmt_coef(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms=None, nvars=0):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = tuple(e)
                    if len(e) != nvars:
                        raise ValueError("exponent length does not match nvars")
                    clean[e] = _q(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, nvars):
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, nvars):
        return cls._raw({(0,) * nvars: _q(c)} if c else {}, nvars)

    @classmethod
    def monomial(cls, exps, coef=1, nvars=None):
        exps = tuple(int(x) for x in exps)
        return cls._raw({exps: _q(coef)} if coef else {}, len(exps) if nvars is None else nvars)

    @classmethod
    def var(cls, i, nvars):
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("nvars mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return LaurentPoly._raw(t, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly._raw({}, self.nvars)
            return LaurentPoly._raw({e: _q(c * other) for e, c in self.terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: _q(c) for e, c in t.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials have negative powers")
            (e, c), = self.terms.items()
            return LaurentPoly.monomial([k * x for x in e], Fraction(1) / Fraction(c) ** (-k))
        out = LaurentPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self.divide_exact(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return self.format()

    def format(self, names=None):
        if not self.terms:
            return "0"
        names = names or [f"z{i + 1}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = Fraction(self.terms[e])
            mono = "*".join(
                names[i] if x == 1 else f"{names[i]}^{x}" for i, x in enumerate(e) if x
            )
            if not mono:
                s = _fmt_coef(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = _fmt_coef(c) + "*" + mono
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    # structural queries

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def is_nonnegative(self):
        return all(c > 0 for c in self.terms.values())

    def lead(self):
        """Leading (exponent, coefficient) for the lexicographic order."""
        e = max(self.terms)
        return e, self.terms[e]

    def min_exponents(self):
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def max_exponents(self):
        return tuple(max(e[i] for e in self.terms) for i in range(self.nvars))

    def shift(self, exps):
        return LaurentPoly._raw(
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}, self.nvars
        )

    def bar(self):
        return LaurentPoly._raw({tuple(-a for a in e): c for e, c in self.terms.items()}, self.nvars)

    def content(self):
        """Positive rational content: gcd of numerators over lcm of denominators."""
        cs = [Fraction(c) for c in self.terms.values()]
        if not cs:
            return Fraction(0)
        return Fraction(reduce(gcd, (c.numerator for c in cs)), reduce(lcm, (c.denominator for c in cs)))

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for x, k in zip(point, e):
                v *= Fraction(x) ** k
            total += v
        return _q(total)

    def evaluate_mod(self, point, p):
        """Value at an integer point modulo the prime p (coefficients must be p-integral)."""
        total = 0
        for e, c in self.terms.items():
            c = Fraction(c)
            v = c.numerator * pow(c.denominator, -1, p)
            for x, k in zip(point, e):
                v = v * pow(x, k, p) % p
            total += v
        return total % p

    def divide_exact(self, q):
        """Return r with r*q == self, or raise NotDivisible.

        Division is done on the polynomial parts after clearing monomial content,
        with the lexicographic order.  Because monomials are units, divisibility
        is decided exactly."""
        if not isinstance(q, LaurentPoly):
            q = LaurentPoly.constant(q, self.nvars)
        if not q.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return LaurentPoly._raw({}, self.nvars)
        if q.is_monomial():
            (e, c), = q.terms.items()
            inv = Fraction(1) / Fraction(c)
            return LaurentPoly._raw(
                {tuple(a - b for a, b in zip(k, e)): _q(v * inv) for k, v in self.terms.items()},
                self.nvars,
            )
        qe, qc = q.lead()
        qc_inv = Fraction(1) / Fraction(qc)
        rem = dict(self.terms)
        out = {}
        qmin = q.min_exponents()
        pmin = self.min_exponents()
        # the quotient's exponents are bounded below by pmin - qmin coordinatewise
        floor = tuple(a - b for a, b in zip(pmin, qmin))
        while rem:
            re = max(rem)
            me = tuple(a - b for a, b in zip(re, qe))
            if any(a < b for a, b in zip(me, floor)):
                raise NotDivisible("not divisible")
            mc = _q(rem[re] * qc_inv)
            out[me] = mc
            for e, c in q.terms.items():
                k = tuple(a + b for a, b in zip(e, me))
                v = rem.get(k, 0) - mc * c
                if v:
                    rem[k] = _q(v)
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(out, self.nvars)

    # serialization helpers

    def to_json(self):
        return [
            {"exps": list(e), "coef": _fmt_coef(self.terms[e])} for e in sorted(self.terms)
        ]

    @classmethod
    def from_json(cls, data, nvars):
        return cls({tuple(t["exps"]): Fraction(t["coef"]) for t in data}, nvars)


def lp(nvars, terms=None):
    """Shorthand: lp(3, {(1,0,0): 1, (0,0,1): -1}) is z1 - z3."""
    return LaurentPoly(terms or {}, nvars)


class RationalFunction:
    """num/den with Laurent numerator and denominator.

    Normal form: the denominator has no monomial content, its lexicographic
    leading coefficient is 1, and an exact quotient is taken whenever one exists.
    No gcd is computed, so equality is decided by cross multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.constant(1, num.nvars)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, LaurentPoly.constant(1, p.nvars))

    @property
    def nvars(self):
        return self.num.nvars

    def is_poly(self):
        return self.den.is_constant()

    def to_poly(self):
        if not self.is_poly():
            raise NotDivisible("not a Laurent polynomial")
        return self.num * (Fraction(1) / Fraction(self.den.constant_term()))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.from_poly(LaurentPoly.constant(other, self.nvars))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RationalFunction.from_poly(LaurentPoly._raw({}, self.nvars))
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable (no canonical form)")

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den.is_constant() and self.den.constant_term() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def bar(self):
        return RationalFunction(self.num.bar(), self.den.bar())

    def evaluate(self, point):
        return Fraction(self.num.evaluate(point)) / Fraction(self.den.evaluate(point))


def _normalize(num, den):
    if not num:
        return num, LaurentPoly.constant(1, num.nvars)
    shift = tuple(-x for x in den.min_exponents())
    if any(shift):
        den = den.shift(shift)
        num = num.shift(shift)
    if not den.is_constant():
        try:
            return num.divide_exact(den), LaurentPoly.constant(1, num.nvars)
        except NotDivisible:
            pass
    _, c = den.lead()
    if c != 1:
        inv = Fraction(1) / Fraction(c)
        den = den * inv
        num = num * inv
    return num, den


def as_rf(x, nvars):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFunction.from_poly(x)
    return RationalFunction.from_poly(LaurentPoly.constant(x, nvars))


class FFMatrix:
    """Dense matrix over Q(z) with RationalFunction entries."""

    def __init__(self, rows, nvars):
        self.nvars = nvars
        self.rows = [[as_rf(x, nvars) for x in r] for r in rows]

    @property
    def shape(self):
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @classmethod
    def identity(cls, n, nvars):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], nvars)

    @classmethod
    def zeros(cls, n, m, nvars):
        return cls([[0] * m for _ in range(n)], nvars)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def transpose(self):
        n, m = self.shape
        return FFMatrix([[self.rows[i][j] for i in range(n)] for j in range(m)], self.nvars)

    def map(self, f):
        return FFMatrix([[f(x) for x in r] for r in self.rows], self.nvars)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("dimension mismatch")
        return FFMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.nvars)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("dimension mismatch")
        return FFMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.nvars)

    def scale(self, c):
        return FFMatrix([[a * c for a in r] for r in self.rows], self.nvars)

    def __mul__(self, other):
        if isinstance(other, FFMatrix):
            n, m = self.shape
            m2, k = other.shape
            if m != m2:
                raise ValueError("dimension mismatch")
            zero = as_rf(0, self.nvars)
            out = []
            for i in range(n):
                row = []
                for j in range(k):
                    acc = zero
                    for t in range(m):
                        a = self.rows[i][t]
                        if a:
                            b = other.rows[t][j]
                            if b:
                                acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return FFMatrix(out, self.nvars)
        return self.scale(other)

    def apply(self, vec):
        zero = as_rf(0, self.nvars)
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, FFMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def inverse(self):
        """Gauss-Jordan elimination, pivot = first nonzero entry in row order."""
        n, m = self.shape
        if n != m:
            raise ValueError("square matrix required")
        one = as_rf(1, self.nvars)
        zero = as_rf(0, self.nvars)
        a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        pivcols = []
        row = 0
        for col in range(n):
            piv = next((i for i in range(row, n) if a[i][col]), None)
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            inv = a[row][col].inverse()
            a[row] = [x * inv if x else x for x in a[row]]
            for i in range(n):
                if i != row and a[i][col]:
                    f = a[i][col]
                    a[i] = [x - f * y if y else x for x, y in zip(a[i], a[row])]
            pivcols.append(col)
            row += 1
        if row < n:
            free = next(c for c in range(n) if c not in pivcols)
            v = [zero] * n
            v[free] = one
            for r, c in enumerate(pivcols):
                v[c] = -a[r][free]
            raise Singular(v)
        return FFMatrix([r[n:] for r in a], self.nvars)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


def minimal_polynomial(A):
    """Monic coefficients [c_0, ..., c_{d-1}, 1] of the minimal polynomial of A.

    Vectorized powers I, A, A^2, ... are reduced against the earlier ones; the
    first dependency gives the annihilator."""
    n, _ = A.shape
    nv = A.nvars
    zero = as_rf(0, nv)
    basis = []  # (reduced vector, combination of powers, pivot index)
    power = FFMatrix.identity(n, nv)
    for d in range(n + 1):
        vec = [x for r in power.rows for x in r]
        comb = [zero] * d + [as_rf(1, nv)]
        for bvec, bcomb, piv in basis:
            f = vec[piv]
            if f:
                vec = [x - f * y if y else x for x, y in zip(vec, bvec)]
                comb = [c - f * (bcomb[i] if i < len(bcomb) else zero) for i, c in enumerate(comb)]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            return comb
        inv = vec[piv].inverse()
        basis.append(([x * inv if x else x for x in vec], [c * inv for c in comb], piv))
        power = power * A
    raise AssertionError("no annihilator found up to degree n")
