"""Univariate and bivariate polynomial arithmetic over the package's rings.

UniPoly is dense (coefficient vector indexed by degree).  BiPoly is sparse:
a map (i, j) -> nonzero coefficient for X^i Y^j; the support is what the
Newton-polytope code reads, and the benchmark inputs are sparse.

Coefficients may themselves be polynomials (via UniPolyRing / BiPolyRing
tags), which is how resultants in one variable of multivariate inputs are
computed: subresultant PRS only needs ring operations plus exact division.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    DegreeTooSmall,
    DivisionByZero,
    ExactDivisionFailed,
    NotInvertible,
    ZeroPolynomial,
)
from .rings import QQ, ZZ, Zmod


class UniPoly:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs, ring):
        vec = list(coeffs)
        while vec and ring.is_zero(vec[-1]):
            vec.pop()
        self.coeffs = tuple(vec)
        self.ring = ring

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls((), ring)

    @classmethod
    def constant(cls, c, ring):
        return cls((c,), ring)

    @classmethod
    def from_ints(cls, ints, ring):
        return cls([ring.from_int(int(c)) for c in ints], ring)

    @classmethod
    def monomial(cls, c, k, ring):
        return cls([ring.zero()] * k + [c], ring)

    @classmethod
    def variable(cls, ring):
        return cls([ring.zero(), ring.one()], ring)

    # -- basics ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if self.is_zero:
            raise ZeroPolynomial("leading coefficient of 0")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring.zero()

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, repr(self.ring)))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, UniPoly) or other.ring != self.ring:
            raise TypeError("operands live in different rings")

    def __add__(self, other):
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [self.coeff(k) + other.coeff(k) for k in range(n)], self.ring
        )

    def __sub__(self, other):
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [self.coeff(k) - other.coeff(k) for k in range(n)], self.ring
        )

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        self._same(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero(self.ring)
        zero = self.ring.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if self.ring.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.ring)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly.constant(self.ring.one(), self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c):
        """Multiply by a ring element."""
        return UniPoly([a * c for a in self.coeffs], self.ring)

    def evaluate(self, x):
        """Horner evaluation at x (a compatible element)."""
        if self.is_zero:
            return self.ring.zero()
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        """Substitution self(other(Y))."""
        acc = UniPoly.zero(self.ring)
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly.constant(c, self.ring)
        return acc

    def shift_arg(self, c) -> "UniPoly":
        """self(Y + c) for a ring element c."""
        lin = UniPoly([c, self.ring.one()], self.ring)
        return self.compose(lin)

    def derivative(self) -> "UniPoly":
        return UniPoly(
            [self.coeffs[k] * self.ring.from_int(k) for k in range(1, len(self.coeffs))],
            self.ring,
        )

    def map_coeffs(self, fn, ring) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs], ring)

    # -- division ----------------------------------------------------------

    def __divmod__(self, other: "UniPoly"):
        """Division with remainder; requires an invertible leading coefficient."""
        self._same(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        inv_lc = self.ring.inv(other.lc)
        rem = list(self.coeffs)
        d = other.degree
        if len(rem) - 1 < d:
            return UniPoly.zero(self.ring), self
        quo = [self.ring.zero()] * (len(rem) - d)
        for i in range(len(rem) - 1 - d, -1, -1):
            c = rem[i + d] * inv_lc
            quo[i] = c
            if not self.ring.is_zero(c):
                for j in range(d + 1):
                    rem[i + j] = rem[i + j] - c * other.coeffs[j]
        return UniPoly(quo, self.ring), UniPoly(rem[:d], self.ring)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def pseudo_divmod(self, other: "UniPoly"):
        """(Q, R) with lc(other)^(deg self - deg other + 1) * self = Q*other + R."""
        self._same(other)
        if other.is_zero:
            raise DivisionByZero("pseudo-division by zero")
        b = other.lc
        n = self.degree - other.degree + 1
        if n <= 0:
            # multiply by b^max(n,0) = identity case: deg self < deg other
            return UniPoly.zero(self.ring), self
        Q = UniPoly.zero(self.ring)
        R = self
        while not R.is_zero and R.degree >= other.degree:
            t = UniPoly.monomial(R.lc, R.degree - other.degree, self.ring)
            n -= 1
            Q = Q.scale(b) + t
            R = R.scale(b) - t * other
        for _ in range(n):
            Q = Q.scale(b)
            R = R.scale(b)
        return Q, R

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        """Exact quotient; raises ExactDivisionFailed when other does not
        divide self.  Works over any ring providing coefficient exact_div."""
        self._same(other)
        if other.is_zero:
            raise DivisionByZero("exact division by zero")
        if self.is_zero:
            return self
        ring = self.ring
        d = other.degree
        if self.degree < d:
            raise ExactDivisionFailed("degree too small")
        rem = list(self.coeffs)
        quo = [ring.zero()] * (len(rem) - d)
        for i in range(len(rem) - 1 - d, -1, -1):
            c = ring.exact_div(rem[i + d], other.coeffs[-1])
            quo[i] = c
            if not ring.is_zero(c):
                for j in range(d + 1):
                    rem[i + j] = rem[i + j] - c * other.coeffs[j]
        if any(not ring.is_zero(c) for c in rem):
            raise ExactDivisionFailed("inexact polynomial division")
        return UniPoly(quo, ring)

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        inv_lc = self.ring.inv(self.lc)
        return self.scale(inv_lc)

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"UniPoly({self.to_str('y')})"

    def to_str(self, var: str = "y") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if self.ring.is_zero(c):
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"({c})*{var}")
            else:
                parts.append(f"({c})*{var}^{k}")
        return " + ".join(parts)


class UniPolyRing:
    """Ring tag whose elements are UniPoly over a base ring."""

    is_field = False

    def __init__(self, base):
        self.base = base
        self.char = base.char

    def zero(self):
        return UniPoly.zero(self.base)

    def one(self):
        return UniPoly.constant(self.base.one(), self.base)

    def from_int(self, n: int):
        return UniPoly.constant(self.base.from_int(n), self.base)

    def is_zero(self, a: UniPoly) -> bool:
        return a.is_zero

    def inv(self, a: UniPoly) -> UniPoly:
        if a.degree == 0:
            return UniPoly.constant(self.base.inv(a.coeffs[0]), self.base)
        raise NotInvertible("non-constant polynomial is not a unit")

    def exact_div(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return a.exact_div(b)

    def __eq__(self, other):
        return isinstance(other, UniPolyRing) and other.base == self.base

    def __hash__(self):
        return hash(("UniPolyRing", repr(self.base)))

    def __repr__(self):
        return f"UniPolyRing({self.base!r})"


class BiPoly:
    __slots__ = ("terms", "ring")

    def __init__(self, terms, ring):
        clean = {}
        for (i, j), c in dict(terms).items():
            if not ring.is_zero(c):
                clean[(int(i), int(j))] = c
        self.terms = clean
        self.ring = ring

    @classmethod
    def zero(cls, ring):
        return cls({}, ring)

    @classmethod
    def constant(cls, c, ring):
        return cls({(0, 0): c}, ring)

    @classmethod
    def from_int_terms(cls, terms, ring):
        return cls({k: ring.from_int(int(c)) for k, c in dict(terms).items()}, ring)

    # -- basics --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("total degree of the zero polynomial")
        return max(i + j for i, j in self.terms)

    def deg_x(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(i for i, _ in self.terms)

    def deg_y(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(j for _, j in self.terms)

    def support(self) -> set[tuple[int, int]]:
        return set(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((frozenset(self.terms.items()), repr(self.ring)))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, BiPoly) or other.ring != self.ring:
            raise TypeError("operands live in different rings")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                out[k] = out[k] + c
            else:
                out[k] = c
        return BiPoly(out, self.ring)

    def __sub__(self, other):
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                out[k] = out[k] - c
            else:
                out[k] = -c
        return BiPoly(out, self.ring)

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()}, self.ring)

    def __mul__(self, other):
        self._same(other)
        out: dict[tuple[int, int], object] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                prod = a * b
                if k in out:
                    out[k] = out[k] + prod
                else:
                    out[k] = prod
        return BiPoly(out, self.ring)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = BiPoly.constant(self.ring.one(), self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c):
        return BiPoly({k: v * c for k, v in self.terms.items()}, self.ring)

    def map_coeffs(self, fn, ring) -> "BiPoly":
        return BiPoly({k: fn(c) for k, c in self.terms.items()}, ring)

    def diff_x(self) -> "BiPoly":
        out = {}
        for (i, j), c in self.terms.items():
            if i > 0:
                out[(i - 1, j)] = c * self.ring.from_int(i)
        return BiPoly(out, self.ring)

    def diff_y(self) -> "BiPoly":
        out = {}
        for (i, j), c in self.terms.items():
            if j > 0:
                out[(i, j - 1)] = c * self.ring.from_int(j)
        return BiPoly(out, self.ring)

    # -- evaluation / specialization ----------------------------------------

    def _powers(self, x, top: int):
        pows = [self.ring.one()]
        for _ in range(top):
            pows.append(pows[-1] * x)
        return pows

    def evaluate_x(self, x0) -> UniPoly:
        """The univariate polynomial f(x0, Y)."""
        if isinstance(x0, int):
            x0 = self.ring.from_int(x0)
        if not self.terms:
            return UniPoly.zero(self.ring)
        xp = self._powers(x0, max(i for i, _ in self.terms))
        out = [self.ring.zero()] * (max(j for _, j in self.terms) + 1)
        for (i, j), c in self.terms.items():
            out[j] = out[j] + c * xp[i]
        return UniPoly(out, self.ring)

    def evaluate_y(self, y0) -> UniPoly:
        """The univariate polynomial f(X, y0)."""
        if isinstance(y0, int):
            y0 = self.ring.from_int(y0)
        if not self.terms:
            return UniPoly.zero(self.ring)
        yp = self._powers(y0, max(j for _, j in self.terms))
        out = [self.ring.zero()] * (max(i for i, _ in self.terms) + 1)
        for (i, j), c in self.terms.items():
            out[i] = out[i] + c * yp[j]
        return UniPoly(out, self.ring)

    def evaluate(self, x0, y0):
        u = self.evaluate_x(x0)
        if isinstance(y0, int):
            y0 = self.ring.from_int(y0)
        if u.is_zero:
            return self.ring.zero()
        return u.evaluate(y0)

    def shift(self, a, b) -> "BiPoly":
        """f(X + a, Y + b), by binomial expansion of each term."""
        if isinstance(a, int):
            a = self.ring.from_int(a)
        if isinstance(b, int):
            b = self.ring.from_int(b)
        out: dict[tuple[int, int], object] = {}
        for (i, j), c in self.terms.items():
            ax = [self.ring.from_int(math.comb(i, k)) for k in range(i + 1)]
            by = [self.ring.from_int(math.comb(j, k)) for k in range(j + 1)]
            ap = self._powers(a, i)
            bp = self._powers(b, j)
            for k in range(i + 1):
                ca = c * ax[k] * ap[i - k]
                for l in range(j + 1):
                    key = (k, l)
                    val = ca * by[l] * bp[j - l]
                    if key in out:
                        out[key] = out[key] + val
                    else:
                        out[key] = val
        return BiPoly(out, self.ring)

    def swap_vars(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()}, self.ring)

    # -- structure -----------------------------------------------------------

    def lc_y(self) -> UniPoly:
        """Leading coefficient w.r.t. Y, as a polynomial in X."""
        d = self.deg_y()
        out: dict[int, object] = {}
        for (i, j), c in self.terms.items():
            if j == d:
                out[i] = c
        top = max(out)
        return UniPoly([out.get(i, self.ring.zero()) for i in range(top + 1)], self.ring)

    def as_y_poly(self) -> UniPoly:
        """View as a polynomial in Y with UniPoly-in-X coefficients."""
        outer = UniPolyRing(self.ring)
        if self.is_zero:
            return UniPoly.zero(outer)
        dy = self.deg_y()
        cols: list[dict[int, object]] = [dict() for _ in range(dy + 1)]
        for (i, j), c in self.terms.items():
            cols[j][i] = c
        coeffs = []
        for col in cols:
            if col:
                top = max(col)
                coeffs.append(
                    UniPoly([col.get(i, self.ring.zero()) for i in range(top + 1)], self.ring)
                )
            else:
                coeffs.append(UniPoly.zero(self.ring))
        return UniPoly(coeffs, outer)

    @classmethod
    def from_y_poly(cls, p: UniPoly) -> "BiPoly":
        base = p.ring.base
        terms = {}
        for j, cx in enumerate(p.coeffs):
            for i, c in enumerate(cx.coeffs):
                if not base.is_zero(c):
                    terms[(i, j)] = c
        return cls(terms, base)

    def leading_term_grlex(self):
        """((i, j), c) maximal in graded lex order (total degree, then i)."""
        if self.is_zero:
            raise ZeroPolynomial("leading term of 0")
        key = max(self.terms, key=lambda ij: (ij[0] + ij[1], ij[0]))
        return key, self.terms[key]

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        """Exact quotient in the bivariate ring; raises ExactDivisionFailed
        when other does not divide self."""
        self._same(other)
        if other.is_zero:
            raise DivisionByZero("exact division by zero")
        ring = self.ring
        rem = BiPoly(dict(self.terms), ring)
        quo: dict[tuple[int, int], object] = {}
        (oi, oj), oc = other.leading_term_grlex()
        while not rem.is_zero:
            (ri, rj), rc = rem.leading_term_grlex()
            if ri < oi or rj < oj:
                raise ExactDivisionFailed("inexact bivariate division")
            c = ring.exact_div(rc, oc)
            k = (ri - oi, rj - oj)
            quo[k] = c
            rem = rem - BiPoly({k: c}, ring) * other
        return BiPoly(quo, ring)

    def divides(self, other: "BiPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ExactDivisionFailed:
            return False

    # -- display -------------------------------------------------------------

    def __repr__(self):
        return f"BiPoly({self.to_str()})"

    def to_str(self) -> str:
        if self.is_zero:
            return "0"
        keys = sorted(self.terms, key=lambda ij: (ij[0] + ij[1], ij[0]), reverse=True)
        parts = []
        for i, j in keys:
            c = self.terms[(i, j)]
            mono = []
            if i == 1:
                mono.append("X")
            elif i > 1:
                mono.append(f"X^{i}")
            if j == 1:
                mono.append("Y")
            elif j > 1:
                mono.append(f"Y^{j}")
            cs = str(c)
            if mono and cs == "1":
                parts.append("*".join(mono))
            elif mono and cs == "-1":
                parts.append("-" + "*".join(mono))
            else:
                parts.append("*".join([cs] + mono))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


class BiPolyRing:
    """Ring tag whose elements are BiPoly over a base ring."""

    is_field = False

    def __init__(self, base):
        self.base = base
        self.char = base.char

    def zero(self):
        return BiPoly.zero(self.base)

    def one(self):
        return BiPoly.constant(self.base.one(), self.base)

    def from_int(self, n: int):
        return BiPoly.constant(self.base.from_int(n), self.base)

    def is_zero(self, a: BiPoly) -> bool:
        return a.is_zero

    def inv(self, a: BiPoly) -> BiPoly:
        if set(a.terms) == {(0, 0)}:
            return BiPoly.constant(self.base.inv(a.terms[(0, 0)]), self.base)
        raise NotInvertible("non-constant polynomial is not a unit")

    def exact_div(self, a: BiPoly, b: BiPoly) -> BiPoly:
        return a.exact_div(b)

    def __eq__(self, other):
        return isinstance(other, BiPolyRing) and other.base == self.base

    def __hash__(self):
        return hash(("BiPolyRing", repr(self.base)))

    def __repr__(self):
        return f"BiPolyRing({self.base!r})"


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


def evaluate_x(f: BiPoly, x0) -> UniPoly:
    """f(x0, Y)."""
    return f.evaluate_x(x0)


def total_degree(f: BiPoly) -> int:
    return f.total_degree()


def uni_gcd(u: UniPoly, v: UniPoly) -> UniPoly:
    """Monic gcd over a field."""
    if not u.ring.is_field:
        raise TypeError("uni_gcd needs field coefficients")
    a, b = u, v
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def uni_ext_gcd(u: UniPoly, v: UniPoly):
    """(g, s, t) with s*u + t*v = g, g the monic gcd (field coefficients)."""
    ring = u.ring
    one = UniPoly.constant(ring.one(), ring)
    zero = UniPoly.zero(ring)
    r0, r1 = u, v
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    inv_lc = ring.inv(r0.lc)
    return r0.scale(inv_lc), s0.scale(inv_lc), t0.scale(inv_lc)


def _ring_pow(c, k: int, ring):
    out = ring.one()
    while k:
        if k & 1:
            out = out * c
        c = c * c if k > 1 else c
        k >>= 1
    return out


def resultant(u: UniPoly, v: UniPoly):
    """Resultant of u and v in their common variable, by subresultant PRS.

    Exact over any coefficient ring with exact division (Z, Q, F_p, and
    polynomial rings over these, so eliminating one variable of a
    multivariate input is the same code path).
    """
    if u.is_zero or v.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial")
    ring = u.ring
    A, B = u, v
    sign = 1
    if A.degree < B.degree:
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            sign = -sign
        A, B = B, A
    if B.degree == 0:
        return _apply_sign(_ring_pow(B.lc, A.degree, ring), sign, ring)
    g = ring.one()
    h = ring.one()
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            sign = -sign
        _, R = A.pseudo_divmod(B)
        A, B = B, R
        if B.is_zero:
            return ring.zero()
        denom = g * _ring_pow(h, delta, ring)
        B = UniPoly([ring.exact_div(c, denom) for c in B.coeffs], ring)
        g = A.lc
        if delta > 0:
            h = ring.exact_div(_ring_pow(g, delta, ring), _ring_pow(h, delta - 1, ring))
        if B.degree == 0:
            break
    num = _ring_pow(B.lc, A.degree, ring)
    if A.degree > 1:
        res = ring.exact_div(num, _ring_pow(h, A.degree - 1, ring))
    else:
        res = num
    return _apply_sign(res, sign, ring)


def _apply_sign(c, sign: int, ring):
    return c if sign >= 0 else -c


def discriminant(u: UniPoly):
    """disc(u) = (-1)^(n(n-1)/2) Res(u, u') / lc(u)."""
    n = u.degree
    if n < 1:
        raise DegreeTooSmall("discriminant needs degree >= 1")
    if n == 1:
        return u.ring.one()
    res = resultant(u, u.derivative())
    out = u.ring.exact_div(res, u.lc)
    if (n * (n - 1) // 2) % 2 == 1:
        out = -out
    return out


def discriminant_y(f: BiPoly) -> UniPoly:
    """disc of f with respect to Y, a polynomial in X.

    Sign fixed to (-1)^(n(n-1)/2) Res_Y(f, f_Y)/lc_Y(f); downstream only
    squarefree-ness and prime divisors matter.
    """
    if f.is_zero or f.deg_y() < 1:
        raise DegreeTooSmall("disc_Y needs deg_Y >= 1")
    fy = f.as_y_poly()
    out = discriminant(fy)  # element of UniPolyRing = UniPoly in X
    return out


# -- squarefree machinery ----------------------------------------------------


def content_int(u: UniPoly) -> int:
    """gcd of the integer coefficients (u over Z); 0 for the zero polynomial."""
    g = 0
    for c in u.coeffs:
        g = math.gcd(g, abs(int(c)))
    return g


def primitive_int_from_q(u: UniPoly):
    """Write u (over Q) as unit * w with w a primitive integer polynomial
    having positive leading coefficient.  Returns (w over ZZ, unit Fraction)."""
    if u.is_zero:
        return UniPoly.zero(ZZ), Fraction(0)
    den = 1
    for c in u.coeffs:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in u.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    if ints[-1] < 0:
        g = -g
    w = UniPoly([c // g for c in ints], ZZ)
    return w, Fraction(g, den)


def squarefree_decomposition(u: UniPoly) -> list[tuple[UniPoly, int]]:
    """[(g_i, i)] with u = lc * prod g_i^i, the g_i squarefree, pairwise
    coprime and monic (field) / primitive (Z via Q).

    Characteristic 0 uses Yun's algorithm; characteristic p extracts p-th
    powers when the derivative vanishes.
    """
    ring = u.ring
    if u.is_zero:
        raise ZeroPolynomial("squarefree decomposition of 0")
    if ring is ZZ:
        uq = u.map_coeffs(Fraction, QQ)
        return [
            (primitive_int_from_q(g)[0], m) for g, m in squarefree_decomposition(uq)
        ]
    if not ring.is_field:
        raise TypeError("need field (or Z) coefficients")
    u = u.monic()
    if u.degree < 1:
        return []
    if ring.char in (0, None) or ring.char == 0:
        return _yun(u)
    return _squarefree_char_p(u, ring.char)


def _yun(u: UniPoly) -> list[tuple[UniPoly, int]]:
    out = []
    d = u.derivative()
    g = uni_gcd(u, d)
    c = u.exact_div(g)
    w = d.exact_div(g) - c.derivative()
    i = 1
    while not (c.degree == 0):
        h = uni_gcd(c, w)
        if h.degree > 0:
            out.append((h, i))
        c2 = c.exact_div(h)
        w = w.exact_div(h) - c2.derivative()
        c = c2
        i += 1
    return out


def _squarefree_char_p(u: UniPoly, p: int) -> list[tuple[UniPoly, int]]:
    # multiplicities not divisible by p come out of the gcd ladder; the
    # residual cofactor is a p-th power handled by Frobenius root recursion
    out: list[tuple[UniPoly, int]] = []
    d = u.derivative()
    if d.is_zero:
        root = _pth_root(u, p)
        return [(g, m * p) for g, m in _squarefree_char_p(root, p)]
    g = uni_gcd(u, d)
    h = u.exact_div(g)
    k = 1
    while h.degree > 0:
        G = uni_gcd(g, h)
        H = h.exact_div(G)
        if H.degree > 0:
            out.append((H, k))
        g = g.exact_div(G)
        h = G
        k += 1
    if g.degree > 0:
        root = _pth_root(g, p)
        out += [(f, m * p) for f, m in _squarefree_char_p(root, p)]
    return sorted(out, key=lambda t: t[1])


def _pth_root(u: UniPoly, p: int) -> UniPoly:
    # u = v(Y^p) over F_p; p-th root has coefficients c_{p i} (Frobenius on
    # F_p is the identity)
    coeffs = []
    for k in range(0, u.degree + 1, p):
        coeffs.append(u.coeff(k))
    return UniPoly(coeffs, u.ring)


def squarefree_part(u: UniPoly) -> UniPoly:
    """Product of the distinct irreducible factors of u; monic over a field,
    primitive with positive leading coefficient over Z."""
    ring = u.ring
    if u.is_zero:
        raise ZeroPolynomial("squarefree part of 0")
    if u.degree == 0:
        if ring is ZZ:
            return UniPoly.constant(1, ZZ)
        return UniPoly.constant(ring.one(), ring)
    parts = squarefree_decomposition(u)
    if ring is ZZ:
        out = UniPoly.constant(1, ZZ)
    else:
        out = UniPoly.constant(ring.one(), ring)
    for g, _ in parts:
        out = out * g
    if ring is ZZ and not out.is_zero and int(out.lc) < 0:
        out = -out
    return out
