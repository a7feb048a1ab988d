"""Factorization over Q (Zassenhaus) and over number fields Q(alpha)
(Trager norms), plus a rational bivariate irreducibility check built from
the same X-adic machinery as the mod-p factorizer.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import next_prime
from .errors import ZeroPolynomial
from .hensel import multifactor_lift, x_adic_multilift
from .modfactor import uni_factor_fp
from .poly import (
    BiPoly,
    UniPoly,
    UniPolyRing,
    primitive_int_from_q,
    resultant,
    squarefree_decomposition,
    uni_gcd,
)
from .rings import QQ, ZZ, NumberField, NFElem, Zmod


@dataclass
class QFactorization:
    factors: list  # [(primitive irreducible UniPoly over ZZ, mult)]
    unit: Fraction

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


@dataclass
class NFFactorization:
    factors: list  # [(monic UniPoly over the field, mult)]
    unit: NFElem


def _to_q(u: UniPoly) -> UniPoly:
    if u.ring is QQ:
        return u
    if u.ring is ZZ:
        return u.map_coeffs(Fraction, QQ)
    raise TypeError("expected rational or integer coefficients")


def _norm2_ceil(coeffs) -> int:
    s = sum(int(c) * int(c) for c in coeffs)
    r = math.isqrt(s)
    return r if r * r == s else r + 1


def _symmetric(c: int, M: int) -> int:
    c %= M
    return c - M if 2 * c > M else c


def _primitive_pos(coeffs: list[int]) -> list[int]:
    g = 0
    for c in coeffs:
        g = math.gcd(g, abs(c))
    if g == 0:
        return list(coeffs)
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _zassenhaus(w: UniPoly, rng: random.Random) -> list[UniPoly]:
    """Irreducible factors (primitive, positive lc) of a primitive squarefree
    integer polynomial of degree >= 1."""
    n = w.degree
    if n == 1:
        return [w]
    lc = int(w.lc)
    # smallest odd prime with good reduction: degree preserved, squarefree
    p = 2
    while True:
        p = next_prime(p)
        if lc % p == 0:
            continue
        ring = Zmod(p)
        wb = w.map_coeffs(lambda c: ring.from_int(int(c)), ring)
        if wb.degree != n:
            continue
        d = wb.derivative()
        if d.is_zero:
            continue
        if uni_gcd(wb, d).degree == 0:
            break
    fac = uni_factor_fp(wb, rng)
    parts = [[c.value for c in g.coeffs] for g, _ in fac.factors]
    if len(parts) == 1:
        return [w]
    # Mignotte-style bound: any factor g of w has |g|_inf <= 2^n * |w|_2,
    # and candidates carry an extra factor lc(w)
    bound = (1 << n) * _norm2_ceil(w.coeffs) * abs(lc)
    lam = 1
    mod = p
    while mod <= 2 * bound:
        mod *= p
        lam += 1
    lifted = multifactor_lift(w, parts, p, lam)
    M = p ** lam

    out: list[UniPoly] = []
    pool = list(range(len(lifted)))
    cur = [int(c) for c in w.coeffs]
    size = 1
    while 2 * size <= len(pool):
        found = True
        while found:
            found = False
            for combo in itertools.combinations(pool, size):
                prod = [cur[-1] % M]  # current leading coefficient
                for i in combo:
                    prod = [0] * 0 + _mul_mod(prod, lifted[i], M)
                cand = _primitive_pos([_symmetric(c, M) for c in prod])
                quo = _exact_div_int(cur, cand)
                if quo is None:
                    continue
                out.append(UniPoly(cand, ZZ))
                cur = quo
                pool = [i for i in pool if i not in combo]
                found = 2 * size <= len(pool)
                break
        size += 1
    if len(cur) > 1:
        out.append(UniPoly(_primitive_pos(cur), ZZ))
    return out


def _mul_mod(a, b, M):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % M
    while out and out[-1] == 0:
        out.pop()
    return out


def _exact_div_int(a: list[int], b: list[int]):
    """Exact quotient of integer coefficient lists, or None."""
    if not b:
        return None
    if len(a) < len(b):
        return None
    rem = list(a)
    db = len(b) - 1
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1 - db, -1, -1):
        c, r = divmod(rem[i + db], b[-1])
        if r:
            return None
        quo[i] = c
        if c:
            for j in range(db + 1):
                rem[i + j] -= c * b[j]
    if any(rem[:db]):
        return None
    return quo


def uni_factor_q(u: UniPoly, rng: random.Random | None = None) -> QFactorization:
    """Complete factorization over Q into primitive irreducible integer
    polynomials (positive leading coefficients) with a rational unit."""
    rng = rng if rng is not None else random.Random(0)
    uq = _to_q(u)
    if uq.is_zero:
        raise ZeroPolynomial("cannot factor 0")
    if uq.degree == 0:
        return QFactorization([], Fraction(uq.coeffs[0]))
    factors: list[tuple[UniPoly, int]] = []
    for part, mult in squarefree_decomposition(uq):
        wz, _ = primitive_int_from_q(part)
        for irr in _zassenhaus(wz, rng):
            factors.append((irr, mult))
    factors.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    # unit from the leading coefficients (factors are positive-lc primitive)
    lc_prod = Fraction(1)
    for g, m in factors:
        lc_prod *= Fraction(int(g.lc)) ** m
    unit = Fraction(uq.lc) / lc_prod
    return QFactorization(factors, unit)


def is_irreducible_q(u: UniPoly) -> bool:
    uq = _to_q(u)
    if uq.is_zero or uq.degree == 0:
        return False
    fac = uni_factor_q(uq)
    return fac.is_irreducible() and fac.factors[0][0].degree == uq.degree


# ---------------------------------------------------------------------------
# number-field factorization (Trager)
# ---------------------------------------------------------------------------


def _nf_poly_to_tower(u: UniPoly):
    """UniPoly over Q(alpha) -> UniPoly in T whose coefficients are
    UniPoly in Y over Q (for resultants in T)."""
    field: NumberField = u.ring
    s = field.degree
    YR = UniPolyRing(QQ)
    cols: list[list[Fraction]] = [[] for _ in range(s)]
    for j, c in enumerate(u.coeffs):
        for k in range(s):
            ck = c.coeffs[k]
            col = cols[k]
            while len(col) <= j:
                col.append(Fraction(0))
            col[j] = ck
    return UniPoly([UniPoly(col, QQ) for col in cols], YR)


def nf_norm(u: UniPoly) -> UniPoly:
    """Norm of u in Q(alpha)[Y] down to Q[Y]: Res_T(q(T), u with alpha -> T);
    the degree is always s * deg(u) for nonzero u with unit leading
    coefficient."""
    field: NumberField = u.ring
    YR = UniPolyRing(QQ)
    qT = UniPoly(
        [UniPoly([c], QQ) for c in field._q_monic], YR
    )
    uT = _nf_poly_to_tower(u)
    if uT.is_zero:
        raise ZeroPolynomial("norm of 0")
    res = resultant(qT, uT)
    return res  # a UniPoly in Y over QQ


def _nf_from_int_poly(w: UniPoly, field: NumberField) -> UniPoly:
    return UniPoly([field.from_rational(Fraction(int(c))) for c in w.coeffs], field)


def nf_factor(u: UniPoly, rng: random.Random | None = None) -> NFFactorization:
    """Complete monic factorization over Q(alpha) by Trager's method: shift
    by multiples of alpha until the norm is squarefree, factor the norm over
    Q, and pull factors back through gcds."""
    rng = rng if rng is not None else random.Random(0)
    field: NumberField = u.ring
    if u.is_zero:
        raise ZeroPolynomial("cannot factor 0")
    unit = u.lc
    out: list[tuple[UniPoly, int]] = []
    if u.degree >= 1:
        for part, mult in squarefree_decomposition(u):
            for g in _trager_squarefree(part, field, rng):
                out.append((g, mult))
    out.sort(key=lambda t: (t[0].degree, [tuple(c.coeffs) for c in t[0].coeffs]))
    return NFFactorization(out, unit)


def _trager_squarefree(w: UniPoly, field: NumberField, rng) -> list[UniPoly]:
    alpha = field.gen()
    max_shift = 2 * field.degree * max(w.degree, 1) ** 2 + 3
    for k in range(max_shift):
        shift = alpha * field.from_int(k)
        v = w.shift_arg(-shift) if k else w
        N = nf_norm(v)
        d = N.derivative()
        if d.is_zero or uni_gcd(N, d).degree != 0:
            continue
        nf = uni_factor_q(N, rng)
        if len(nf.factors) == 1:
            return [w]
        out = []
        for Ni, _ in nf.factors:
            g = uni_gcd(v, _nf_from_int_poly(Ni, field))
            if g.degree > 0:
                out.append(g.shift_arg(shift) if k else g)
        total = sum(g.degree for g in out)
        if total != w.degree:
            raise ArithmeticError("Trager pullback lost degrees")
        return out
    raise ArithmeticError("no squarefree Trager shift found")


# ---------------------------------------------------------------------------
# rational bivariate irreducibility / factorization
# ---------------------------------------------------------------------------


def _bi_content_y_q(f: BiPoly) -> UniPoly:
    cont = UniPoly.zero(QQ)
    fy = f.as_y_poly()
    for cx in fy.coeffs:
        cont = cx.monic() if cont.is_zero else uni_gcd(cont, cx)
        if cont.degree == 0:
            break
    return cont


def _bi_gcd_q(a: BiPoly, b: BiPoly) -> BiPoly:
    """gcd in Q[X, Y], normalized to graded-lex leading coefficient 1."""
    if a.is_zero:
        return _bi_normalize_q(b)
    if b.is_zero:
        return _bi_normalize_q(a)
    ca, cb = _bi_content_y_q(a), _bi_content_y_q(b)
    cg = uni_gcd(ca, cb) if ca.degree > 0 and cb.degree > 0 else UniPoly([Fraction(1)], QQ)

    def pp(f: BiPoly) -> BiPoly:
        cont = _bi_content_y_q(f)
        if cont.degree == 0:
            return f
        fy = f.as_y_poly()
        return BiPoly.from_y_poly(
            UniPoly([cx.exact_div(cont) for cx in fy.coeffs], fy.ring)
        )

    A, B = pp(a).as_y_poly(), pp(b).as_y_poly()
    if A.degree < B.degree:
        A, B = B, A
    while not B.is_zero:
        _, R = A.pseudo_divmod(B)
        A, B = B, (pp(BiPoly.from_y_poly(R)).as_y_poly() if not R.is_zero else R)
    g = BiPoly.from_y_poly(A)
    if cg.degree > 0:
        g = g * BiPoly({(i, 0): c for i, c in enumerate(cg.coeffs)}, QQ)
    return _bi_normalize_q(g)


def _bi_normalize_q(f: BiPoly) -> BiPoly:
    if f.is_zero:
        return f
    _, lc = f.leading_term_grlex()
    return f.scale(1 / lc)


def bi_factor_q(f: BiPoly, rng: random.Random | None = None):
    """(unit, [(normalized irreducible BiPoly over Q, mult)]).

    Specialize-lift-recombine over Q, mirroring the mod-p factorizer; meant
    for desk-scale inputs (irreducibility checks of fixtures and CLI input
    validation)."""
    rng = rng if rng is not None else random.Random(0)
    if f.is_zero:
        raise ZeroPolynomial("cannot factor 0")
    fq = f if f.ring is QQ else f.map_coeffs(Fraction, QQ)
    _, lc = fq.leading_term_grlex()
    parts = _bfq(fq, rng)
    parts.sort(key=lambda t: (t[0].total_degree(), sorted(t[0].terms.items())))
    return Fraction(lc), parts


def bi_irreducible_q(f: BiPoly, rng: random.Random | None = None) -> bool:
    if f.is_zero or f.total_degree() == 0:
        return False
    _, parts = bi_factor_q(f, rng)
    return len(parts) == 1 and parts[0][1] == 1


def _bfq(f: BiPoly, rng) -> list:
    if f.total_degree() == 0:
        return []
    if f.deg_y() == 0 or f.deg_x() == 0:
        swapped = f.deg_y() == 0 and f.deg_x() > 0
        u = f.evaluate_y(0) if swapped else f.evaluate_x(0)
        fac = uni_factor_q(u, rng)
        out = []
        for g, m in fac.factors:
            gq = g.map_coeffs(Fraction, QQ).monic()
            d = {(i, 0) if swapped else (0, i): c for i, c in enumerate(gq.coeffs)}
            out.append((BiPoly(d, QQ), m))
        return out
    cont = _bi_content_y_q(f)
    if cont.degree > 0:
        fy = f.as_y_poly()
        pp = BiPoly.from_y_poly(UniPoly([c.exact_div(cont) for c in fy.coeffs], fy.ring))
        cpoly = BiPoly({(i, 0): c for i, c in enumerate(cont.coeffs)}, QQ)
        return _merge_q(_bfq(cpoly, rng), _bfq(pp, rng))
    g = _bi_gcd_q(f, f.diff_y())
    if g.total_degree() > 0:
        return _merge_q(_bfq(f.exact_div(g), rng), _bfq(g, rng))
    return [(h, 1) for h in _bfq_squarefree(_bi_normalize_q(f), rng)]


def _merge_q(a, b):
    out = list(a)
    for g, m in b:
        for idx, (h, mm) in enumerate(out):
            if h == g:
                out[idx] = (h, mm + m)
                break
        else:
            out.append((g, m))
    return out


def _bfq_squarefree(f: BiPoly, rng) -> list[BiPoly]:
    n_y = f.deg_y()
    lcx = f.lc_y()
    a = 0
    while True:
        for cand in (a, -a):
            if lcx.evaluate(Fraction(cand)) == 0:
                continue
            u = f.evaluate_x(cand)
            du = u.derivative()
            if uni_gcd(u, du).degree == 0:
                a = cand
                break
        else:
            a = a + 1
            continue
        break
    u = f.evaluate_x(a)
    fac = uni_factor_q(u, rng)
    if len(fac.factors) == 1:
        return [f]
    monic_parts = [g.map_coeffs(Fraction, QQ).monic() for g, _ in fac.factors]
    K = f.total_degree() + 1
    lc_layers, lifted = x_adic_multilift(f, a, monic_parts, K - 1)

    def layers_mul(A, B):
        out = [UniPoly.zero(QQ) for _ in range(K)]
        for i, ai in enumerate(A):
            if ai.is_zero:
                continue
            for j in range(K - i):
                if not B[j].is_zero:
                    out[i + j] = out[i + j] + ai * B[j]
        return out

    lc_series = [
        [UniPoly([c], QQ) if c else UniPoly.zero(QQ) for c in lc_layers][i]
        for i in range(K)
    ]

    def to_bipoly(layers):
        terms = {}
        for i, yp in enumerate(layers):
            for j, c in enumerate(yp.coeffs):
                if c:
                    terms[(i, j)] = c
        return BiPoly(terms, QQ)

    out: list[BiPoly] = []
    pool = list(range(len(lifted)))
    cur = f.shift(Fraction(a), 0)  # work in t = X - a coordinates
    size = 1
    while 2 * size <= len(pool):
        found = True
        while found:
            found = False
            for combo in itertools.combinations(pool, size):
                prod = lc_series
                for i in combo:
                    prod = layers_mul(prod, lifted[i])
                cand = to_bipoly(prod)
                if cand.is_zero:
                    continue
                contc = _bi_content_y_q(cand)
                if contc.degree > 0:
                    cy = cand.as_y_poly()
                    cand = BiPoly.from_y_poly(
                        UniPoly([cx.exact_div(contc) for cx in cy.coeffs], cy.ring)
                    )
                cand = _bi_normalize_q(cand)
                try:
                    quo = cur.exact_div(cand)
                except Exception:
                    continue
                out.append(cand.shift(Fraction(-a), 0))
                cur = quo
                pool = [i for i in pool if i not in combo]
                # refresh the leading-coefficient series
                lcq = cur.lc_y() if not cur.is_zero else UniPoly.zero(QQ)
                lc_series = [
                    UniPoly([lcq.coeff(i)], QQ)
                    if lcq.coeff(i)
                    else UniPoly.zero(QQ)
                    for i in range(K)
                ]
                found = 2 * size <= len(pool)
                break
        size += 1
    if not cur.is_zero and cur.total_degree() > 0:
        out.append(_bi_normalize_q(cur.shift(Fraction(-a), 0)))
    return [_bi_normalize_q(h) for h in out]
