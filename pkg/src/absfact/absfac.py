"""Absolute factorization of rationally irreducible f in Z[X, Y].

Pipeline: pick an evaluation point and a prime p dividing f(x0, y0), factor
f mod p, lift the chosen modular branch p-adically, recognize the minimal
polynomial q(T) of the branch value via LLL, factor f(x0, Y) over
L = Q[T]/q(T), and reconstruct the absolute factor by X-adic lifting (or
Lagrange interpolation across several specializations).  Every step that can
be fooled by an unlucky choice is followed by an exact check, and failures
feed a bounded retry loop, so answers are always correct and the only
degraded outcome is "unknown".
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .arith import prime_divisors
from .errors import (
    AmbiguousFactor,
    BadLeadingCoeff,
    EmptySelection,
    ExactDivisionFailed,
    Exhausted,
    FullSelectionInvalid,
    NoGoodShift,
    NodeFailure,
    NoPrime,
    NotCoprime,
    NotInvertible,
    ZeroPolynomial,
)
from .hensel import _PairLift, x_adic_lift
from .lattice import accuracy_bound, min_poly_from_approx, recognition_check
from .modfactor import _gf_divmod, _gf_gcd, _gf_diff, _gf_monic, bi_factor_fp
from .numfield import is_irreducible_q, nf_factor, uni_factor_q
from .poly import (
    BiPoly,
    BiPolyRing,
    UniPoly,
    UniPolyRing,
    discriminant,
    discriminant_y,
    resultant,
    squarefree_part,
)
from .polytope import factor_count_divisor
from .rings import QQ, ZZ, ModElem, NumberField, NFElem, Zmod


@dataclass(frozen=True)
class EvalPoint:
    x0: int
    y0: int


@dataclass(frozen=True)
class PrimeChoice:
    p: int
    divides_value: int
    tdeg_preserved: bool
    avoided_D: int | None = None


@dataclass(frozen=True)
class Certificate:
    x0: int
    y0: int
    p: int
    lam: int
    alpha_bar: int


@dataclass
class AbsFactorResult:
    status: str  # "factored" | "absolutely_irreducible" | "unknown"
    q: UniPoly | None = None  # integer minimal polynomial, primitive, lc > 0
    field: NumberField | None = None
    f1: BiPoly | None = None  # over the field, monic in Y
    s: int | None = None
    m: int | None = None
    certificate: Certificate | None = None

    @property
    def factored(self) -> bool:
        return self.status == "factored"


@dataclass
class AbsFacConfig:
    mode: str = "strict"  # or "hilbert"
    lift: str = "quadratic"  # or "linear"
    reconstruct: str = "xadic"  # or "interp"
    seed: int = 0
    max_retries: int = 40
    avoid_d: bool = False
    lambda_cap: int | None = None  # optional cap on the first heuristic lambda
    cert_shift_limit: int = 101  # shift-search certification only for p <= this
    interp_rule: str = "padic"  # or "unique" (the strict single-factor rule)


UNKNOWN_RESULT = AbsFactorResult("unknown")


def primitive_element_bound(n: int, s: int, S_size: int) -> Fraction:
    """Lower bound 1 - n(s-1)/(2|S|) on the probability that a random point
    of S^2 evaluates the absolute factor to a primitive element."""
    if n < 1 or s < 1 or S_size < 1:
        raise ValueError("need n, s, |S| >= 1")
    return 1 - Fraction(n * (s - 1), 2 * S_size)


def default_sample_set(n: int) -> list[int]:
    """{-B..B} sized so the primitive-element bound is >= 0.9 even for the
    worst case s = n."""
    need = max(5 * n * (n - 1), 9)  # 2B+1 >= 5 n(n-1)
    B = max(2, (need - 1) // 2 + 1)
    return list(range(-B, B + 1))


def _spiral_key(pt):
    x, y = pt
    return (max(abs(x), abs(y)), abs(x) + abs(y), y, x)


class PointCursor:
    """Deterministic enumeration of S^2, spiralling outward from the origin."""

    def __init__(self, S):
        vals = sorted(set(int(x) for x in S))
        if not vals:
            raise ValueError("empty sample set")
        self.points = sorted(((x, y) for x in vals for y in vals), key=_spiral_key)
        self.index = 0
        # per-x0 caches shared by choose_point
        self.strict_ok: dict[int, bool] = {}
        self.degree_ok: dict[int, bool] = {}


def choose_point(f: BiPoly, S, mode: str, cursor: PointCursor) -> EvalPoint:
    """Advance the cursor to the next admissible evaluation point.

    Strict mode: f(x0, Y) irreducible over Q of full degree n = tdeg(f).
    Hilbert mode: disc_Y(f)(x0) != 0 and full degree.  Raises Exhausted when
    the cursor runs out."""
    n = f.total_degree()
    delta = getattr(cursor, "_delta", None)
    if mode == "hilbert" and delta is None:
        delta = discriminant_y(f)
        cursor._delta = delta
    while cursor.index < len(cursor.points):
        x0, y0 = cursor.points[cursor.index]
        cursor.index += 1
        if x0 not in cursor.degree_ok:
            u = f.evaluate_x(x0)
            cursor.degree_ok[x0] = (not u.is_zero) and u.degree == n
        if not cursor.degree_ok[x0]:
            continue
        if mode == "strict":
            if x0 not in cursor.strict_ok:
                u = f.evaluate_x(x0)
                cursor.strict_ok[x0] = is_irreducible_q(u)
            if not cursor.strict_ok[x0]:
                continue
        elif mode == "hilbert":
            if delta.evaluate(delta.ring.from_int(x0)) == delta.ring.zero():
                continue
        else:
            raise ValueError(f"unknown mode {mode!r}")
        return EvalPoint(x0, y0)
    raise Exhausted("all points of S^2 used")


def choose_prime(
    f: BiPoly,
    pt: EvalPoint,
    avoid: int | None = None,
    used=None,
    mode: str = "strict",
    delta: UniPoly | None = None,
) -> PrimeChoice:
    """Smallest unused prime p | f(x0, y0) with tdeg(f mod p) = tdeg(f) and
    p not dividing the leading coefficient of f(x0, Y); in Hilbert mode p
    must also keep disc_Y(f)(x0) nonzero, and p must avoid `avoid` when that
    is given.  Raises NoPrime when no divisor qualifies."""
    used = used or set()
    value = int(f.evaluate(pt.x0, pt.y0))
    if value == 0:
        raise NoPrime("f(x0, y0) = 0")
    if abs(value) == 1:
        raise NoPrime("f(x0, y0) is a unit")
    n = f.total_degree()
    phi = int(f.evaluate_x(pt.x0).lc)
    dval = None
    if mode == "hilbert":
        if delta is None:
            delta = discriminant_y(f)
        dval = int(delta.evaluate(delta.ring.from_int(pt.x0)))
    for p in prime_divisors(value):
        if p in used:
            continue
        if phi % p == 0:
            continue
        if any((i + j) == n and c % p for (i, j), c in f.terms.items()):
            pass  # some top-degree term survives
        else:
            continue
        if mode == "hilbert" and dval is not None and dval % p == 0:
            continue
        if avoid is not None and avoid % p == 0:
            continue
        return PrimeChoice(p, value, True, avoided_D=avoid)
    raise NoPrime(f"no usable prime divides f({pt.x0},{pt.y0}) = {value}")


def bad_reduction_constant(f: BiPoly) -> int:
    """D = disc_X(squarefree part of disc_Y(f)); primes of bad reduction
    divide D.  For non-monic f the discriminant is taken on the monicized
    polynomial lc^(d-1) f(X, Y/lc) and primes dividing the leading
    coefficient's content are folded in.  When the squarefree part is
    constant there is no X-discriminant and the convention D = content(d)
    applies."""
    if f.is_zero or f.deg_y() < 1:
        raise ValueError("need deg_Y f >= 1")
    lc = f.lc_y()
    extra = 1
    work = f
    if lc.degree > 0 or abs(int(lc.coeffs[0])) != 1:
        d = f.deg_y()
        fy = f.as_y_poly()
        coeffs = [
            fy.coeff(j) * (lc ** (d - 1 - j)) if j < d else UniPoly([ZZ.one()], ZZ)
            for j in range(d + 1)
        ]
        work = BiPoly.from_y_poly(UniPoly(coeffs, UniPolyRing(ZZ)))
        g = 0
        for c in lc.coeffs:
            g = math.gcd(g, abs(int(c)))
        extra = max(g, 1)
    d_poly = discriminant_y(work)
    if d_poly.is_zero:
        raise ValueError("f is not squarefree in Y")
    content = 0
    for c in d_poly.coeffs:
        content = math.gcd(content, abs(int(c)))
    d1 = squarefree_part(d_poly)
    if d1.degree == 0:
        return extra * max(content, 1)
    if d1.degree == 1:
        return extra * 1
    return extra * int(discriminant(d1))


# ---------------------------------------------------------------------------
# step 5 helpers
# ---------------------------------------------------------------------------


def _nf_to_fp(c: NFElem, abar: int, p: int) -> int:
    """Image of c under the ring map alpha -> abar mod p; NotInvertible when
    a coefficient denominator vanishes mod p."""
    acc = 0
    power = 1
    for co in c.coeffs:
        num, den = co.numerator, co.denominator
        if den % p == 0:
            raise NotInvertible("denominator divisible by p in L -> F_p map")
        acc = (acc + num * pow(den, -1, p) * power) % p
        power = power * abar % p
    return acc


def _nf_poly_to_fp(u: UniPoly, abar: int, p: int) -> list[int]:
    out = [_nf_to_fp(c, abar, p) for c in u.coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def select_factor_subset(
    psis: list[UniPoly], F_modp: BiPoly, x0: int, p: int, alpha_bar: int
) -> list[int]:
    """Indices j with psi_j mod p dividing F(x0, Y) mod p, under the ring
    map alpha -> alpha_bar mod p.  The product over the returned indices is
    the candidate f1(x0, Y).

    Requires f(x0, Y) squarefree mod p so that divisibility of reductions
    faithfully mirrors divisibility over the field."""
    abar = alpha_bar % p
    spec = F_modp.evaluate_x(x0)
    spec_l = _gf_monic([c.value for c in spec.coeffs], p)[1]
    if not spec_l:
        raise EmptySelection("modular factor vanishes at x0")
    out = []
    for idx, psi in enumerate(psis):
        red = _nf_poly_to_fp(psi, abar, p)
        if len(red) - 1 != psi.degree:
            raise NotInvertible("degree drop reducing a factor mod p")
        red = _gf_monic(red, p)[1]
        if not _gf_divmod(spec_l, red, p)[1]:
            out.append(idx)
    if not out:
        raise EmptySelection("no field factor reduces into the modular branch")
    if len(out) == len(psis) and len(psis) > 1:
        raise FullSelectionInvalid("every field factor was selected")
    return out


def _lagrange(points, fld: NumberField) -> UniPoly:
    """Interpolating polynomial over the number field through integer nodes."""
    out = UniPoly.zero(fld)
    for i, (xi, yi) in enumerate(points):
        num = UniPoly([yi], fld)
        den = Fraction(1)
        for k, (xk, _) in enumerate(points):
            if k == i:
                continue
            num = num * UniPoly([fld.from_int(-xk), fld.one()], fld)
            den *= Fraction(xi - xk)
        out = out + num.scale(fld.from_rational(1 / den))
    return out


def reconstruct_interpolation(
    f: BiPoly,
    fld: NumberField,
    x0: int,
    f1_at_x0: UniPoly,
    nodes: list[int],
    rule: str = "padic",
    branch=None,
    rng: random.Random | None = None,
) -> BiPoly:
    """Rebuild the absolute factor from its specializations at x0 and the
    given nodes (Lagrange interpolation coefficient by coefficient).

    rule "unique" follows the one-degree-m-factor assumption and raises
    AmbiguousFactor on ties; rule "padic" disambiguates factors by their
    image mod p against the lifted branch (branch = (F mod p, p, alpha_bar)).
    """
    rng = rng if rng is not None else random.Random(0)
    m = f1_at_x0.degree
    n = f.total_degree()
    if len(set(nodes)) != len(nodes) or x0 in nodes:
        raise ValueError("nodes must be distinct and different from x0")
    if len(nodes) != m:
        raise ValueError(f"need exactly m = {m} nodes")
    fL = f.map_coeffs(lambda c: fld.from_rational(Fraction(int(c))), fld)
    chosen: list[tuple[int, UniPoly]] = [(x0, f1_at_x0.monic())]
    for xi in nodes:
        u = f.evaluate_x(xi)
        if u.is_zero or u.degree != n:
            raise NodeFailure(f"degree drops at node {xi}")
        if not is_irreducible_q(u):
            raise NodeFailure(f"f({xi}, Y) is rationally reducible")
        uL = fL.evaluate_x(xi)
        fac = nf_factor(uL, rng)
        cands = [g for g, mult in fac.factors if g.degree == m and mult == 1]
        if rule == "padic":
            if branch is None:
                raise ValueError("padic rule needs branch=(F mod p, p, alpha_bar)")
            F_modp, p, alpha_bar = branch
            ui = [int(c) % p for c in u.coeffs]
            if len(_gf_gcd(ui, _gf_diff(ui, p), p)) != 1:
                raise NodeFailure(f"f({xi}, Y) not squarefree mod {p}")
            sel = []
            spec = _gf_monic([c.value for c in F_modp.evaluate_x(xi).coeffs], p)[1]
            for g in cands:
                red = _nf_poly_to_fp(g, alpha_bar % p, p)
                if len(red) - 1 != g.degree:
                    continue
                if not _gf_divmod(spec, _gf_monic(red, p)[1], p)[1]:
                    sel.append(g)
            cands = sel
        if not cands:
            raise NodeFailure(f"no degree-{m} factor at node {xi}")
        if len(cands) > 1:
            raise AmbiguousFactor(f"{len(cands)} degree-{m} factors at node {xi}")
        chosen.append((xi, cands[0]))
    # interpolate each Y-coefficient; deg_X b_j <= m - j must come out
    coeffs_x: list[UniPoly] = []
    for j in range(m):
        pts = [(xi, g.coeff(j)) for xi, g in chosen]
        bj = _lagrange(pts, fld)
        if not bj.is_zero and bj.degree > m - j:
            raise NodeFailure(f"interpolated coefficient of Y^{j} has degree > {m - j}")
        coeffs_x.append(bj)
    terms: dict[tuple[int, int], NFElem] = {(0, m): fld.one()}
    for j, bj in enumerate(coeffs_x):
        for i, c in enumerate(bj.coeffs):
            if not fld.is_zero(c):
                terms[(i, j)] = c
    cand = BiPoly(terms, fld)
    try:
        fL.exact_div(cand)
    except ExactDivisionFailed:
        raise NodeFailure("interpolated candidate does not divide f") from None
    return cand


# ---------------------------------------------------------------------------
# the pipeline
# ---------------------------------------------------------------------------


def _pow2_at_least(x: int) -> int:
    out = 1
    while out < x:
        out *= 2
    return out


def _as_int_bipoly(f: BiPoly) -> BiPoly:
    if f.ring is ZZ:
        return f
    if f.ring is QQ:
        den = 1
        for c in f.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        return BiPoly({k: int(c * den) for k, c in f.terms.items()}, ZZ)
    raise TypeError("abs_fac expects integer (or rational) coefficients")


def abs_fac(f: BiPoly, S=None, config: AbsFacConfig | None = None) -> AbsFactorResult:
    """Absolute factorization of a rationally irreducible bivariate integer
    polynomial: the minimal field Q[T]/q(T) together with one absolute
    factor, a certified "absolutely irreducible", or "unknown"."""
    cfg = config or AbsFacConfig()
    fz = _as_int_bipoly(f)
    if fz.is_zero:
        raise ZeroPolynomial("cannot factor 0")
    n = fz.total_degree()
    if n == 0:
        raise ValueError("constant polynomial")
    rng = random.Random(cfg.seed)
    if n == 1:
        return _abs_irred_result(fz, Certificate(0, 0, 0, 0, 0))
    g_div = factor_count_divisor(fz)
    S = list(S) if S is not None else default_sample_set(n)
    cursor = PointCursor(S)
    delta = discriminant_y(fz)
    D = bad_reduction_constant(fz) if cfg.avoid_d else None
    used: set[tuple[int, int, int]] = set()
    attempts = 0
    while attempts < cfg.max_retries:
        try:
            pt = choose_point(fz, S, cfg.mode, cursor)
        except Exhausted:
            return UNKNOWN_RESULT
        while attempts < cfg.max_retries:
            try:
                pc = choose_prime(
                    fz,
                    pt,
                    avoid=D,
                    used={p for (x, y, p) in used if (x, y) == (pt.x0, pt.y0)},
                    mode=cfg.mode,
                    delta=delta,
                )
            except NoPrime:
                break
            used.add((pt.x0, pt.y0, pc.p))
            attempts += 1
            res = _attempt(fz, n, g_div, pt, pc.p, cfg, rng)
            if res is not None:
                return res
    return UNKNOWN_RESULT


def _abs_irred_result(fz: BiPoly, cert: Certificate) -> AbsFactorResult:
    fld = NumberField([0, 1], check=False)  # Q[T]/(T): the rationals
    f1 = fz.map_coeffs(lambda c: fld.from_int(int(c)), fld)
    return AbsFactorResult(
        "absolutely_irreducible",
        q=UniPoly.from_ints([0, 1], ZZ),
        field=fld,
        f1=f1,
        s=1,
        m=fz.total_degree(),
        certificate=cert,
    )


def _certify_irreducible(dp_factor: BiPoly, p: int, limit: int) -> bool:
    """Try to certify absolute irreducibility of an irreducible mod-p image:
    condition (C) directly, then over all coordinate shifts when p is small."""
    from .irrtest import _cond_c_dict, _shift_dict

    d = {k: c.value for k, c in dp_factor.terms.items()}
    if _cond_c_dict(d):
        return True
    if p > limit:
        return False
    for a in range(p):
        for b in range(p):
            if a == 0 and b == 0:
                continue
            if _cond_c_dict(_shift_dict(d, a, b, p)):
                return True
    return False


def _attempt(
    fz: BiPoly, n: int, g_div: int, pt: EvalPoint, p: int, cfg: AbsFacConfig, rng
) -> AbsFactorResult | None:
    ring_p = Zmod(p)
    fp = fz.map_coeffs(lambda c: ring_p.from_int(int(c)), ring_p)
    try:
        fac = bi_factor_fp(fp, rng)
    except NoGoodShift:
        return None
    if any(mult > 1 for _, mult in fac.factors):
        return None  # f(x0,Y) branch collides: suspected bad reduction
    if len(fac.factors) == 1:
        if _certify_irreducible(fac.factors[0][0], p, cfg.cert_shift_limit):
            return _abs_irred_result(fz, Certificate(pt.x0, pt.y0, p, 0, 0))
        return None
    degrees = [g.total_degree() for g, _ in fac.factors]
    m = min(degrees)
    if any(d != m for d in degrees):
        return None  # absolute factors share the degree under good reduction
    if n % m != 0:
        return None
    s = n // m
    if g_div >= 1 and g_div % s != 0:
        return None  # the vertex gcd must be a multiple of s
    F_biv = fac.factors[0][0]  # canonical smallest factor
    u = fz.evaluate_x(pt.x0)
    phi = int(u.lc)
    F1 = [c.value for c in F_biv.evaluate_x(pt.x0).coeffs]
    while F1 and F1[-1] == 0:
        F1.pop()
    if len(F1) - 1 != m:
        return None
    ubar = [int(c) % p for c in u.coeffs]
    G1, rem = _gf_divmod(ubar, F1, p)
    if rem:
        return None
    try:
        lift = _PairLift([int(c) for c in u.coeffs], F1, G1, p)
    except (NotCoprime, BadLeadingCoeff):
        return None

    Q1 = max(1, max(abs(int(c)) for c in u.coeffs))
    rho = 1 + -(-Q1 // abs(phi))  # Cauchy root bound, rounded up
    Q_rig = (2 * (abs(pt.y0) + rho)) ** n
    lam = _pow2_at_least(accuracy_bound(p, s, Q1))
    if cfg.lambda_cap is not None:
        lam = min(lam, _pow2_at_least(cfg.lambda_cap))
    lam_max = accuracy_bound(p, s, Q_rig)
    extend = lift.extend_quadratic if cfg.lift == "quadratic" else lift.extend_linear

    q_poly = None
    abar = None
    while True:
        extend(lam)
        Fc, _ = lift.at_accuracy(lam)
        M = p ** lam
        val = 0
        for c in reversed(Fc):
            val = (val * pt.y0 + c) % M
        abar = val * pow(phi, -1, M) % M
        cand = min_poly_from_approx(ModElem(abar, M), p, lam, s)
        if (
            cand.degree == s
            and recognition_check(cand, fz, pt.x0, pt.y0, s)
            and is_irreducible_q(cand.G)
        ):
            q_poly = cand.G
            break
        if lam >= lam_max:
            return None
        lam *= 2

    fld = NumberField([int(c) for c in q_poly.coeffs], check=False)
    alpha = fld.gen()
    uL = UniPoly([fld.from_rational(Fraction(int(c))) for c in u.coeffs], fld)
    try:
        psi_fac = nf_factor(uL, rng)
    except ArithmeticError:
        return None
    psis = [g for g, _ in psi_fac.factors]
    if any(mult > 1 for _, mult in psi_fac.factors):
        return None
    y0e = fld.from_int(pt.y0)
    if cfg.mode == "hilbert":
        try:
            idx = select_factor_subset(psis, F_biv, pt.x0, p, abar)
        except (EmptySelection, FullSelectionInvalid, NotInvertible):
            return None
        F1_L = UniPoly([fld.one()], fld)
        for i in idx:
            F1_L = F1_L * psis[i]
        if F1_L.degree != m or F1_L.evaluate(y0e) != alpha:
            return None
    else:
        F1_L = None
        for g in psis:
            if g.degree == m and g.evaluate(y0e) == alpha:
                F1_L = g
                break
        if F1_L is None:
            return None
    fL = fz.map_coeffs(lambda c: fld.from_rational(Fraction(int(c))), fld)
    uL_monic = uL.monic()
    try:
        F2_L = uL_monic.exact_div(F1_L)
    except ExactDivisionFailed:
        return None
    if cfg.reconstruct == "interp":
        f1 = _interp_reconstruct(fz, fld, pt, F1_L, (F_biv, p, abar), cfg, rng)
        if f1 is None:
            return None
    else:
        try:
            f1 = x_adic_lift(fL, pt.x0, F1_L, F2_L, m)
        except (NotCoprime, BadLeadingCoeff):
            return None
    if f1.is_zero or f1.total_degree() != m:
        return None
    try:
        fL.exact_div(f1)
    except ExactDivisionFailed:
        return None
    return AbsFactorResult(
        "factored",
        q=q_poly,
        field=fld,
        f1=f1,
        s=s,
        m=m,
        certificate=Certificate(pt.x0, pt.y0, p, lam, abar),
    )


def _interp_reconstruct(fz, fld, pt, F1_L, branch, cfg, rng):
    n = fz.total_degree()
    m = F1_L.degree
    nodes: list[int] = []
    x = 0
    tried = 0
    while len(nodes) < m and tried < 60 + 20 * m:
        for cand in (x, -x) if x else (0,):
            tried += 1
            if cand == pt.x0 or cand in nodes:
                continue
            u = fz.evaluate_x(cand)
            if u.is_zero or u.degree != n:
                continue
            if not is_irreducible_q(u):
                continue
            p = branch[1]
            ui = [int(c) % p for c in u.coeffs]
            if len(_gf_gcd(ui, _gf_diff(ui, p), p)) != 1:
                continue
            nodes.append(cand)
            if len(nodes) == m:
                break
        x += 1
    if len(nodes) < m:
        return None
    try:
        return reconstruct_interpolation(
            fz, fld, pt.x0, F1_L, nodes, rule=cfg.interp_rule, branch=branch, rng=rng
        )
    except (AmbiguousFactor, NodeFailure, NotInvertible):
        return None


# ---------------------------------------------------------------------------
# independent verification of results
# ---------------------------------------------------------------------------


def verify_result(f: BiPoly, res: AbsFactorResult) -> bool:
    """Re-derive everything a factored result claims: q irreducible of
    degree s, s*m = tdeg f, f1 monic in Y of total degree m, exact
    divisibility f1 | f over the field, and the recognition identity at the
    certificate point."""
    fz = _as_int_bipoly(f)
    if res.status == "absolutely_irreducible":
        return res.s == 1 and res.q is not None and res.q.degree == 1
    if res.status != "factored":
        return False
    q, fld, f1 = res.q, res.field, res.f1
    if q is None or fld is None or f1 is None:
        return False
    n = fz.total_degree()
    if res.s * res.m != n or q.degree != res.s or f1.total_degree() != res.m:
        return False
    if not is_irreducible_q(q):
        return False
    # monic in Y
    if f1.lc_y().degree != 0 or f1.lc_y().coeffs[0] != fld.one():
        return False
    fL = fz.map_coeffs(lambda c: fld.from_rational(Fraction(int(c))), fld)
    try:
        fL.exact_div(f1)
    except ExactDivisionFailed:
        return False
    cert = res.certificate
    if cert is not None and not recognition_check(q, fz, cert.x0, cert.y0, res.s):
        return False
    return True


def nf_norm_bi(f1: BiPoly) -> BiPoly:
    """Norm of a bivariate polynomial over Q(alpha) down to Q[X, Y]
    (resultant with the defining polynomial); the product of all conjugates
    of an absolute factor."""
    fld: NumberField = f1.ring
    s = fld.degree
    BR = BiPolyRing(QQ)
    cols: list[dict] = [dict() for _ in range(s)]
    for (i, j), c in f1.terms.items():
        for k in range(s):
            if c.coeffs[k]:
                cols[k][(i, j)] = c.coeffs[k]
    f1T = UniPoly([BiPoly(col, QQ) for col in cols], BR)
    qT = UniPoly([BiPoly.constant(c, QQ) for c in fld._q_monic], BR)
    return resultant(qT, f1T)


def norm_consistent(f: BiPoly, res: AbsFactorResult) -> bool:
    """Check nf_norm(f1) = unit * f, i.e. the s conjugates of f1 multiply
    back to f up to the rational leading coefficient."""
    if not res.factored:
        return False
    fz = _as_int_bipoly(f)
    N = nf_norm_bi(res.f1)
    fq = fz.map_coeffs(Fraction, QQ)
    lt_f = fq.leading_term_grlex()[1]
    lt_N = N.leading_term_grlex()[1]
    return N.scale(lt_f / lt_N) == fq
