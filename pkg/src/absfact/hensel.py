"""Hensel lifting: p-adic lifting of univariate coprime splittings (linear
and quadratic), p-adic root lifting by Newton iteration, and X-adic lifting
of bivariate factorizations over a field.

Non-monic inputs use the classic leading-coefficient trick: for phi = lc(f)
we lift a factorization of phi*f in which *both* branches carry leading
coefficient phi exactly, so corrections never touch the top coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadLeadingCoeff, NotCoprime, NotSimpleRoot
from .modfactor import (
    _gf_add,
    _gf_divmod,
    _gf_ext_gcd,
    _gf_monic,
    _gf_mul,
    _gf_scale,
    _gf_trim,
)
from .poly import BiPoly, UniPoly, squarefree_part, uni_ext_gcd
from .rings import ModElem, Zmod

# ---------------------------------------------------------------------------
# integer-coefficient kernels mod p^k
# ---------------------------------------------------------------------------


def _zp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mul(a, b, M):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % M
    return _zp_trim(out)


def _zp_add(a, b, M):
    n = max(len(a), len(b))
    return _zp_trim(
        [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % M for i in range(n)]
    )


def _zp_sub(a, b, M):
    n = max(len(a), len(b))
    return _zp_trim(
        [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % M for i in range(n)]
    )


def _zp_divmod(a, b, M):
    """Division by b whose leading coefficient is invertible mod M."""
    inv = pow(b[-1], -1, M)
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _zp_trim(rem)
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1 - db, -1, -1):
        c = rem[i + db] * inv % M
        quo[i] = c
        if c:
            for j in range(db + 1):
                rem[i + j] = (rem[i + j] - c * b[j]) % M
    return _zp_trim(quo), _zp_trim(rem[:db])


class _PairLift:
    """Shared state for lifting f = F*G from mod p to mod p^lam with the
    fixed-leading-coefficient convention: lc(F) = lc(G) = phi = lc(f)."""

    def __init__(self, f_int: list[int], F1: list[int], G1: list[int], p: int):
        f_int = list(f_int)
        if not f_int:
            raise ValueError("cannot lift a factorization of 0")
        phi = f_int[-1]
        if phi % p == 0:
            raise BadLeadingCoeff(f"p = {p} divides the leading coefficient")
        self.p = p
        self.phi = phi
        self.w = [phi * c for c in f_int]  # target: phi * f over Z
        self.n = len(f_int) - 1
        lu, u1 = _gf_monic([c % p for c in F1], p)
        lw, w1 = _gf_monic([c % p for c in G1], p)
        if not u1 or not w1:
            raise ValueError("zero modular factor")
        g, s, t = _gf_ext_gcd(u1, w1, p)
        if len(g) != 1:
            raise NotCoprime("modular factors are not coprime")
        # unit check: f == unit * F1 * G1 mod p
        prod = _gf_mul(u1, w1, p)
        fbar = _gf_monic([c % p for c in f_int], p)[1]
        if prod != fbar:
            raise ValueError("F1 * G1 does not match f mod p")
        self.u1, self.w1 = u1, w1
        self.sigma, self.tau = s, t
        self.inv_phi_p = pow(phi, -1, p)
        self.m = len(u1) - 1
        self.k = 1  # current accuracy exponent
        self.F = _gf_scale(u1, phi, p)
        self.G = _gf_scale(w1, phi, p)
        self._fix_tops(p)
        # quadratic-lift Bezout state relative to F, G (s*F + t*G = 1 mod p^k)
        self.qs = _gf_scale(s, self.inv_phi_p, p)
        self.qt = _gf_scale(t, self.inv_phi_p, p)

    def _fix_tops(self, M):
        # leading coefficients are the exact integer phi at every accuracy
        F = list(self.F) + [0] * (self.m + 1 - len(self.F))
        F[self.m] = self.phi % M
        G = list(self.G) + [0] * (self.n - self.m + 1 - len(self.G))
        G[self.n - self.m] = self.phi % M
        self.F, self.G = _zp_trim(F), _zp_trim(G)

    def extend_linear(self, lam: int):
        p = self.p
        while self.k < lam:
            M = p ** self.k
            M1 = M * p
            self._fix_tops(M1)
            diff = _zp_sub([c % M1 for c in self.w], _zp_mul(self.F, self.G, M1), M1)
            e = [(c // M) % p for c in diff]
            e = _gf_scale(_gf_trim(e), self.inv_phi_p, p)
            if e:
                te = _gf_mul(self.tau, e, p)
                q, dF = _gf_divmod(te, self.u1, p)
                dG = _gf_add(_gf_mul(self.sigma, e, p), _gf_mul(q, self.w1, p), p)
                F = list(self.F) + [0] * (self.m + 1 - len(self.F))
                for i, c in enumerate(dF):
                    F[i] = (F[i] + M * c) % M1
                G = list(self.G) + [0] * (self.n - self.m + 1 - len(self.G))
                for i, c in enumerate(dG):
                    G[i] = (G[i] + M * c) % M1
                self.F, self.G = _zp_trim(F), _zp_trim(G)
            self.k += 1
        return self

    def extend_quadratic(self, lam: int):
        """Double the accuracy until it reaches at least lam."""
        p = self.p
        while self.k < lam:
            M = p ** self.k
            M2 = M * M
            self._fix_tops(M2)
            s, t = [c % M2 for c in self.qs], [c % M2 for c in self.qt]
            e = _zp_sub([c % M2 for c in self.w], _zp_mul(self.F, self.G, M2), M2)
            if e:
                te = _zp_mul(t, e, M2)
                q, dF = _zp_divmod(te, self.F, M2)
                dG = _zp_add(_zp_mul(s, e, M2), _zp_mul(q, self.G, M2), M2)
                self.F = _zp_add(self.F, dF, M2)
                self.G = _zp_add(self.G, dG, M2)
            # refresh Bezout cofactors to the doubled accuracy
            r = _zp_sub(
                _zp_add(_zp_mul(s, self.F, M2), _zp_mul(t, self.G, M2), M2), [1], M2
            )
            if r:
                one_minus_r = _zp_sub([1], r, M2)
                s_tmp = _zp_mul(s, one_minus_r, M2)
                d, s_new = _zp_divmod(s_tmp, self.G, M2)
                t_new = _zp_add(_zp_mul(t, one_minus_r, M2), _zp_mul(d, self.F, M2), M2)
                self.qs, self.qt = s_new, t_new
            else:
                self.qs, self.qt = s, t
            self.k *= 2
        return self

    def at_accuracy(self, lam: int):
        """(F, G) reduced mod p^lam (requires k >= lam)."""
        M = self.p ** lam
        F = _zp_trim([c % M for c in self.F])
        G = _zp_trim([c % M for c in self.G])
        # canonical tops
        F = F + [0] * (self.m + 1 - len(F))
        F[self.m] = self.phi % M
        G = G + [0] * (self.n - self.m + 1 - len(G))
        G[self.n - self.m] = self.phi % M
        return _zp_trim(F), _zp_trim(G)


@dataclass
class LiftedFactorization:
    p: int
    lam: int
    F: UniPoly  # over Zmod(p^lam)
    G: UniPoly
    lc_mode: str  # "monic" or "lc_adjusted"

    @property
    def modulus(self) -> int:
        return self.p ** self.lam


def _finish(state: _PairLift, lam: int) -> LiftedFactorization:
    Fc, Gc = state.at_accuracy(lam)
    ring = Zmod(state.p ** lam)
    return LiftedFactorization(
        state.p,
        lam,
        UniPoly.from_ints(Fc, ring),
        UniPoly.from_ints(Gc, ring),
        "monic" if state.phi == 1 else "lc_adjusted",
    )


def _int_coeffs(f: UniPoly) -> list[int]:
    return [int(c) for c in f.coeffs]


def _modp_coeffs(u: UniPoly) -> list[int]:
    return [c.value for c in u.coeffs]


def hensel_lift_linear(
    f: UniPoly, F1: UniPoly, G1: UniPoly, p: int, lam: int
) -> LiftedFactorization:
    """Lift f = unit*F1*G1 (mod p) to F*G = phi*f (mod p^lam), one accuracy
    level per step.  lc(F) = lc(G) = phi = lc(f) throughout."""
    if lam < 1:
        raise ValueError("lam must be >= 1")
    state = _PairLift(_int_coeffs(f), _modp_coeffs(F1), _modp_coeffs(G1), p)
    state.extend_linear(lam)
    return _finish(state, lam)


def hensel_lift_quadratic(
    f: UniPoly, F1: UniPoly, G1: UniPoly, p: int, lam: int
) -> LiftedFactorization:
    """As hensel_lift_linear but accuracy doubles per iteration; the result
    reduced mod p^lam agrees with the linear lift."""
    if lam < 1:
        raise ValueError("lam must be >= 1")
    state = _PairLift(_int_coeffs(f), _modp_coeffs(F1), _modp_coeffs(G1), p)
    state.extend_quadratic(lam)
    return _finish(state, lam)


def multifactor_lift(f: UniPoly, factors: list[list[int]], p: int, lam: int):
    """Lift all monic mod-p factors of f in Z[Y] to monic factors mod p^lam,
    with f = lc(f) * prod L_i (mod p^lam).  Used by Zassenhaus recombination,
    where the candidate for a subset S is lc(f) * prod_{i in S} L_i read off
    with symmetric residues."""
    M = p ** lam
    fl = _int_coeffs(f)

    def rec(target: list[int], sub: list[list[int]]):
        if len(sub) == 1:
            inv = pow(target[-1], -1, M)
            return [_zp_trim([c * inv % M for c in target])]
        half = len(sub) // 2
        left, right = sub[:half], sub[half:]
        u1 = [1]
        for g in left:
            u1 = _gf_mul(u1, g, p)
        w1 = [1]
        for g in right:
            w1 = _gf_mul(w1, g, p)
        state = _PairLift(target, u1, w1, p)
        state.extend_quadratic(lam)
        F, G = state.at_accuracy(lam)
        return rec(F, left) + rec(G, right)

    return rec(fl, factors)


def lift_root_qp(M_poly: UniPoly, p: int, lam: int) -> ModElem:
    """Root of M in Z_p to accuracy p^lam along the branch r = 0 (mod p).

    The reduced squarefree part M1 = M / gcd(M, M') must have a simple root
    at 0 mod p (M1(0) = 0, M1'(0) != 0); this is verified rather than assumed
    and NotSimpleRoot is raised otherwise.
    """
    if lam < 1:
        raise ValueError("lam must be >= 1")
    m1 = squarefree_part(M_poly)
    c = [int(x) for x in m1.coeffs]
    d = [(k * c[k]) for k in range(1, len(c))]
    if c[0] % p != 0:
        raise NotSimpleRoot(f"M1(0) != 0 mod {p}")
    d0 = d[0] % p if d else 0
    if d0 == 0:
        raise NotSimpleRoot(f"M1'(0) = 0 mod {p}: root not simple")

    def ev(poly, x, mod):
        acc = 0
        for coef in reversed(poly):
            acc = (acc * x + coef) % mod
        return acc

    r = 0
    k = 1
    while k < lam:
        k = min(2 * k, lam)
        mod = p ** k
        val = ev(c, r, mod)
        der = ev(d, r, mod)
        r = (r - val * pow(der, -1, mod)) % mod
    mod = p ** lam
    if ev(c, r, mod) % mod != 0:
        raise NotSimpleRoot("Newton iteration failed to converge")
    return ModElem(r, mod)


# ---------------------------------------------------------------------------
# X-adic lifting over a field (Q, F_p or a number field)
# ---------------------------------------------------------------------------


def _series_inv_field(layers, ring, order):
    """Inverse of a power series given by field-element layers, truncated."""
    inv0 = ring.inv(layers[0])
    out = [inv0] + [ring.zero()] * (order - 1)
    for k in range(1, order):
        acc = ring.zero()
        for i in range(1, k + 1):
            if i < len(layers):
                acc = acc + layers[i] * out[k - i]
        out[k] = -(acc * inv0)
    return out


def _taylor_layers(f: BiPoly, x0e, K: int):
    """(layers, lc_layers): f(x0 + t, Y) as Y-polynomials per power of t,
    truncated at t^K, plus the series of the leading Y-coefficient."""
    ring = f.ring
    shifted = f.shift(x0e, 0)
    n = f.deg_y()
    rows: list[list] = [[ring.zero()] * (n + 1) for _ in range(K)]
    for (i, j), c in shifted.terms.items():
        if i < K:
            rows[i][j] = rows[i][j] + c
    layers = [UniPoly(r, ring) for r in rows]
    lc_layers = [rows[i][n] for i in range(K)]
    return layers, lc_layers


def _monic_target(layers, lc_layers, ring, K):
    inv_lc = _series_inv_field(lc_layers, ring, K)
    target = []
    for k in range(K):
        acc = UniPoly.zero(ring)
        for i in range(k + 1):
            if not layers[i].is_zero and not ring.is_zero(inv_lc[k - i]):
                acc = acc + layers[i].scale(inv_lc[k - i])
        target.append(acc)
    return target


def _pair_layers(target, F1m: UniPoly, F2m: UniPoly, ring, K: int):
    """Lift target = U*W mod t^K from the coprime monic split at t = 0."""
    g, sig, tau = uni_ext_gcd(F1m, F2m)
    if g.degree != 0:
        raise NotCoprime("specialized factors share a root")
    if target[0] != F1m * F2m:
        raise ValueError("split does not match the specialization")
    U = [F1m] + [UniPoly.zero(ring) for _ in range(K - 1)]
    W = [F2m] + [UniPoly.zero(ring) for _ in range(K - 1)]
    for k in range(1, K):
        conv = UniPoly.zero(ring)
        for i in range(k + 1):
            if not U[i].is_zero and not W[k - i].is_zero:
                conv = conv + U[i] * W[k - i]
        e = target[k] - conv
        if e.is_zero:
            continue
        te = tau * e
        q, dU = divmod(te, F1m)
        dW = sig * e + q * F2m
        U[k] = dU
        W[k] = dW
    return U, W


def _layers_to_bipoly(layers, ring, x0e) -> BiPoly:
    terms: dict[tuple[int, int], object] = {}
    for k, uk in enumerate(layers):
        for j, c in enumerate(uk.coeffs):
            if not ring.is_zero(c):
                terms[(k, j)] = c
    return BiPoly(terms, ring).shift(-x0e, 0)


def x_adic_lift(f: BiPoly, x0, F1: UniPoly, F2: UniPoly, m: int) -> BiPoly:
    """Lift the split f(x0, Y) = F1*F2 to a candidate factor of f congruent
    to the F1 branch mod (X - x0)^(m+1), monic in Y, X-degree <= m.

    The caller is responsible for checking divisibility of the result."""
    ring = f.ring
    if not ring.is_field:
        raise TypeError("x_adic_lift needs field coefficients")
    if m < 0:
        raise ValueError("order must be >= 0")
    F1m = F1.monic()
    if m == 0:
        return BiPoly({(0, j): c for j, c in enumerate(F1m.coeffs)}, ring)
    F2m = F2.monic()
    x0e = ring.from_int(x0) if isinstance(x0, int) else x0
    K = m + 1
    layers, lc_layers = _taylor_layers(f, x0e, K)
    if ring.is_zero(lc_layers[0]):
        raise BadLeadingCoeff("leading Y-coefficient vanishes at x0")
    target = _monic_target(layers, lc_layers, ring, K)
    U, _ = _pair_layers(target, F1m, F2m, ring, K)
    return _layers_to_bipoly(U, ring, x0e)


def x_adic_multilift(f: BiPoly, x0, factors: list[UniPoly], order: int):
    """Lift every monic factor of f(x0, Y) X-adically to the given order.

    Returns (lc_layers, lifted) where lifted[i] is the layer list (monic in
    Y, coefficients per power of t = X - x0) of the branch starting at
    factors[i], and lc_layers is the t-expansion of lc_Y(f).  The branches
    multiply to the monicized f mod t^(order+1)."""
    ring = f.ring
    x0e = ring.from_int(x0) if isinstance(x0, int) else x0
    K = order + 1
    layers, lc_layers = _taylor_layers(f, x0e, K)
    if ring.is_zero(lc_layers[0]):
        raise BadLeadingCoeff("leading Y-coefficient vanishes at x0")
    target = _monic_target(layers, lc_layers, ring, K)

    def rec(tgt, subs):
        if len(subs) == 1:
            return [tgt]
        half = len(subs) // 2
        left, right = subs[:half], subs[half:]
        lprod = left[0]
        for g in left[1:]:
            lprod = lprod * g
        rprod = right[0]
        for g in right[1:]:
            rprod = rprod * g
        U, W = _pair_layers(tgt, lprod, rprod, ring, K)
        return rec(U, left) + rec(W, right)

    return lc_layers, rec(target, [g.monic() for g in factors])
