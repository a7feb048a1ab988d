"""Factorization over prime fields F_p.

Univariate: squarefree decomposition, distinct-degree splitting, then
randomized Cantor-Zassenhaus equal-degree splitting.

Bivariate: specialize X at a good point, factor the specialization, lift the
factors X-adically to order tdeg(f)+1 (a true factor's X-degree is bounded by
the total degree, so that order pins it down exactly), then recombine subsets
by trial division.  When no specialization point over F_p is squarefree of
full Y-degree, a short list of unimodular coordinate changes (swap, shears)
is tried before giving up with NoGoodShift.

Internally everything is plain-int coefficient lists / exponent dicts with an
explicit modulus, as usual for mod-p kernels; the public functions speak
UniPoly/BiPoly over Zmod(p).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .errors import NoGoodShift, NotCoprime
from .poly import BiPoly, UniPoly
from .rings import Zmod

# ---------------------------------------------------------------------------
# univariate kernels: coefficient lists, ascending degree, ints in [0, p)
# ---------------------------------------------------------------------------


def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        out[i] = ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
    return _gf_trim(out)


def _gf_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        out[i] = ((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
    return _gf_trim(out)


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _gf_trim(out)


def _gf_scale(a, c, p):
    c %= p
    return _gf_trim([x * c % p for x in a])


def _gf_monic(a, p):
    """(lc, monic(a))."""
    if not a:
        return 0, []
    lc = a[-1]
    if lc == 1:
        return 1, list(a)
    inv = pow(lc, -1, p)
    return lc, [x * inv % p for x in a]


def _gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("mod-p division by zero polynomial")
    inv = pow(b[-1], -1, p)
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _gf_trim(rem)
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1 - db, -1, -1):
        c = rem[i + db] * inv % p
        quo[i] = c
        if c:
            for j in range(db + 1):
                rem[i + j] = (rem[i + j] - c * b[j]) % p
    return _gf_trim(quo), _gf_trim(rem[:db])


def _gf_rem(a, b, p):
    return _gf_divmod(a, b, p)[1]


def _gf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _gf_rem(a, b, p)
    return _gf_monic(a, p)[1]


def _gf_ext_gcd(a, b, p):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    lc, g = _gf_monic(r0, p)
    inv = pow(lc, -1, p)
    return g, _gf_scale(s0, inv, p), _gf_scale(t0, inv, p)


def _gf_diff(a, p):
    return _gf_trim([a[k] * k % p for k in range(1, len(a))])


def _gf_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _gf_pow_mod(a, e, mod, p):
    out = [1]
    base = _gf_rem(a, mod, p)
    while e:
        if e & 1:
            out = _gf_rem(_gf_mul(out, base, p), mod, p)
        base = _gf_rem(_gf_mul(base, base, p), mod, p)
        e >>= 1
    return out


def _gf_pth_root(a, p):
    return [a[k] for k in range(0, len(a), p)]


def _gf_sqf_list(a, p):
    """[(monic squarefree factor, multiplicity)] for monic a."""
    out = []
    d = _gf_diff(a, p)
    if not d:
        if len(a) == 1:
            return []
        root = _gf_pth_root(a, p)
        return [(g, m * p) for g, m in _gf_sqf_list(root, p)]
    g = _gf_gcd(a, d, p)
    h = _gf_divmod(a, g, p)[0]
    k = 1
    while len(h) > 1:
        G = _gf_gcd(g, h, p)
        H = _gf_divmod(h, G, p)[0]
        if len(H) > 1:
            out.append((H, k))
        g = _gf_divmod(g, G, p)[0]
        h = G
        k += 1
    if len(g) > 1:
        root = _gf_pth_root(g, p)
        out += [(f, m * p) for f, m in _gf_sqf_list(root, p)]
    return sorted(out, key=lambda t: t[1])


def _gf_ddf(a, p):
    """Distinct-degree: [(product of irreducibles of degree d, d)] for monic
    squarefree a."""
    out = []
    x = [0, 1]
    h = list(x)
    f = list(a)
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _gf_pow_mod(h, p, f, p)
        g = _gf_gcd(_gf_sub(h, x, p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = _gf_divmod(f, g, p)[0]
            h = _gf_rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _gf_random(deg, p, rng):
    return _gf_trim([rng.randrange(p) for _ in range(deg + 1)])


def _gf_edf(a, d, p, rng):
    """Equal-degree splitting of monic squarefree a, all factors of degree d."""
    n = len(a) - 1
    if n == d:
        return [a]
    out = []
    stack = [a]
    while stack:
        f = stack.pop()
        if len(f) - 1 == d:
            out.append(f)
            continue
        while True:
            r = _gf_random(len(f) - 2, p, rng)
            if len(r) < 2:
                continue  # constants never split
            if p == 2:
                # trace map over F_2^d
                t = list(r)
                acc = list(r)
                for _ in range(d - 1):
                    acc = _gf_rem(_gf_mul(acc, acc, p), f, p)
                    t = _gf_add(t, acc, p)
                g = _gf_gcd(t, f, p)
            else:
                e = (p ** d - 1) // 2
                t = _gf_pow_mod(r, e, f, p)
                g = _gf_gcd(_gf_sub(t, [1], p), f, p)
            if 0 < len(g) - 1 < len(f) - 1:
                stack.append(g)
                stack.append(_gf_divmod(f, g, p)[0])
                break
    return out


def _gf_factor(a, p, rng):
    """(unit, [(monic irreducible, mult)]), canonically sorted."""
    lc, a = _gf_monic(a, p)
    out = []
    if len(a) > 1:
        for sq, mult in _gf_sqf_list(a, p):
            for part, d in _gf_ddf(sq, p):
                for irr in _gf_edf(part, d, p, rng):
                    out.append((irr, mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return lc, out


# ---------------------------------------------------------------------------
# bivariate kernels: dicts (i, j) -> int in [0, p)
# ---------------------------------------------------------------------------


def _bp_clean(d, p):
    return {k: v % p for k, v in d.items() if v % p}


def _bp_mul(a, b, p):
    out: dict[tuple[int, int], int] = {}
    for (i1, j1), x in a.items():
        for (i2, j2), y in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = (out.get(k, 0) + x * y) % p
    return {k: v for k, v in out.items() if v}


def _bp_sub(a, b, p):
    out = dict(a)
    for k, v in b.items():
        out[k] = (out.get(k, 0) - v) % p
    return {k: v for k, v in out.items() if v}


def _bp_tdeg(d):
    return max(i + j for i, j in d) if d else -1


def _bp_deg_y(d):
    return max(j for _, j in d) if d else -1


def _bp_deg_x(d):
    return max(i for i, _ in d) if d else -1


def _bp_eval_x(d, a, p):
    """Coefficient list of f(a, Y)."""
    if not d:
        return []
    out = [0] * (_bp_deg_y(d) + 1)
    xp = [1] * (_bp_deg_x(d) + 1)
    for i in range(1, len(xp)):
        xp[i] = xp[i - 1] * a % p
    for (i, j), c in d.items():
        out[j] = (out[j] + c * xp[i]) % p
    return _gf_trim(out)


def _bp_diff_y(d, p):
    out = {}
    for (i, j), c in d.items():
        if j:
            v = c * j % p
            if v:
                out[(i, j - 1)] = v
    return out


def _bp_swap(d):
    return {(j, i): c for (i, j), c in d.items()}


def _bp_shift_x(d, a, p):
    """Substitute X -> X + a."""
    if a % p == 0:
        return dict(d)
    out: dict[tuple[int, int], int] = {}
    for (i, j), v in d.items():
        ap = 1
        for k in range(i, -1, -1):
            coeff = v * math.comb(i, k) % p * ap % p
            if coeff:
                key = (k, j)
                out[key] = (out.get(key, 0) + coeff) % p
            ap = ap * a % p
    return {k: v for k, v in out.items() if v}


def _bp_cols(d):
    """Y-degree -> X-coefficient list."""
    cols: dict[int, dict[int, int]] = {}
    for (i, j), c in d.items():
        cols.setdefault(j, {})[i] = c
    out = {}
    for j, col in cols.items():
        top = max(col)
        out[j] = [col.get(i, 0) for i in range(top + 1)]
    return out


def _bp_from_cols(cols):
    d = {}
    for j, xs in cols.items():
        for i, c in enumerate(xs):
            if c:
                d[(i, j)] = c
    return d


def _bp_content_y(d, p):
    """gcd in F_p[X] of the Y-coefficients."""
    g: list[int] = []
    for xs in _bp_cols(d).values():
        g = _gf_gcd(g, xs, p)
        if len(g) == 1:
            return [1]
    return g


def _bp_grlex_lt(d):
    key = max(d, key=lambda ij: (ij[0] + ij[1], ij[0]))
    return key, d[key]


def _bp_exact_div(a, b, p):
    """Exact quotient a/b or None, by graded-lex leading-term elimination."""
    if not b:
        raise ZeroDivisionError
    rem = dict(a)
    quo: dict[tuple[int, int], int] = {}
    (bi, bj), bc = _bp_grlex_lt(b)
    binv = pow(bc, -1, p)
    while rem:
        (ri, rj), rc = _bp_grlex_lt(rem)
        if ri < bi or rj < bj:
            return None
        c = rc * binv % p
        k = (ri - bi, rj - bj)
        quo[k] = c
        for (i, j), v in b.items():
            kk = (i + k[0], j + k[1])
            nv = (rem.get(kk, 0) - c * v) % p
            if nv:
                rem[kk] = nv
            elif kk in rem:
                del rem[kk]
    return quo


def _bp_gcd(a, b, p):
    """Bivariate gcd over F_p, normalized to graded-lex leading coefficient 1.
    Primitive PRS in Y over F_p[X]."""
    if not a:
        return _bp_normalize(b, p)[1]
    if not b:
        return _bp_normalize(a, p)[1]
    ca = _bp_content_y(a, p)
    cb = _bp_content_y(b, p)
    cg = _gf_gcd(ca, cb, p)

    def pp(d):
        cont = _bp_content_y(d, p)
        if len(cont) == 1:
            return d
        cols = _bp_cols(d)
        return _bp_from_cols({j: _gf_divmod(xs, cont, p)[0] for j, xs in cols.items()})

    A, B = pp(a), pp(b)
    if _bp_deg_y(A) < _bp_deg_y(B):
        A, B = B, A
    while B:
        R = _bpy_prem(A, B, p)
        A, B = B, pp(R) if R else {}
    # multiply primitive gcd by content gcd
    out = _bp_mul(A, {(i, 0): c for i, c in enumerate(cg) if c}, p)
    return _bp_normalize(out, p)[1]


def _bpy_prem(A, B, p):
    """Pseudo-remainder of A by B as polynomials in Y over F_p[X]."""
    ca, cb = _bp_cols(A), _bp_cols(B)
    da, db = max(ca), max(cb)
    lcb = cb[db]
    R = {j: list(xs) for j, xs in ca.items()}
    n = da - db + 1
    while R and max(R) >= db:
        dr = max(R)
        lcr = R[dr]
        # R := lcb*R - lcr*Y^(dr-db)*B
        newR: dict[int, list[int]] = {}
        for j, xs in R.items():
            if j == dr:
                continue
            newR[j] = _gf_mul(xs, lcb, p)
        for j, xs in cb.items():
            if j == db:
                continue
            t = _gf_mul(lcr, xs, p)
            k = j + dr - db
            newR[k] = _gf_sub(newR.get(k, []), t, p) if k in newR else _gf_scale(t, -1, p)
        R = {j: xs for j, xs in newR.items() if xs}
        n -= 1
    for _ in range(n):
        R = {j: _gf_mul(xs, lcb, p) for j, xs in R.items()}
        R = {j: xs for j, xs in R.items() if xs}
    return _bp_from_cols(R)


def _bp_normalize(d, p):
    """(unit, normalized) with graded-lex leading coefficient 1."""
    if not d:
        return 1, {}
    _, c = _bp_grlex_lt(d)
    if c == 1:
        return 1, dict(d)
    inv = pow(c, -1, p)
    return c, {k: v * inv % p for k, v in d.items()}


# ---------------------------------------------------------------------------
# X-adic lifting mod p, truncated at order K
# ---------------------------------------------------------------------------


def _sx_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _series_pack(d, K):
    """dict -> list over X-order of Y-coefficient lists."""
    out = [dict() for _ in range(K)]
    for (i, j), c in d.items():
        if i < K:
            out[i][j] = c
    packed = []
    for layer in out:
        if layer:
            top = max(layer)
            packed.append([layer.get(j, 0) for j in range(top + 1)])
        else:
            packed.append([])
    return packed


def _series_unpack(layers):
    d = {}
    for i, ys in enumerate(layers):
        for j, c in enumerate(ys):
            if c:
                d[(i, j)] = c
    return d


def _series_inv_x(lc_layers, p, K):
    """Inverse of a power series in X (constant term nonzero), truncated."""
    c0 = lc_layers[0]
    inv0 = pow(c0, -1, p)
    out = [inv0] + [0] * (K - 1)
    for k in range(1, K):
        acc = 0
        for i in range(1, k + 1):
            if i < len(lc_layers):
                acc = (acc + lc_layers[i] * out[k - i]) % p
        out[k] = -acc * inv0 % p
    return out


def _lift_pair_x(target, u0, w0, p, K):
    """Lift target = U*W mod X^K from the coprime split u0*w0 at X=0.

    target: layers (list over X-order of Y-coeff lists), monic in Y.
    u0, w0: monic coprime univariate mod p.  Returns (U, W) as layers.
    """
    g, s, t = _gf_ext_gcd(u0, w0, p)
    if len(g) != 1:
        raise NotCoprime("specialized factors are not coprime")
    U = [list(u0)] + [[] for _ in range(K - 1)]
    W = [list(w0)] + [[] for _ in range(K - 1)]
    for k in range(1, K):
        conv: list[int] = []
        for i in range(k + 1):
            a = U[i]
            b = W[k - i]
            if a and b:
                conv = _gf_add(conv, _gf_mul(a, b, p), p)
        tk = target[k] if k < len(target) else []
        e = _gf_sub(tk, conv, p)
        if not e:
            continue
        # du*w0 + dw*u0 = e with deg du < deg u0
        te = _gf_mul(t, e, p)
        q, du = _gf_divmod(te, u0, p)
        dw = _gf_add(_gf_mul(s, e, p), _gf_mul(q, w0, p), p)
        U[k] = du
        W[k] = dw
    return U, W


def _lift_tree_x(target, factors, p, K):
    """Lift all univariate factors against the (monic) target layers."""
    if len(factors) == 1:
        return [target]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    u0 = [1]
    for f in left:
        u0 = _gf_mul(u0, f, p)
    w0 = [1]
    for f in right:
        w0 = _gf_mul(w0, f, p)
    U, W = _lift_pair_x(target, u0, w0, p, K)
    return _lift_tree_x(U, left, p, K) + _lift_tree_x(W, right, p, K)


def _series_mul(A, B, p, K):
    out = [[] for _ in range(K)]
    for i, a in enumerate(A):
        if not a:
            continue
        for j in range(K - i):
            b = B[j]
            if b:
                out[i + j] = _gf_add(out[i + j], _gf_mul(a, b, p), p)
    return out


def _series_scale_x(A, xs, p, K):
    """Multiply layers by a univariate polynomial in X (as series)."""
    out = [[] for _ in range(K)]
    for i, c in enumerate(xs):
        if c == 0 or i >= K:
            continue
        for j in range(K - i):
            if A[j]:
                out[i + j] = _gf_add(out[i + j], _gf_scale(A[j], c, p), p)
    return out


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


@dataclass
class FpFactorization:
    p: int
    factors: list  # [(UniPoly|BiPoly over Zmod(p), multiplicity)]
    unit: object  # scalar in F_p (ModElem)

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


def _ring_p(obj) -> int:
    ring = obj.ring
    if not isinstance(ring, Zmod) or not ring.is_field:
        raise TypeError("expected coefficients mod a prime p")
    return ring.m


def uni_factor_fp(u: UniPoly, rng: random.Random | None = None) -> FpFactorization:
    """Complete factorization of u over F_p.

    Deterministic given the seed; the output ordering is canonical so the
    result does not depend on the rng at all, only the running time may.
    """
    if u.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    p = _ring_p(u)
    rng = rng if rng is not None else random.Random(0)
    ring = u.ring
    coeffs = [c.value for c in u.coeffs]
    lc, raw = _gf_factor(coeffs, p, rng)
    factors = [
        (UniPoly.from_ints(f, ring), m) for f, m in raw
    ]
    return FpFactorization(p, factors, ring.from_int(lc))


def _dict_of_bipoly(f: BiPoly) -> dict:
    return {k: c.value for k, c in f.terms.items()}


def _bipoly_of_dict(d: dict, ring: Zmod) -> BiPoly:
    return BiPoly({k: ring.from_int(c) for k, c in d.items()}, ring)


def bi_factor_fp(f: BiPoly, rng: random.Random | None = None) -> FpFactorization:
    """Complete irreducible factorization of f over F_p[X, Y]."""
    p = _ring_p(f)
    rng = rng if rng is not None else random.Random(0)
    ring = f.ring
    d = _dict_of_bipoly(f)
    if not d:
        raise ValueError("cannot factor the zero polynomial")
    parts = _bp_factor(d, p, rng)
    parts.sort(key=lambda t: (_bp_tdeg(t[0]), sorted(t[0].items())))
    # factors are normalized (graded-lex leading coefficient 1) and the
    # graded-lex leading term is multiplicative, so the unit is just the
    # leading coefficient of the input
    unit = _bp_grlex_lt(d)[1]
    return FpFactorization(
        p,
        [(_bipoly_of_dict(g, ring), m) for g, m in parts],
        ring.from_int(unit),
    )


def bi_irreducible_fp(f: BiPoly, rng: random.Random | None = None) -> bool:
    """True iff f is irreducible in F_p[X, Y]."""
    return bi_factor_fp(f, rng).is_irreducible()


def _bp_factor(d, p, rng):
    """[(normalized dict factor, mult)] for a nonzero exponent-dict mod p."""
    if _bp_tdeg(d) == 0:
        return []
    # pure univariate shortcuts
    if _bp_deg_y(d) == 0:
        xs = [0] * (_bp_deg_x(d) + 1)
        for (i, _), c in d.items():
            xs[i] = c
        _, raw = _gf_factor(xs, p, rng)
        return [({(i, 0): c for i, c in enumerate(g) if c}, m) for g, m in raw]
    if _bp_deg_x(d) == 0:
        ys = [0] * (_bp_deg_y(d) + 1)
        for (_, j), c in d.items():
            ys[j] = c
        _, raw = _gf_factor(ys, p, rng)
        return [({(0, j): c for j, c in enumerate(g) if c}, m) for g, m in raw]
    # split off the content w.r.t. Y
    cont = _bp_content_y(d, p)
    if len(cont) > 1:
        cols = _bp_cols(d)
        pp = _bp_from_cols({j: _gf_divmod(xs, cont, p)[0] for j, xs in cols.items()})
        parts1 = _bp_factor({(i, 0): c for i, c in enumerate(cont) if c}, p, rng)
        parts2 = _bp_factor(pp, p, rng)
        return _merge_factor_lists(parts1, parts2)
    dy = _bp_diff_y(d, p)
    if not dy:
        if all(i % p == 0 and j % p == 0 for i, j in d):
            root = {(i // p, j // p): c for (i, j), c in d.items()}
            return [(g, m * p) for g, m in _bp_factor(root, p, rng)]
        # derivative in X cannot also vanish now; factor the swap
        parts = _bp_factor(_bp_swap(d), p, rng)
        return [(_bp_normalize(_bp_swap(g), p)[1], m) for g, m in parts]
    g = _bp_gcd(d, dy, p)
    if _bp_tdeg(g) > 0:
        rest = _bp_exact_div(d, g, p)
        parts1 = _bp_factor(rest, p, rng)
        parts2 = _bp_factor(g, p, rng)
        return _merge_factor_lists(parts1, parts2)
    _, nd = _bp_normalize(d, p)
    return [(h, 1) for h in _bp_factor_squarefree(nd, p, rng)]


def _merge_factor_lists(a, b):
    out = list(a)
    for g, m in b:
        for idx, (h, mm) in enumerate(out):
            if h == g:
                out[idx] = (h, mm + m)
                break
        else:
            out.append((g, m))
    return out


_MAX_SHEAR = 8


def _bp_sub_linear(d, mat, p):
    """Substitute (X, Y) -> (a X + b Y, c X + e Y) for mat = (a, b, c, e)."""
    a, b, c, e = (v % p for v in mat)
    out: dict[tuple[int, int], int] = {}
    for (i, j), v in d.items():
        # (aX + bY)^i expanded
        xs = {(0, 0): 1}
        for _ in range(i):
            nxt: dict[tuple[int, int], int] = {}
            for (ii, jj), w in xs.items():
                if a:
                    k = (ii + 1, jj)
                    nxt[k] = (nxt.get(k, 0) + w * a) % p
                if b:
                    k = (ii, jj + 1)
                    nxt[k] = (nxt.get(k, 0) + w * b) % p
            xs = {k: w for k, w in nxt.items() if w}
        ys = {(0, 0): 1}
        for _ in range(j):
            nxt = {}
            for (ii, jj), w in ys.items():
                if c:
                    k = (ii + 1, jj)
                    nxt[k] = (nxt.get(k, 0) + w * c) % p
                if e:
                    k = (ii, jj + 1)
                    nxt[k] = (nxt.get(k, 0) + w * e) % p
            ys = {k: w for k, w in nxt.items() if w}
        for (i1, j1), w1 in xs.items():
            for (i2, j2), w2 in ys.items():
                k = (i1 + i2, j1 + j2)
                val = (out.get(k, 0) + v * w1 * w2) % p
                if val:
                    out[k] = val
                elif k in out:
                    del out[k]
    return out


def _good_transforms(p):
    """Unimodular coordinate changes tried before giving up, cheapest first.
    Matrices are (a, b, c, e) for (X, Y) -> (aX + bY, cX + eY)."""
    yield (1, 0, 0, 1)  # identity
    yield (0, 1, 1, 0)  # swap
    for c in range(1, min(p, _MAX_SHEAR + 1)):
        yield (1, c, 0, 1)  # X -> X + cY
        yield (1, 0, c, 1)  # Y -> Y + cX
        yield (0, 1, 1, c)
        yield (c, 1, 1, 0)


def _mat_inv(mat, p):
    a, b, c, e = (v % p for v in mat)
    det = (a * e - b * c) % p
    inv = pow(det, -1, p)
    return (e * inv % p, -b * inv % p, -c * inv % p, a * inv % p)


def _apply_transform(d, mat, p):
    if mat == (1, 0, 0, 1):
        return dict(d)
    if mat == (0, 1, 1, 0):
        return _bp_swap(d)
    return _bp_sub_linear(d, mat, p)


def _undo_transform(d, mat, p):
    return _apply_transform(d, _mat_inv(mat, p), p)


def _find_shift(d, p):
    """a in F_p with f(a, Y) squarefree of full Y-degree, or None."""
    dy = _bp_deg_y(d)
    for a in range(p):
        u = _bp_eval_x(d, a, p)
        if len(u) - 1 != dy:
            continue
        du = _gf_diff(u, p)
        if du and len(_gf_gcd(u, du, p)) == 1:
            return a
    return None


def _bp_factor_squarefree(d, p, rng):
    """Irreducible factors (normalized dicts) of a squarefree, Y-primitive,
    genuinely bivariate d."""
    for mat in _good_transforms(p):
        h = _apply_transform(d, mat, p)
        # the transform can create content in Y; handle it via the full
        # factorization on the transformed polynomial in that case
        if len(_bp_content_y(h, p)) > 1 or _bp_deg_y(h) == 0:
            parts = _bp_factor(h, p, rng)
            assert all(m == 1 for _, m in parts)
            return [
                _bp_normalize(_undo_transform(g, mat, p), p)[1] for g, _ in parts
            ]
        a = _find_shift(h, p)
        if a is None:
            continue
        hs = _bp_shift_x(h, a, p)
        got = _factor_at_origin(hs, p, rng)
        out = []
        for g in got:
            gg = _bp_shift_x(g, -a % p, p)
            gg = _undo_transform(gg, mat, p)
            out.append(_bp_normalize(gg, p)[1])
        return out
    # no coordinate frame admits a squarefree full-degree specialization
    # (possible for tiny p); fall back to exhaustive trial division when the
    # candidate space is small enough to enumerate
    got = _bp_factor_exhaustive(d, p)
    if got is not None:
        return got
    raise NoGoodShift(f"no squarefree full-degree specialization mod {p}")


_EXHAUSTIVE_BUDGET = 300_000


def _bp_factor_exhaustive(d, p):
    """Complete factorization of squarefree d by trial division over all
    normalized candidates of ascending total degree, or None when the
    enumeration would be too large."""
    n = _bp_tdeg(d)
    tri = [(i, j) for i in range(n // 2 + 1) for j in range(n // 2 + 1 - i)]
    if p ** len(tri) > _EXHAUSTIVE_BUDGET:
        return None
    rem = dict(d)
    out = []
    t = 1
    while _bp_tdeg(rem) > 0 and t <= _bp_tdeg(rem) // 2:
        monos = [(i, j) for i in range(t + 1) for j in range(t + 1 - i)]
        progress = True
        while progress and t <= _bp_tdeg(rem) // 2:
            progress = False
            for coeffs in itertools.product(range(p), repeat=len(monos)):
                cand = {monos[k]: coeffs[k] for k in range(len(monos)) if coeffs[k]}
                if not cand or _bp_tdeg(cand) != t:
                    continue
                if _bp_grlex_lt(cand)[1] != 1:
                    continue
                quo = _bp_exact_div(rem, cand, p)
                if quo is not None:
                    out.append(cand)
                    rem = quo
                    progress = True
                    break
        t += 1
    if _bp_tdeg(rem) > 0:
        out.append(_bp_normalize(rem, p)[1])
    return out


def _factor_at_origin(d, p, rng):
    """Factor squarefree d with d(0, Y) squarefree of full Y-degree."""
    n_y = _bp_deg_y(d)
    u = _bp_eval_x(d, 0, p)
    _, u_monic = _gf_monic(u, p)
    _, uni = _gf_factor(u_monic, p, rng)
    uni_factors = [f for f, _ in uni]
    if len(uni_factors) == 1:
        return [dict(d)]
    K = _bp_tdeg(d) + 1
    # monicize: divide by the leading Y-coefficient as a power series in X
    cols = _bp_cols(d)
    lc_poly = cols[n_y] + [0] * K
    lc_inv = _series_inv_x(lc_poly, p, K)
    layers = _series_pack(d, K)
    target = _series_scale_x(layers, lc_inv, p, K)
    lifted = _lift_tree_x(target, uni_factors, p, K)
    lc_series = [[lc] if lc else [] for lc in lc_poly[:K]]

    out = []
    pool = list(range(len(uni_factors)))
    cur = dict(d)
    cur_lc_series = lc_series
    size = 1
    while 2 * size <= len(pool):
        found = True
        while found:
            found = False
            for combo in itertools.combinations(pool, size):
                prod = cur_lc_series
                for i in combo:
                    prod = _series_mul(prod, lifted[i], p, K)
                cand = _series_unpack(prod)
                if not cand:
                    continue
                cont = _bp_content_y(cand, p)
                if len(cont) > 1:
                    cols_c = _bp_cols(cand)
                    cand = _bp_from_cols(
                        {j: _gf_divmod(xs, cont, p)[0] for j, xs in cols_c.items()}
                    )
                quo = _bp_exact_div(cur, cand, p)
                if quo is None:
                    continue
                out.append(cand)
                cur = quo
                pool = [i for i in pool if i not in combo]
                # refresh the leading-coefficient series of the new target
                cols_cur = _bp_cols(cur)
                lc_cur = cols_cur[max(cols_cur)] + [0] * K
                cur_lc_series = [[c] if c else [] for c in lc_cur[:K]]
                found = 2 * size <= len(pool)
                break
        size += 1
    if _bp_tdeg(cur) > 0:
        out.append(cur)
    return out
