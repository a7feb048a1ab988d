"""Integer-lattice LLL reduction and minimal-polynomial recognition from a
p-adic approximation.

The reduction is the classic delta-LLL with exact rational Gram-Schmidt data
(incrementally updated, never recomputed from scratch): basis vectors stay
integral, all mu and |b*|^2 values are Fractions, so both LLL conditions can
be asserted exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DependentBasis
from .poly import BiPoly, UniPoly
from .rings import ZZ, ModElem


@dataclass
class LatticeBasis:
    columns: list[list[int]]
    provenance: str = "Generic"

    def __post_init__(self):
        if not self.columns:
            raise ValueError("empty basis")
        dim = len(self.columns[0])
        if any(len(c) != dim for c in self.columns):
            raise ValueError("columns of unequal dimension")
        if len(self.columns) > dim:
            raise ValueError("more vectors than the ambient dimension")

    @property
    def dim(self) -> int:
        return len(self.columns[0])

    @property
    def rank(self) -> int:
        return len(self.columns)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def gram_det(basis: LatticeBasis) -> Fraction:
    """Determinant of the Gram matrix (0 iff the vectors are dependent)."""
    n = basis.rank
    g = [
        [Fraction(_dot(basis.columns[i], basis.columns[j])) for j in range(n)]
        for i in range(n)
    ]
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if g[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            g[col], g[piv] = g[piv], g[col]
            det = -det
        det *= g[col][col]
        inv = 1 / g[col][col]
        for r in range(col + 1, n):
            factor = g[r][col] * inv
            if factor:
                g[r] = [a - factor * b for a, b in zip(g[r], g[col])]
    return det


def lll_reduce(basis: LatticeBasis, delta: Fraction = Fraction(3, 4)) -> LatticeBasis:
    """delta-LLL reduction; returns a new basis of the same lattice whose
    vectors are size-reduced (|mu_kj| <= 1/2) and satisfy the Lovasz
    condition exactly."""
    delta = Fraction(delta)
    if not (Fraction(1, 4) < delta < 1):
        raise ValueError("delta must lie in (1/4, 1)")
    n = basis.rank
    b = [list(map(int, col)) for col in basis.columns]
    if n == 1:
        if all(c == 0 for c in b[0]):
            raise DependentBasis("zero vector")
        return LatticeBasis([list(b[0])], basis.provenance)

    bstar: list[list[Fraction]] = [[] for _ in range(n)]
    B: list[Fraction] = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]

    def gs_row(k: int) -> None:
        v = [Fraction(x) for x in b[k]]
        for j in range(k):
            mu[k][j] = Fraction(_dot(b[k], bstar[j])) / B[j]
            v = [a - mu[k][j] * c for a, c in zip(v, bstar[j])]
        bstar[k] = v
        B[k] = _dot(v, v)
        if B[k] == 0:
            raise DependentBasis("vectors are linearly dependent")

    def size_reduce(k: int, l: int) -> None:
        if 2 * abs(mu[k][l]) > 1:
            q = round(mu[k][l])
            b[k] = [a - q * c for a, c in zip(b[k], b[l])]
            mu[k][l] -= q
            for i in range(l):
                mu[k][i] -= q * mu[l][i]

    gs_row(0)
    kmax = 0
    k = 1
    while k < n:
        if k > kmax:
            kmax = k
            gs_row(k)
        size_reduce(k, k - 1)
        if B[k] < (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            # swap b_k, b_{k-1} and patch the Gram-Schmidt data in place
            b[k], b[k - 1] = b[k - 1], b[k]
            for j in range(k - 1):
                mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
            m = mu[k][k - 1]
            Bnew = B[k] + m * m * B[k - 1]
            mu[k][k - 1] = m * B[k - 1] / Bnew
            bold = bstar[k - 1]
            bstar[k - 1] = [a + m * c for a, c in zip(bstar[k], bold)]
            ratio = B[k] / Bnew
            bstar[k] = [
                -mu[k][k - 1] * a + ratio * c for a, c in zip(bstar[k], bold)
            ]
            B[k] = B[k - 1] * B[k] / Bnew
            B[k - 1] = Bnew
            for i in range(k + 1, kmax + 1):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return LatticeBasis([list(col) for col in b], basis.provenance)


# -- exact verification helpers (used by the test suites) --------------------


def gram_schmidt_data(basis: LatticeBasis):
    """(bstar, B, mu) computed from scratch with Fractions."""
    n = basis.rank
    bstar = []
    B = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        v = [Fraction(x) for x in basis.columns[k]]
        for j in range(k):
            mu[k][j] = Fraction(_dot(basis.columns[k], bstar[j])) / B[j]
            v = [a - mu[k][j] * c for a, c in zip(v, bstar[j])]
        bstar.append(v)
        B.append(_dot(v, v))
        if B[k] == 0:
            raise DependentBasis("vectors are linearly dependent")
    return bstar, B, mu


def is_size_reduced(basis: LatticeBasis) -> bool:
    _, _, mu = gram_schmidt_data(basis)
    n = basis.rank
    return all(2 * abs(mu[k][j]) <= 1 for k in range(n) for j in range(k))


def satisfies_lovasz(basis: LatticeBasis, delta: Fraction = Fraction(3, 4)) -> bool:
    _, B, mu = gram_schmidt_data(basis)
    delta = Fraction(delta)
    return all(
        B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1] for k in range(1, basis.rank)
    )


def change_of_basis(src: LatticeBasis, dst: LatticeBasis):
    """Integer matrix U with src * U = dst and |det U| = 1, or None.

    Existence proves that src and dst generate the same lattice."""
    if src.rank != dst.rank or src.dim != dst.dim:
        return None
    n = src.rank
    # solve via the Gram system: (src^T src) U = src^T dst, exact
    gram = [
        [Fraction(_dot(src.columns[i], src.columns[j])) for j in range(n)]
        for i in range(n)
    ]
    rhs = [
        [Fraction(_dot(src.columns[i], dst.columns[j])) for j in range(n)]
        for i in range(n)
    ]
    aug = [gram[i] + rhs[i] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * c for a, c in zip(aug[r], aug[col])]
    U = [[aug[i][n + j] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in U for x in row):
        return None
    U = [[int(x) for x in row] for row in U]
    # verify exactly
    for j in range(n):
        col = [
            sum(src.columns[i][r] * U[i][j] for i in range(n)) for r in range(src.dim)
        ]
        if col != list(dst.columns[j]):
            return None
    det = _int_det(U)
    if det not in (1, -1):
        return None
    return U


def _int_det(M) -> int:
    # fraction-free Gaussian elimination (Bareiss)
    n = len(M)
    a = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


# ---------------------------------------------------------------------------
# minimal-polynomial recognition
# ---------------------------------------------------------------------------


def accuracy_bound(p: int, s: int, Q: int) -> int:
    """Smallest integer lam with p^lam >= 2^(s^2/2) (s+1)^s Q^(2s).

    Compared in squared form, p^(2 lam) >= 2^(s^2) (s+1)^(2s) Q^(4s), so the
    half-integer exponent on 2 never leaves exact integer arithmetic."""
    if p < 2 or s < 1 or Q < 1:
        raise ValueError("need p >= 2, s >= 1, Q >= 1")
    rhs = (1 << (s * s)) * (s + 1) ** (2 * s) * Q ** (4 * s)
    lam = 1
    lhs = p * p
    while lhs < rhs:
        lhs *= p * p
        lam += 1
    return lam


@dataclass
class CandidateMinPoly:
    G: UniPoly  # integer polynomial of degree <= s
    G_s: int  # its leading coefficient
    source: tuple = field(default=())  # (alpha_bar, p, lam, s)

    @property
    def degree(self) -> int:
        return self.G.degree


def build_minpoly_lattice(alpha_bar: ModElem, s: int) -> LatticeBasis:
    """The (s+1) x (s+1) basis matrix B from the polynomials
    T^i (T - alpha_bar), i = 0..s-1, together with the constant p^lam;
    row r holds the coefficient of T^(s-r)."""
    if s < 1:
        raise ValueError("s must be >= 1")
    a = alpha_bar.value  # canonical representative in [0, p^lam)
    M = alpha_bar.modulus
    cols = []
    for i in range(s):
        col = [0] * (s + 1)
        col[i] = 1
        col[i + 1] = -a
        cols.append(col)
    last = [0] * (s + 1)
    last[s] = M
    cols.append(last)
    return LatticeBasis(cols, provenance="MinPolyMatrixB")


def min_poly_from_approx(
    alpha_bar: ModElem, p: int, lam: int, s: int
) -> CandidateMinPoly:
    """Candidate minimal polynomial of the algebraic number approximated
    p-adically by alpha_bar mod p^lam: first vector of the LLL-reduced
    lattice basis, decoded into a polynomial of degree <= s.

    The caller judges the candidate (recognition identity, irreducibility,
    degree); nothing is guaranteed when lam is below the accuracy bound."""
    if alpha_bar.modulus != p ** lam:
        raise ValueError("alpha_bar modulus does not match p^lam")
    basis = build_minpoly_lattice(alpha_bar, s)
    reduced = lll_reduce(basis)
    v = reduced.columns[0]
    coeffs = [v[s - k] for k in range(s + 1)]  # ascending in T
    G = UniPoly(coeffs, ZZ)
    if G.is_zero:
        raise DependentBasis("reduced basis produced the zero vector")
    # primitive, positive leading coefficient
    import math

    g = 0
    for c in G.coeffs:
        g = math.gcd(g, abs(int(c)))
    if int(G.lc) < 0:
        g = -g
    G = UniPoly([c // g for c in G.coeffs], ZZ)
    return CandidateMinPoly(G, int(G.lc), source=(alpha_bar.value, p, lam, s))


def recognition_check(G, f: BiPoly, x0: int, y0: int, s: int) -> bool:
    """Exact test of q(0)/q_s = (-1)^s f(x0,y0)/phi_n, phi_n the leading
    coefficient of f(x0, Y).  A cheap necessary condition for G to be the
    minimal polynomial produced by the lifting branch."""
    if isinstance(G, CandidateMinPoly):
        G = G.G
    u = f.evaluate_x(x0)
    if u.is_zero:
        raise ValueError("f(x0, Y) = 0")
    phi = Fraction(u.lc)
    if phi == 0:
        raise ValueError("leading coefficient vanishes at x0")
    val = Fraction(int(f.evaluate(x0, y0)))
    lhs = Fraction(int(G.coeff(0)), int(G.lc))
    rhs = val / phi
    if s % 2 == 1:
        rhs = -rhs
    return lhs == rhs
