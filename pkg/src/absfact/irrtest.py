"""Las Vegas absolute-irreducibility tests for rationally irreducible
f in Z[X, Y].

All four tests only ever answer "absolutely irreducible" (with a replayable
witness) or "unknown"; rational irreducibility of the input is a caller
contract and is not re-verified here (the CLI offers --verify-rational).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import prime_divisors, primes_upto
from .errors import ZeroPolynomial
from .modfactor import (
    _bp_shift_x,
    _bp_swap,
    _bp_tdeg,
    _bipoly_of_dict,
    bi_irreducible_fp,
)
from .polytope import newton_polytope, newton_polytope_of_support
from .poly import BiPoly
from .rings import Zmod

ABS_IRREDUCIBLE = "absolutely_irreducible"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Witness:
    method: str  # "direct" | "mod" | "chgvar" | "ragot"
    p: int | None = None
    shift: tuple[int, int] | None = None


@dataclass(frozen=True)
class IrrAnswer:
    verdict: str
    witness: Witness | None = None

    @property
    def certified(self) -> bool:
        return self.verdict == ABS_IRREDUCIBLE


def _int_dict(f: BiPoly) -> dict:
    return {k: int(c) for k, c in f.terms.items()}


def _mod_dict(d: dict, p: int) -> dict:
    return {k: c % p for k, c in d.items() if c % p}


def _shift_dict(d: dict, a: int, b: int, p: int) -> dict:
    out = _bp_shift_x(d, a, p)
    if b % p:
        out = _bp_swap(_bp_shift_x(_bp_swap(out), b, p))
    return out


def _cond_c_dict(d: dict) -> bool:
    return newton_polytope_of_support(d.keys()).g == 1


def _irreducible_modp(d: dict, p: int, rng) -> bool:
    return bi_irreducible_fp(_bipoly_of_dict(d, Zmod(p)), rng)


def test_direct(f: BiPoly) -> IrrAnswer:
    """Vertex-gcd criterion applied to f itself: condition (C) certifies
    absolute irreducibility of a rationally irreducible polynomial."""
    if f.is_zero:
        raise ZeroPolynomial("zero polynomial")
    pt = newton_polytope(f)
    if pt.g == 1:
        return IrrAnswer(ABS_IRREDUCIBLE, Witness("direct"))
    return IrrAnswer(UNKNOWN)


def newton_polytope_mod(f: BiPoly, rng: random.Random | None = None) -> IrrAnswer:
    """Reduce mod the primes dividing some hull-vertex coefficient of f; a
    reduction that keeps the total degree, satisfies condition (C) and is
    irreducible over F_p certifies f."""
    rng = rng if rng is not None else random.Random(0)
    d = _int_dict(f)
    if not d:
        raise ZeroPolynomial("zero polynomial")
    n = _bp_tdeg(d)
    pt = newton_polytope_of_support(d.keys())
    primes: set[int] = set()
    for v in pt.vertices:
        primes.update(prime_divisors(d[v]))
    for p in sorted(primes):
        dp = _mod_dict(d, p)
        if not dp or _bp_tdeg(dp) != n:
            continue
        if not _cond_c_dict(dp):
            continue
        if _irreducible_modp(dp, p, rng):
            return IrrAnswer(ABS_IRREDUCIBLE, Witness("mod", p=p))
    return IrrAnswer(UNKNOWN)


def newton_polytope_mod_chg_var(
    f: BiPoly, p_max: int = 101, rng: random.Random | None = None
) -> IrrAnswer:
    """Try small primes with all coordinate shifts (a, b) in F_p^2: a shifted
    reduction satisfying condition (C) and irreducible over F_p certifies f.

    Primes ascend and shifts run row-major, so witnesses are reproducible."""
    rng = rng if rng is not None else random.Random(0)
    d = _int_dict(f)
    if not d:
        raise ZeroPolynomial("zero polynomial")
    n = _bp_tdeg(d)
    for p in primes_upto(p_max):
        dp = _mod_dict(d, p)
        # total degree and irreducibility are invariant under the shifts
        if not dp or _bp_tdeg(dp) != n:
            continue
        irreducible = None
        for a in range(p):
            da = _bp_shift_x(dp, a, p)
            for b in range(p):
                dab = _shift_dict(da, 0, b, p)
                if not _cond_c_dict(dab):
                    continue
                if irreducible is None:
                    irreducible = _irreducible_modp(dp, p, rng)
                if not irreducible:
                    break
                return IrrAnswer(ABS_IRREDUCIBLE, Witness("chgvar", p=p, shift=(a, b)))
            if irreducible is False:
                break
    return IrrAnswer(UNKNOWN)


def ragot_test(
    f: BiPoly, p_max: int = 101, rng: random.Random | None = None
) -> IrrAnswer:
    """Simple-root baseline: a point (a, b) over F_p with f(a,b) = 0 and a
    nonvanishing partial derivative, together with mod-p irreducibility and
    preserved total degree, certifies f."""
    rng = rng if rng is not None else random.Random(0)
    d = _int_dict(f)
    if not d:
        raise ZeroPolynomial("zero polynomial")
    n = _bp_tdeg(d)
    for p in primes_upto(p_max):
        dp = _mod_dict(d, p)
        if not dp or _bp_tdeg(dp) != n:
            continue
        fx = {(i - 1, j): c * i % p for (i, j), c in dp.items() if i and c * i % p}
        fy = {(i, j - 1): c * j % p for (i, j), c in dp.items() if j and c * j % p}
        irreducible = None
        done_p = False
        for a in range(p):
            for b in range(p):
                if _eval_dict(dp, a, b, p) != 0:
                    continue
                if _eval_dict(fx, a, b, p) == 0 and _eval_dict(fy, a, b, p) == 0:
                    continue
                if irreducible is None:
                    irreducible = _irreducible_modp(dp, p, rng)
                if not irreducible:
                    done_p = True
                    break
                return IrrAnswer(ABS_IRREDUCIBLE, Witness("ragot", p=p, shift=(a, b)))
            if done_p:
                break
    return IrrAnswer(UNKNOWN)


def _eval_dict(d: dict, a: int, b: int, p: int) -> int:
    acc = 0
    for (i, j), c in d.items():
        acc = (acc + c * pow(a, i, p) * pow(b, j, p)) % p
    return acc


def verify_witness(f: BiPoly, answer: IrrAnswer, rng: random.Random | None = None) -> bool:
    """Replay a certificate: re-derives every condition the witness claims.
    Any certified answer from this module must replay successfully."""
    if not answer.certified:
        return False
    w = answer.witness
    if w is None:
        return False
    rng = rng if rng is not None else random.Random(0)
    d = _int_dict(f)
    n = _bp_tdeg(d)
    if w.method == "direct":
        return _cond_c_dict(d)
    dp = _mod_dict(d, w.p)
    if not dp or _bp_tdeg(dp) != n:
        return False
    if w.method == "mod":
        return _cond_c_dict(dp) and _irreducible_modp(dp, w.p, rng)
    if w.method == "chgvar":
        a, b = w.shift
        dab = _shift_dict(dp, a, b, w.p)
        return _cond_c_dict(dab) and _irreducible_modp(dp, w.p, rng)
    if w.method == "ragot":
        a, b = w.shift
        if _eval_dict(dp, a, b, w.p) != 0:
            return False
        fx = {(i - 1, j): c * i % w.p for (i, j), c in dp.items() if i and c * i % w.p}
        fy = {(i, j - 1): c * j % w.p for (i, j), c in dp.items() if j and c * j % w.p}
        if _eval_dict(fx, a, b, w.p) == 0 and _eval_dict(fy, a, b, w.p) == 0:
            return False
        return _irreducible_modp(dp, w.p, rng)
    return False
