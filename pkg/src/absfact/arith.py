"""Integer number-theory helpers: primality, prime generation, factoring.

Everything here is exact big-integer arithmetic; no floats.
"""

from __future__ import annotations

import math

# Witnesses proving primality for all n < 3.3 * 10**24 (Sorenson & Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the integer sizes this package meets."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = max(n + 1, 2)
    if k % 2 == 0 and k != 2:
        k += 1
    while not is_prime(k):
        k += 1 if k == 2 else 2
    return k


def primes_upto(bound: int):
    """Iterate primes p with 2 <= p <= bound, ascending."""
    p = 2
    while p <= bound:
        yield p
        p = next_prime(p)


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n must be odd, composite, not a prime power issue
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: multiplicity}; ignores the sign.

    Trial division by small primes, then Pollard rho for the remaining
    cofactor.  Fine at the integer sizes produced by evaluating desk-scale
    polynomials.
    """
    n = abs(n)
    if n <= 1:
        return {}
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    # wheel over 2,3,5 residues
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < 10 ** 6:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += steps[i]
        i = (i + 1) % 8
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            g = _pollard_rho(m)
            stack.append(g)
            stack.append(m // g)
    return out


def prime_divisors(n: int) -> list[int]:
    """Sorted distinct prime divisors of |n|."""
    return sorted(factorint(n))
