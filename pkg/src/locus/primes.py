"""Primality, integer factorization and prime enumeration.

Factorization strategy: trial division by all primes below 10^6, then a
deterministic Brent-cycle rho splitter on what remains.  Primality of every
reported factor is certified by Miller-Rabin with a fixed witness set that
is exact below ~3.3e24; anything bigger raises rather than degrading to a
probabilistic answer, because downstream verdicts assume complete
factorizations.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import FactorizationCapacityExceeded, RangeTooLarge

# Miller-Rabin with these witnesses is deterministic below this bound
# (Sorenson-Webster: first 13 primes cover n < 3.317e24).
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981

TRIAL_DIVISION_BOUND = 10**6
PRIME_RANGE_CEILING = 10**9
_SEGMENT = 1 << 17

_small_primes: list[int] | None = None


def _trial_primes() -> list[int]:
    global _small_primes
    if _small_primes is None:
        _small_primes = sieve_upto(TRIAL_DIVISION_BOUND)
    return _small_primes


def sieve_upto(n: int) -> list[int]:
    """All primes <= n by a plain Eratosthenes sieve."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(2, n + 1) if flags[i]]


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        a %= n
        if a == 0:
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


@lru_cache(maxsize=65536)
def is_prime(n: int) -> bool:
    """Deterministic primality for n below MR_DETERMINISTIC_BOUND."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= MR_DETERMINISTIC_BOUND:
        raise FactorizationCapacityExceeded(
            f"cannot certify primality of {n}: above the deterministic bound"
        )
    return _miller_rabin(n, MR_WITNESSES)


def _brent_rho(n: int) -> int:
    """Nontrivial factor of odd composite n, deterministic parameter sweep."""
    if n % 2 == 0:
        return 2
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = math.gcd(q, n)
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationCapacityExceeded(f"rho splitter gave up on {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}.

    Raises FactorizationCapacityExceeded when a surviving cofactor can be
    neither certified prime nor split.
    """
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    if n == 1:
        return out
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m < TRIAL_DIVISION_BOUND**2 or is_prime(m):
            # below the trial square it must be prime; otherwise certified
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def prime_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi, segmented above 2^22."""
    if hi > PRIME_RANGE_CEILING:
        raise RangeTooLarge(f"prime range ceiling is {PRIME_RANGE_CEILING}, got {hi}")
    if hi < lo or hi < 2:
        return []
    lo = max(lo, 2)
    if hi <= 1 << 22:
        return [p for p in sieve_upto(hi) if p >= lo]
    base = sieve_upto(math.isqrt(hi))
    out: list[int] = []
    start = lo
    while start <= hi:
        end = min(start + _SEGMENT - 1, hi)
        flags = bytearray([1]) * (end - start + 1)
        for p in base:
            first = max(p * p, (start + p - 1) // p * p)
            if first > end:
                continue
            flags[first - start :: p] = bytearray(len(range(first, end + 1, p)))
        out.extend(start + i for i, b in enumerate(flags) if b and start + i >= 2)
        start = end + 1
    return out


def prime_power_split(n: int) -> list[tuple[int, int]]:
    """(p, a) pairs with p^a || n, primes ascending."""
    return sorted(factorize(n).items())
