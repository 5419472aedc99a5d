"""Integer primality and factorization: trial division, Miller-Rabin, Pollard rho.

Primality is deterministic below 2**64 (fixed witness set) and strongly
probabilistic above.  Factorization is exact: the returned multiset always
multiplies back to the input, and every factor reported prime has passed
the primality test.
"""

from __future__ import annotations

import math
import random

# Deterministic Miller-Rabin witnesses for n < 2**64 (Sorenson & Webster).
_SMALL_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 100_000

_small_primes: list[int] | None = None


def small_primes() -> list[int]:
    """Primes below the trial-division bound, sieved once and cached."""
    global _small_primes
    if _small_primes is None:
        sieve = bytearray([1]) * _TRIAL_BOUND
        sieve[0] = sieve[1] = 0
        for i in range(2, math.isqrt(_TRIAL_BOUND) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _small_primes = [i for i in range(_TRIAL_BOUND) if sieve[i]]
    return _small_primes


def primes_up_to(x: int) -> list[int]:
    """All primes p <= x, by sieve of Eratosthenes.

    >>> primes_up_to(20)
    [2, 3, 5, 7, 11, 13, 17, 19]
    """
    if x < 2:
        return []
    sieve = bytearray([1]) * (x + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(x) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(x + 1) if sieve[i]]


def _miller_rabin_witness(n: int, a: int) -> bool:
    """True if a witnesses the compositeness of odd n > 2."""
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int, rng: random.Random | None = None) -> bool:
    """Primality test.

    Deterministic for n < 2**64; for larger n runs the fixed witness set
    plus 20 random rounds (error probability < 4**-20).

    >>> is_prime(2302381)
    True
    >>> [p for p in range(30) if is_prime(p)]
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    for a in _SMALL_WITNESSES:
        if _miller_rabin_witness(n, a):
            return False
    if n < 2**64:
        return True
    rng = rng or random.Random(0xC0FFEE)
    for _ in range(20):
        a = rng.randrange(2, n - 1)
        if _miller_rabin_witness(n, a):
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    """A nontrivial factor of composite n (not necessarily prime).

    Brent's cycle-finding variant with batched gcds.  n must be odd,
    composite, and free of factors below the trial bound.
    """
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
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
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batch overshot; replay one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # cycle degenerated for this (y, c); retry with fresh parameters


def factorize(n: int, seed: int | None = None) -> list[tuple[int, int]]:
    """Factor n >= 1 into a sorted list of (prime, exponent) pairs.

    The rho stage is randomized but seeded, so output is deterministic for
    a fixed seed (default seed is fixed too).

    >>> factorize(2244096)
    [(2, 9), (3, 2), (487, 1)]
    >>> factorize(1)
    []
    """
    if n < 1:
        raise ValueError("factorize expects n >= 1, got %r" % (n,))
    rng = random.Random(0xD1CE if seed is None else seed)
    factors: dict[int, int] = {}
    for p in small_primes():
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m, rng):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return sorted(factors.items())


def factorization_string(factors: list[tuple[int, int]]) -> str:
    """Render (prime, exponent) pairs in ascending order as a product.

    >>> factorization_string([(2, 9), (3, 2), (487, 1)])
    '2^9\\u00b73^2\\u00b7487'
    >>> factorization_string([])
    '1'

    None (a factorization that was never computed) renders as ''.
    """
    if factors is None:
        return ""
    if not factors:
        return "1"
    parts = []
    for p, e in factors:
        parts.append("%d^%d" % (p, e) if e > 1 else "%d" % p)
    return "·".join(parts)


def valuation(n: int, p: int) -> int:
    """v_p(n) for n != 0: the exponent of p in n.

    >>> valuation(2244096, 3)
    2
    """
    if n == 0:
        raise ValueError("valuation of 0 is undefined (infinite)")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
