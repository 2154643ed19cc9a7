"""Prime machinery: sieves, deterministic primality, integer factorization.

Everything here is exact.  The sieves are numpy-backed because the Euler
product in `density` consumes millions of primes; factorization uses trial
division for the common case of small targets, then a deterministic
Miller-Rabin test and Brent's cycle-finding variant of Pollard's rho for
large cofactors (targets beyond ~128 bits are outside the supported range).
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import Iterator

import numpy as np

# Trial division handles every factor below this; rho only sees larger ones.
_TRIAL_LIMIT = 10**6

# Witnesses proving primality for all n < 3_317_044_064_679_887_385_961_981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n as an int64 array (simple full sieve)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def prime_blocks(limit: int, block_size: int = 1 << 20) -> Iterator[np.ndarray]:
    """Yield the primes <= limit as consecutive int64 arrays.

    Segmented sieve of Eratosthenes: memory stays O(block_size + sqrt(limit))
    however large the cutoff is.  For fixed (limit, block_size) the block
    boundaries are fixed, so block-wise reductions over the output are
    reproducible.
    """
    if limit < 2:
        return
    base = primes_up_to(isqrt(limit))
    if base.size:
        yield base
    lo = isqrt(limit) + 1
    base_list = [int(p) for p in base]
    while lo <= limit:
        hi = min(lo + block_size, limit + 1)
        segment = np.ones(hi - lo, dtype=bool)
        for p in base_list:
            start = ((lo + p - 1) // p) * p
            if start < hi:
                segment[start - lo :: p] = False
        primes = np.nonzero(segment)[0]
        if primes.size:
            yield (primes + lo).astype(np.int64)
        lo = hi


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test.

    Proven correct below 3.3e24 by the fixed witness set; above that the
    same witnesses make a pseudoprime astronomically unlikely, which is
    ample for the supported target range.
    """
    n = int(n)
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
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


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite n (n odd, no factor <= _TRIAL_LIMIT)."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, m = 2, 128
        g = r = q = 1
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
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # cycle degenerated; retry with the next polynomial


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent} of a positive integer."""
    n = int(n)
    if n < 1:
        raise ValueError(f"cannot factor {n}; expected a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    # wheel over residues coprime to 30
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d <= _TRIAL_LIMIT:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += steps[i]
        i = (i + 1) % 8
    if n == 1:
        return out
    if d * d > n:
        out[n] = out.get(n, 0) + 1
        return out
    # remaining cofactor has no prime factor <= _TRIAL_LIMIT
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _brent_rho(m)
        stack.append(f)
        stack.append(m // f)
    return out


def mobius_up_to(n: int) -> np.ndarray:
    """The Mobius function mu(0..n) as an int8 array (mu(0) set to 0)."""
    if n < 0:
        raise ValueError("bound must be nonnegative")
    mu = np.ones(n + 1, dtype=np.int8)
    if n >= 0:
        mu[0] = 0
    for p in primes_up_to(n):
        p = int(p)
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    return mu
