"""Exact arithmetic functions (tau, omega, radical) on factored integers,
plus recognition and enumeration of primary integers.

A primary integer is p_1^a_1 * ... * p_k^a_k over the first k primes with
nonincreasing exponents; 1 is primary (k = 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

EXACT_VALUE_LIMIT = 2**63
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)  # deterministic below 3.3e24

# Growing list of the first primes, extended on demand.
_first_primes_cache: list[int] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def first_primes(k: int) -> list[int]:
    """The first k primes (cached, extended by sieving as needed)."""
    while len(_first_primes_cache) < k:
        bound = _first_primes_cache[-1] * 2
        sieve = bytearray([1]) * (bound + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(bound) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
        _first_primes_cache[:] = [i for i in range(bound + 1) if sieve[i]]
    return _first_primes_cache[:k]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 0 <= n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Brent-cycle Pollard rho; deterministic (fixed parameter sequence)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        x = y = 2
        d = 1
        q = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            q = q * abs(x - y) % n
            if q == 0:
                d = math.gcd(abs(x - y), n)
                break
            d = math.gcd(q, n)
        if 1 < d < n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")  # not reachable for n < 2**63


@dataclass(frozen=True)
class Factorization:
    """An integer as (prime, exponent) pairs with its log, and the exact
    value when it fits below 2**63 (larger integers carry only the log)."""

    pairs: tuple[tuple[int, int], ...]
    value_log: float
    value_exact: int | None

    @classmethod
    def from_pairs(cls, pairs) -> "Factorization":
        pairs = tuple((int(p), int(a)) for p, a in pairs)
        for i, (p, a) in enumerate(pairs):
            if a < 1:
                raise ValueError(f"exponent {a} for prime {p} must be >= 1")
            if i > 0 and p <= pairs[i - 1][0]:
                raise ValueError("primes must be strictly increasing")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        value_log = math.fsum(a * math.log(p) for p, a in pairs)
        value_exact = None
        if value_log < 44.0:
            v = 1
            for p, a in pairs:
                v *= p**a
            if v < EXACT_VALUE_LIMIT:
                value_exact = v
        return cls(pairs=pairs, value_log=value_log, value_exact=value_exact)


def factorize(n: int) -> Factorization:
    """Complete factorization of 1 <= n < 2**63 (trial division, then
    Miller-Rabin with Pollard rho on the remaining cofactor)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if n >= EXACT_VALUE_LIMIT:
        raise ValueError(f"{n} is out of the 63-bit factorization range")
    exponents: dict[int, int] = {}
    m = n
    for p in first_primes(168):  # primes below 1000
        if p * p > m:
            break
        while m % p == 0:
            exponents[p] = exponents.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            exponents[v] = exponents.get(v, 0) + 1
            continue
        d = _pollard_rho(v)
        stack.append(d)
        stack.append(v // d)
    pairs = tuple(sorted(exponents.items()))
    return Factorization(
        pairs=pairs,
        value_log=math.fsum(a * math.log(p) for p, a in pairs),
        value_exact=n,
    )


def tau(f: Factorization) -> int:
    """Number of divisors: product of (exponent + 1)."""
    out = 1
    for _, a in f.pairs:
        out *= a + 1
    return out


def tau_log(f: Factorization) -> float:
    """log of the number of divisors (safe for huge factored integers)."""
    return math.fsum(math.log(a + 1) for _, a in f.pairs)


def omega(f: Factorization) -> int:
    """Number of distinct prime factors."""
    return len(f.pairs)


def radical(f: Factorization) -> Factorization:
    """Squarefree kernel: product of the distinct prime factors."""
    return Factorization.from_pairs(tuple((p, 1) for p, _ in f.pairs))


def is_primary(f: Factorization) -> bool:
    """True iff the primes are exactly the first omega primes and the
    exponents are nonincreasing.  1 (empty product) is primary."""
    k = len(f.pairs)
    if k == 0:
        return True
    if [p for p, _ in f.pairs] != first_primes(k):
        return False
    exps = [a for _, a in f.pairs]
    return all(exps[i] >= exps[i + 1] for i in range(k - 1))


def enumerate_primary(limit: int | float) -> Iterator[Factorization]:
    """Every primary integer at most ``limit``, exactly once.

    An int limit bounds the value exactly; a float limit bounds log(value).
    Order is a deterministic depth-first traversal of nonincreasing
    exponent vectors, with per-depth exponent caps derived from the
    remaining budget.
    """
    if isinstance(limit, float):
        log_limit = limit
        exact_limit = None
        if log_limit < 0.0:
            raise ValueError("log-limit must be >= 0")
    else:
        exact_limit = int(limit)
        if exact_limit < 1:
            raise ValueError("limit must be >= 1")
        log_limit = math.log(exact_limit)

    yield Factorization(pairs=(), value_log=0.0, value_exact=1)

    def rec(
        depth: int, cap: int, log_used: float, val_used: int | None, pairs: tuple
    ) -> Iterator[Factorization]:
        p = first_primes(depth + 1)[depth]
        lp = math.log(p)
        if exact_limit is not None:
            a_max = 0
            v = val_used
            while v * p <= exact_limit:
                v *= p
                a_max += 1
            a_max = min(cap, a_max)
        else:
            a_max = min(cap, int((log_limit - log_used) / lp + 1e-12))
        v = val_used
        for a in range(1, a_max + 1):
            if v is not None:
                v *= p
            cur = pairs + ((p, a),)
            log_cur = log_used + a * lp
            yield Factorization(
                pairs=cur,
                value_log=math.fsum(e * math.log(q) for q, e in cur),
                value_exact=v if (v is not None and v < EXACT_VALUE_LIMIT) else None,
            )
            yield from rec(depth + 1, a, log_cur, v, cur)

    yield from rec(0, 10**9, 0.0, 1 if exact_limit is not None else None, ())
