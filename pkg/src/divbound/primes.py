"""Prime table with prefix sums of log p and log log p.

Every other module consumes these tables: ``log_primorial[k]`` is the
natural log of the product of the first k primes, ``loglog_sum[k]`` is
the sum of log log p over the first k primes.  Both arrays are padded so
that index k means "first k primes" (index 0 is 0.0).
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

import numpy as np

CACHE_MAGIC = b"DBPT"
CACHE_VERSION = 1

MAX_TABLE_SIZE = 10**6


def _sieve_upper_bound(count: int) -> int:
    """Upper bound for the count-th prime (Rosser-type), used to size the sieve."""
    if count < 6:
        return 15
    n = float(count)
    return int(n * (math.log(n) + math.log(math.log(n)))) + 16


def segmented_sieve(limit: int, segment_size: int = 1 << 20) -> np.ndarray:
    """All primes <= limit by a segmented sieve of Eratosthenes."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    root = math.isqrt(limit)
    base = np.ones(root + 1, dtype=bool)
    base[:2] = False
    for i in range(2, math.isqrt(root) + 1):
        if base[i]:
            base[i * i :: i] = False
    base_primes = np.nonzero(base)[0].astype(np.int64)

    chunks = [base_primes]
    lo = root + 1
    while lo <= limit:
        hi = min(lo + segment_size, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base_primes:
            p = int(p)
            start = ((lo + p - 1) // p) * p
            if start < hi:
                seg[start - lo :: p] = False
        chunks.append(np.nonzero(seg)[0].astype(np.int64) + lo)
        lo = hi
    return np.concatenate(chunks)


def _compensated_prefix_sums(values: np.ndarray) -> np.ndarray:
    """Prefix sums with Neumaier compensation; error stays near 1 ulp per entry."""
    out = np.empty(len(values) + 1, dtype=np.float64)
    out[0] = 0.0
    total = 0.0
    comp = 0.0
    for i, v in enumerate(values.tolist()):
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
        out[i + 1] = total + comp
    return out


@dataclass(frozen=True)
class PrimeTable:
    """First K primes plus prefix sums; immutable, safe for concurrent reads.

    primes[i] is the (i+1)-th prime.  log_primorial[k] = sum of log p over
    the first k primes, loglog_sum[k] = sum of log log p; both have K+1
    entries with entry 0 equal to 0.0.
    """

    primes: np.ndarray
    log_primorial: np.ndarray
    loglog_sum: np.ndarray

    def __post_init__(self) -> None:
        self.primes.setflags(write=False)
        self.log_primorial.setflags(write=False)
        self.loglog_sum.setflags(write=False)

    @property
    def size(self) -> int:
        return int(len(self.primes))

    def nth_prime(self, k: int) -> int:
        """The k-th prime, 1-indexed."""
        if not 1 <= k <= self.size:
            raise IndexError(f"prime index {k} outside table of size {self.size}")
        return int(self.primes[k - 1])


def build_prime_table(count: int) -> PrimeTable:
    """Table of the first ``count`` primes with compensated prefix sums."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if count > MAX_TABLE_SIZE:
        raise ValueError(f"count {count} exceeds supported maximum {MAX_TABLE_SIZE}")
    primes = segmented_sieve(_sieve_upper_bound(count))[:count]
    if len(primes) < count:
        raise RuntimeError("sieve bound too small")  # unreachable by construction
    logs = np.log(primes.astype(np.float64))
    return PrimeTable(
        primes=primes,
        log_primorial=_compensated_prefix_sums(logs),
        loglog_sum=_compensated_prefix_sums(np.log(logs)),
    )


def save_prime_table(table: PrimeTable, path: str) -> None:
    """Write a table to a versioned little-endian binary cache file."""
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<IQ", CACHE_VERSION, table.size))
        fh.write(table.primes.astype("<i8").tobytes())
        fh.write(table.log_primorial.astype("<f8").tobytes())
        fh.write(table.loglog_sum.astype("<f8").tobytes())


def load_prime_table(path: str) -> PrimeTable:
    """Read a table written by save_prime_table; raises ValueError on bad files."""
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != CACHE_MAGIC:
            raise ValueError(f"not a prime-table cache: bad magic {magic!r}")
        version, count = struct.unpack("<IQ", fh.read(12))
        if version != CACHE_VERSION:
            raise ValueError(f"unsupported cache version {version}")
        primes = np.frombuffer(fh.read(8 * count), dtype="<i8").astype(np.int64)
        sums = fh.read(8 * (count + 1) * 2)
        if len(primes) != count or len(sums) != 8 * (count + 1) * 2:
            raise ValueError("truncated prime-table cache")
        log_primorial = np.frombuffer(sums[: 8 * (count + 1)], dtype="<f8").astype(np.float64)
        loglog_sum = np.frombuffer(sums[8 * (count + 1) :], dtype="<f8").astype(np.float64)
    return PrimeTable(primes=primes, log_primorial=log_primorial, loglog_sum=loglog_sum)


def load_or_build(count: int, cache_path: str | None = None) -> PrimeTable:
    """Load a cached table if it is usable, otherwise build (and cache) one."""
    if cache_path:
        try:
            table = load_prime_table(cache_path)
            if table.size >= count:
                return table
        except (OSError, ValueError):
            pass
    table = build_prime_table(count)
    if cache_path:
        try:
            save_prime_table(table, cache_path)
        except OSError:
            pass
    return table
