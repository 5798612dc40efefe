"""Machine-checkable certificates that rho(n) < 2 away from the champion.

The global verification splits by k = omega(n) and x = loglog n:

* n up to a scan ceiling: exhaustive segmented sieve (scan_range);
* k in [44, 10999]: grid certificates for the envelope function on
  [log k, 1.8 log k] with a Lipschitz bound (verify_case_mid), the tail
  x >= 1.8 log k being covered by a positivity predicate;
* k in [1, 43] except 2: grid certificates on [loglog max(10^9, n_k), 9.36]
  (verify_case_small), the tail x >= 9.36 by a closed-form bound;
* k = 2: a grid on [4, 9.36] plus an exhaustive sweep of 2^a 3^b
  (verify_k2), which locates the champion;
* k >= 11000: numerical audit of the analytic inequalities (check_case_large).
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

import mpmath
import numpy as np

from .arith import Factorization, factorize, first_primes, omega, tau, tau_log
from .arith import enumerate_primary
from .primes import PrimeTable, segmented_sieve
from .rho import (
    EPS_NUM,
    MP_PRECISION_BITS,
    DomainError,
    RhoReport,
    rho,
    rho_precise,
    rho_value,
    rho_value_array,
)

THRESHOLD = 2.0

MID_K_LO, MID_K_HI = 44, 10999
MID_DELTA, MID_M1 = 0.002, 215.0

SMALL_K_HI = 43
SMALL_DELTA, SMALL_M1 = 4e-5, 165.0
SMALL_X_HI = 9.36

K2_X_LO = 4.0
K2_A_MAX, K2_B_MAX = 77, 49

LARGE_K_MIN = 11000
LARGE_X_MIN = 11.66

SCAN_N_LO = 17
SCAN_DEFAULT_HI = 10**8
SCAN_SEGMENT = 1 << 21

_LOG_1E9 = math.log(1e9)


# ---------------------------------------------------------------------------
# envelope function and its slope bound


def rho_envelope(k: int, x, table: PrimeTable):
    """Upper envelope for rho over integers with k distinct prime factors,
    as a function of x = loglog n:

        ((log(e^x + log n_k) - log k - S(k)/k) / log(1 + e^x/(kx)) - 1) * x/log x

    where S(k) is the loglog prefix sum.  Accepts scalar or array x > 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if table.size < k:
        raise ValueError(f"table of size {table.size} does not cover k={k}")
    xs = np.asarray(x, dtype=np.float64)
    if np.any(xs <= 1.0):
        raise DomainError("envelope needs x > 1")
    L = float(table.log_primorial[k])
    s_avg = float(table.loglog_sum[k]) / k
    ex = np.exp(xs)
    w = np.log(ex + L) - math.log(k) - s_avg
    ell = np.log1p(ex / (k * xs))
    out = (w / ell - 1.0) * xs / np.log(xs)
    return float(out) if xs.ndim == 0 else out


def rho_envelope_precise(k: int, xs: Sequence[float], table: PrimeTable) -> list:
    """rho_envelope at >= 106-bit precision (escalation path for marginal
    certificates); the table sums are used as the defining constants."""
    L = mpmath.mpf(float(table.log_primorial[k]))
    s_avg = mpmath.mpf(float(table.loglog_sum[k])) / k
    out = []
    with mpmath.workprec(MP_PRECISION_BITS):
        for x in xs:
            x = mpmath.mpf(float(x))
            ex = mpmath.exp(x)
            w = mpmath.log(ex + L) - mpmath.log(k) - s_avg
            ell = mpmath.log(1 + ex / (k * x))
            out.append((w / ell - 1) * x / mpmath.log(x))
    return out


def envelope_w(k: int, x, table: PrimeTable):
    """The numerator piece W = log(e^x + log n_k) - log k - S(k)/k."""
    xs = np.asarray(x, dtype=np.float64)
    L = float(table.log_primorial[k])
    out = np.log(np.exp(xs) + L) - math.log(k) - float(table.loglog_sum[k]) / k
    return float(out) if xs.ndim == 0 else out


def envelope_slope_bound(k: int) -> float:
    """Bound for |d/dx rho_envelope| on the mid-range grid interval:
    (400/81) log^2 k/loglog k + (130/27) log k/loglog k."""
    if k < 3:
        raise DomainError("slope bound needs k >= 3 (loglog k > 0)")
    lk = math.log(k)
    llk = math.log(lk)
    return (400.0 / 81.0) * lk * lk / llk + (130.0 / 27.0) * lk / llk


# ---------------------------------------------------------------------------
# grid certification engine


@dataclass(frozen=True)
class GridCertificate:
    """Finite proof that a function stays below a threshold on an interval:
    grid maximum M plus slope bound m1 gives max < M + delta*m1."""

    k: int | None
    interval: tuple[float, float]
    delta: float
    m1: float
    grid_max: float | None
    slack: float | None
    threshold: float
    verdict: bool
    points_evaluated: int
    escalated: bool = False
    note: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "interval": list(self.interval),
            "delta": self.delta,
            "m1": self.m1,
            "grid_max": self.grid_max,
            "slack": self.slack,
            "threshold": self.threshold,
            "verdict": "pass" if self.verdict else "fail",
            "points_evaluated": self.points_evaluated,
            "escalated": self.escalated,
            "note": self.note,
        }


def grid_points(alpha: float, beta: float, delta: float) -> np.ndarray:
    """Grid alpha, alpha+delta, ..., with the right endpoint forced onto the
    grid; consecutive spacing never exceeds delta."""
    if beta < alpha:
        raise ValueError("empty interval")
    if delta <= 0:
        raise ValueError("delta must be positive")
    if beta == alpha:
        return np.array([alpha])
    count = max(1, int(math.ceil((beta - alpha) / delta)))
    xs = alpha + delta * np.arange(count + 1, dtype=np.float64)
    xs[-1] = beta
    return xs


def grid_verify(
    evaluate: Callable[[np.ndarray], np.ndarray],
    interval: tuple[float, float],
    delta: float,
    m1: float,
    threshold: float,
    *,
    k: int | None = None,
    precise_evaluate: Callable[[Sequence[float]], list] | None = None,
) -> GridCertificate:
    """Certify max evaluate < threshold on the interval via a grid maximum
    and the slope bound m1 (pass iff threshold - (M + delta*m1) > EPS_NUM).

    A certificate whose slack falls below 10*EPS_NUM is re-evaluated with
    precise_evaluate (>= 106-bit) when that callable is provided.
    """
    if m1 < 0:
        raise ValueError("m1 must be >= 0")
    alpha, beta = float(interval[0]), float(interval[1])
    xs = grid_points(alpha, beta, delta)
    vals = np.asarray(evaluate(xs), dtype=np.float64)
    if vals.shape != xs.shape:
        raise ValueError("evaluate must return one value per grid point")
    finite = np.isfinite(vals)
    if not finite.all():
        bad = int(np.nonzero(~finite)[0][0])
        return GridCertificate(
            k=k,
            interval=(alpha, beta),
            delta=delta,
            m1=m1,
            grid_max=None,
            slack=None,
            threshold=threshold,
            verdict=False,
            points_evaluated=len(xs),
            note=f"non-finite evaluation at x={xs[bad]!r}",
        )
    grid_max = float(vals.max())
    slack = threshold - (grid_max + delta * m1)
    escalated = False
    if precise_evaluate is not None and slack < 10 * EPS_NUM:
        with mpmath.workprec(MP_PRECISION_BITS):
            mp_vals = precise_evaluate(xs)
            mp_max = max(mp_vals)
            mp_slack = mpmath.mpf(threshold) - (mp_max + mpmath.mpf(delta) * m1)
            grid_max = float(mp_max)
            slack = float(mp_slack)
            verdict = mp_slack > 0
        escalated = True
    else:
        verdict = slack > EPS_NUM
    return GridCertificate(
        k=k,
        interval=(alpha, beta),
        delta=delta,
        m1=m1,
        grid_max=grid_max,
        slack=slack,
        threshold=threshold,
        verdict=verdict,
        points_evaluated=len(xs),
        escalated=escalated,
    )


# ---------------------------------------------------------------------------
# the three certified regimes


def verify_case_mid(
    k: int,
    table: PrimeTable,
    *,
    delta: float = MID_DELTA,
    m1: float = MID_M1,
    escalate: bool = True,
) -> GridCertificate:
    """Grid certificate for the envelope on [log k, 1.8 log k], k in [44, 10999]."""
    if not MID_K_LO <= k <= MID_K_HI:
        raise ValueError(f"k={k} outside the mid range [{MID_K_LO}, {MID_K_HI}]")
    lk = math.log(k)
    return grid_verify(
        lambda xs: rho_envelope(k, xs, table),
        (lk, 1.8 * lk),
        delta,
        m1,
        THRESHOLD,
        k=k,
        precise_evaluate=(lambda xs: rho_envelope_precise(k, xs, table)) if escalate else None,
    )


def _mid_chunk(args) -> list[GridCertificate]:
    ks, table, delta, m1, escalate = args
    return [verify_case_mid(k, table, delta=delta, m1=m1, escalate=escalate) for k in ks]


def run_mid_certificates(
    table: PrimeTable,
    k_lo: int = MID_K_LO,
    k_hi: int = MID_K_HI,
    *,
    delta: float = MID_DELTA,
    m1: float = MID_M1,
    escalate: bool = True,
    workers: int = 1,
) -> list[GridCertificate]:
    """Certificates for every k in [k_lo, k_hi], in k order regardless of
    the worker count."""
    ks = list(range(k_lo, k_hi + 1))
    if workers <= 1 or len(ks) < 2 * workers:
        return _mid_chunk((ks, table, delta, m1, escalate))
    chunk = (len(ks) + workers - 1) // workers
    jobs = [(ks[i : i + chunk], table, delta, m1, escalate) for i in range(0, len(ks), chunk)]
    out: list[GridCertificate] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_mid_chunk, jobs):
            out.extend(part)
    return out


def small_case_interval(k: int, table: PrimeTable) -> tuple[float, float]:
    """[loglog max(10^9, n_k), 9.36], the grid interval for small k."""
    return (math.log(max(_LOG_1E9, float(table.log_primorial[k]))), SMALL_X_HI)


def verify_case_small(
    k: int,
    table: PrimeTable,
    *,
    delta: float = SMALL_DELTA,
    m1: float = SMALL_M1,
    escalate: bool = True,
) -> GridCertificate:
    """Grid certificate for the envelope, k in [1, 43] except 2."""
    if not 1 <= k <= SMALL_K_HI:
        raise ValueError(f"k={k} outside the small range [1, {SMALL_K_HI}]")
    if k == 2:
        raise ValueError("k=2 is certified by verify_k2")
    return grid_verify(
        lambda xs: rho_envelope(k, xs, table),
        small_case_interval(k, table),
        delta,
        m1,
        THRESHOLD,
        k=k,
        precise_evaluate=(lambda xs: rho_envelope_precise(k, xs, table)) if escalate else None,
    )


def exhaust_2a3b(
    a_max: int = K2_A_MAX,
    b_max: int = K2_B_MAX,
    *,
    n_log_min: float = _LOG_1E9,
    x_max: float = K2_X_LO,
) -> list[tuple[float, int, int]]:
    """rho over all 2^a 3^b with 1 <= a <= a_max, 1 <= b <= b_max,
    n above e^n_log_min and loglog n <= x_max, sorted descending."""
    l2, l3 = math.log(2), math.log(3)
    cap = math.exp(x_max)
    out = []
    for a in range(1, a_max + 1):
        for b in range(1, b_max + 1):
            n_log = a * l2 + b * l3
            if n_log <= n_log_min or n_log > cap:
                continue
            r = rho_value(n_log, 2.0, math.log((a + 1) * (b + 1)))
            out.append((r, a, b))
    out.sort(key=lambda t: (-t[0], t[1], t[2]))
    return out


def verify_k2(
    table: PrimeTable,
    *,
    delta: float = SMALL_DELTA,
    m1: float = SMALL_M1,
    escalate: bool = True,
) -> tuple[GridCertificate, Factorization]:
    """k = 2: grid certificate on [4, 9.36] plus the exhaustive 2^a 3^b
    sweep below loglog n = 4; returns the certificate and the maximizer."""
    cert = grid_verify(
        lambda xs: rho_envelope(2, xs, table),
        (K2_X_LO, SMALL_X_HI),
        delta,
        m1,
        THRESHOLD,
        k=2,
        precise_evaluate=(lambda xs: rho_envelope_precise(2, xs, table)) if escalate else None,
    )
    records = exhaust_2a3b()
    _, a, b = records[0]
    return cert, Factorization.from_pairs(((2, a), (3, b)))


# ---------------------------------------------------------------------------
# analytic regime for k >= 11000 (transcription audit, not a grid)


def ratio_inequality(x: float, t: float) -> bool:
    """(log x + t) / (t (x - log x - t)) < 2 log x / x."""
    lx = math.log(x)
    return (lx + t) / (t * (x - lx - t)) < 2.0 * lx / x


def small_t_inequality(x: float) -> bool:
    """(log x + 1) / (1.25 (x - log x - 1)) < 2 log x / x."""
    lx = math.log(x)
    return (lx + 1.0) / (1.25 * (x - lx - 1.0)) < 2.0 * lx / x


def large_t_inequality(k: int, x: float) -> bool:
    """(x - log x - log k) (1 + 2 log x / x) > x - log k."""
    lx = math.log(x)
    return (x - lx - math.log(k)) * (1.0 + 2.0 * lx / x) > x - math.log(k)


def mid_tail_margin(k: int, x: float) -> float:
    """x log x + x loglog k - 2 log x (log x + log k); positive for
    x >= 1.8 log k certifies the tail of the mid range."""
    lx = math.log(x)
    lk = math.log(k)
    return x * lx + x * math.log(lk) - 2.0 * lx * (lx + lk)


def mid_tail_all_positive(k_lo: int = MID_K_LO, k_hi: int = 10**6) -> bool:
    """mid_tail_margin(k, 1.8 log k) > 0 for every k in [k_lo, k_hi]."""
    ks = np.arange(k_lo, k_hi + 1, dtype=np.float64)
    xs = 1.8 * np.log(ks)
    lx = np.log(xs)
    margins = xs * lx + xs * np.log(np.log(ks)) - 2.0 * lx * (lx + np.log(ks))
    return bool(margins.min() > 0.0)


@dataclass(frozen=True)
class LargeCaseReport:
    """Audit of the analytic inequalities certifying k >= 11000."""

    samples_checked: int
    failures: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "samples_checked": self.samples_checked,
            "failures": list(self.failures),
            "ok": self.ok,
        }


def check_case_large(samples: Iterable[tuple[int, float]]) -> LargeCaseReport:
    """Evaluate the k >= 11000 inequalities on each (k, x) sample.

    For every sample the two parabola endpoints t = 1 and t = x/2 and the
    small-t bound must hold (they depend on x only); the predicate matching
    the sample's own t = x - log x - log k must hold as well.  A failure
    falsifies the transcription and is reported with its inputs.
    """
    failures = []
    count = 0
    for k, x in samples:
        if k < LARGE_K_MIN:
            raise ValueError(f"k={k} below {LARGE_K_MIN}")
        if x < LARGE_X_MIN:
            raise ValueError(f"x={x} below {LARGE_X_MIN}")
        count += 1
        lx = math.log(x)
        t = x - lx - math.log(k)
        checks = {
            "parabola_t1": ratio_inequality(x, 1.0),
            "parabola_thalf": ratio_inequality(x, x / 2.0),
            "small_t_bound": small_t_inequality(x),
        }
        if t >= 1.0 and t <= x / 2.0:
            checks["ratio_at_t"] = ratio_inequality(x, t)
        elif t > x / 2.0:
            checks["large_t_bound"] = large_t_inequality(k, x)
        for name, ok in checks.items():
            if not ok:
                failures.append({"k": k, "x": x, "t": t, "check": name})
    return LargeCaseReport(samples_checked=count, failures=tuple(failures))


# ---------------------------------------------------------------------------
# closed-form tail bound for small k


def small_k_tail_bound(k: int, x: float, table: PrimeTable) -> float:
    """(x log 2x - (x/k) S(k)) / ((x - log x - log k) log x); below 2 for
    x >= 9.36 when k <= 43, which closes the small range beyond the grid."""
    lx = math.log(x)
    s = float(table.loglog_sum[k])
    return (x * math.log(2.0 * x) - x * s / k) / ((x - lx - math.log(k)) * lx)


# ---------------------------------------------------------------------------
# Ramanujan-style and Wigert-style divisor bounds


def ramanujan_bound(f: Factorization) -> float:
    """prod over p | n of log(n * gamma(n)) / (omega(n) log p); always
    at least tau(n)."""
    if not f.pairs:
        raise DomainError("bound needs n >= 2")
    k = len(f.pairs)
    log_n_gamma = f.value_log + math.fsum(math.log(p) for p, _ in f.pairs)
    out = 1.0
    for p, _ in f.pairs:
        out *= log_n_gamma / (k * math.log(p))
    return out


def ramanujan_bound_log(f: Factorization) -> float:
    """log of ramanujan_bound, safe for factorizations with many primes."""
    if not f.pairs:
        raise DomainError("bound needs n >= 2")
    k = len(f.pairs)
    log_n_gamma = f.value_log + math.fsum(math.log(p) for p, _ in f.pairs)
    return math.fsum(math.log(log_n_gamma / (k * math.log(p))) for p, _ in f.pairs)


def wigert_style_bound(f: Factorization) -> float:
    """log of (1 + log n / (k log k))^k for k = omega(n) >= 74; strictly
    exceeds log tau(n) on that range."""
    k = len(f.pairs)
    if k < 74:
        raise DomainError(f"bound is only valid for omega >= 74, got {k}")
    return k * math.log1p(f.value_log / (k * math.log(k)))


# ---------------------------------------------------------------------------
# exhaustive range scan


@dataclass(frozen=True)
class ScanReport:
    """rho over an integer range: maximum, its location, and violations."""

    n_lo: int
    n_hi: int
    max_rho: float
    argmax_n: int
    count_checked: int
    violations: tuple[dict, ...]

    def to_json_dict(self) -> dict:
        return {
            "range": [self.n_lo, self.n_hi],
            "max_rho": self.max_rho,
            "argmax_n": self.argmax_n,
            "count_checked": self.count_checked,
            "violations": list(self.violations),
        }


def _scan_segment(lo: int, hi: int, base_primes: np.ndarray) -> ScanReport:
    """Exact tau and omega for every n in [lo, hi) by a segmented
    prime-power sieve, then vectorized rho."""
    n_count = hi - lo
    rem = np.arange(lo, hi, dtype=np.int64)
    tau_arr = np.ones(n_count, dtype=np.int32)
    om = np.zeros(n_count, dtype=np.int8)
    exps = np.zeros(n_count, dtype=np.int8)
    seg_max = hi - 1
    for p in base_primes:
        p = int(p)
        if p * p > seg_max:
            break
        first = ((lo + p - 1) // p) * p
        i0 = first - lo
        if i0 >= n_count:
            continue
        power = p
        while power <= seg_max:
            start = ((lo + power - 1) // power) * power - lo
            if start >= n_count:
                break
            rem[start::power] //= p
            exps[start::power] += 1
            power *= p
        sl = slice(i0, None, p)
        tau_arr[sl] *= exps[sl] + 1
        om[sl] += 1
        exps[sl] = 0
    large = rem > 1
    tau_arr[large] *= 2
    om[large] += 1

    n_log = np.log(np.arange(lo, hi, dtype=np.float64))
    om_f = om.astype(np.float64)
    rho_arr = rho_value_array(n_log, om_f, np.log(tau_arr.astype(np.float64)))
    imax = int(np.argmax(rho_arr))
    violations = []
    for i in np.nonzero(rho_arr >= THRESHOLD - EPS_NUM)[0]:
        n = lo + int(i)
        r_mp = rho_precise(factorize(n))
        if r_mp >= 2:
            violations.append({"n": n, "rho": float(r_mp)})
    return ScanReport(
        n_lo=lo,
        n_hi=hi - 1,
        max_rho=float(rho_arr[imax]),
        argmax_n=lo + imax,
        count_checked=n_count,
        violations=tuple(violations),
    )


def _scan_worker(args) -> ScanReport:
    lo, hi, base_primes = args
    return _scan_segment(lo, hi, base_primes)


def scan_segments(
    n_lo: int,
    n_hi: int,
    *,
    segment_size: int = SCAN_SEGMENT,
    workers: int = 1,
) -> Iterator[ScanReport]:
    """Per-segment scan reports over [n_lo, n_hi], in segment order."""
    if n_lo < SCAN_N_LO:
        raise ValueError(f"scan starts at {SCAN_N_LO} (rho needs n >= 16)")
    if n_hi < n_lo:
        raise ValueError("empty scan range")
    base = segmented_sieve(math.isqrt(n_hi) + 1)
    bounds = []
    lo = n_lo
    while lo <= n_hi:
        hi = min(lo + segment_size, n_hi + 1)
        bounds.append((lo, hi, base))
        lo = hi
    if workers <= 1:
        for job in bounds:
            yield _scan_worker(job)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(_scan_worker, bounds)


def merge_scan_reports(reports: Sequence[ScanReport]) -> ScanReport:
    best = max(reports, key=lambda r: (r.max_rho, -r.argmax_n))
    return ScanReport(
        n_lo=min(r.n_lo for r in reports),
        n_hi=max(r.n_hi for r in reports),
        max_rho=best.max_rho,
        argmax_n=best.argmax_n,
        count_checked=sum(r.count_checked for r in reports),
        violations=tuple(v for r in reports for v in r.violations),
    )


def scan_range(
    n_lo: int,
    n_hi: int,
    *,
    segment_size: int = SCAN_SEGMENT,
    workers: int = 1,
) -> ScanReport:
    """rho(n) for every n in [n_lo, n_hi]; reports the maximum and any n
    with rho >= 2 (none are expected below the champion's size)."""
    return merge_scan_reports(
        list(scan_segments(n_lo, n_hi, segment_size=segment_size, workers=workers))
    )


# ---------------------------------------------------------------------------
# champion search over primary integers


def champion_search(limit_log: float) -> list[tuple[Factorization, RhoReport]]:
    """Evaluate rho on every primary integer with 17 <= n <= e^limit_log,
    sorted by descending rho.  The top record is the global champion once
    limit_log reaches its size."""
    if limit_log < _LOG_1E9:
        raise ValueError(f"limit_log must be >= log(10^9) = {_LOG_1E9:.3f}")
    records = []
    for fact in enumerate_primary(float(limit_log)):
        if fact.value_exact is not None and fact.value_exact < 17:
            continue
        records.append((fact, rho(fact)))
    records.sort(key=lambda t: (-t[1].rho, t[0].value_log))
    return records


# ---------------------------------------------------------------------------
# lemma property suite


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of the inequality suite; each check lists any violations."""

    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks.values())

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "checks": self.checks}


def _check_from_mask(ks: np.ndarray, holds: np.ndarray) -> dict:
    bad = ks[~holds]
    return {
        "ok": bool(holds.all()),
        "checked": int(len(ks)),
        "violations": [int(k) for k in bad[:10]],
    }


def ratio_increasing_values(k: int, c: float, xs: np.ndarray) -> np.ndarray:
    """log(1 + e^x/(kx)) * (1 + c log x / x), the function whose strict
    monotonicity reduces the verification to primary integers."""
    return np.log1p(np.exp(xs) / (k * xs)) * (1.0 + c * np.log(xs) / xs)


def _random_primary(rng, k_lo: int, k_hi: int, exp_hi: int = 30) -> Factorization:
    k = rng.randint(k_lo, k_hi)
    exps = sorted((rng.randint(1, exp_hi) for _ in range(k)), reverse=True)
    primes = first_primes(k)
    pairs = tuple(zip(primes, exps))
    return Factorization(
        pairs=pairs,
        value_log=math.fsum(a * math.log(p) for p, a in pairs),
        value_exact=None,
    )


def lemma_suite(
    k_max: int,
    sample_count: int,
    table: PrimeTable,
    *,
    seed: int = 0,
) -> LemmaReport:
    """Check the supporting inequalities over their stated ranges:

    * S(k) >= k loglog k            for 44 <= k <= k_max
    * log n_k <= 2 k log k          for 2 <= k <= k_max
    * loglog n_k >= log k           for 3 <= k <= k_max
    * log n_k <= k loglog n_k       for 3 <= k <= k_max
    * log n_k >= k (log k + loglog k - 5/4)   for 2 <= k <= k_max
    * strict monotonicity of ratio_increasing_values on [1, 30]
    * the Ramanujan-style bound >= tau on random integers
    * the Wigert-style bound strict on random primary integers, omega >= 74
    """
    if table.size < k_max:
        raise ValueError(f"table of size {table.size} does not cover k_max={k_max}")
    L = table.log_primorial
    S = table.loglog_sum
    checks: dict = {}

    ks = np.arange(44, k_max + 1)
    checks["loglog_sum_lower"] = _check_from_mask(ks, S[44 : k_max + 1] >= ks * np.log(np.log(ks)))

    ks = np.arange(2, k_max + 1)
    checks["log_primorial_upper"] = _check_from_mask(ks, L[2 : k_max + 1] <= 2.0 * ks * np.log(ks))

    ks = np.arange(3, k_max + 1)
    checks["loglog_primorial_lower"] = _check_from_mask(
        ks, np.log(L[3 : k_max + 1]) >= np.log(ks)
    )
    checks["primorial_vs_loglog"] = _check_from_mask(
        ks, L[3 : k_max + 1] <= ks * np.log(L[3 : k_max + 1])
    )

    ks = np.arange(2, k_max + 1)
    checks["log_primorial_lower"] = _check_from_mask(
        ks, L[2 : k_max + 1] >= ks * (np.log(ks) + np.log(np.log(ks)) - 1.25)
    )

    xs = 1.0 + 1e-3 * np.arange(int(29.0 / 1e-3) + 1)
    mono_violations = []
    for k in (1, 2, 5, 10):
        for c in (0.5, 1.0, 2.0):
            vals = ratio_increasing_values(k, c, xs)
            if not np.all(np.diff(vals) > 0.0):
                mono_violations.append({"k": k, "c": c})
    checks["ratio_monotone"] = {
        "ok": not mono_violations,
        "checked": 12,
        "violations": mono_violations,
    }

    rng = random.Random(seed)
    ram_violations = []
    for _ in range(sample_count):
        n = rng.randint(2, 10**9)
        fact = factorize(n)
        bound = ramanujan_bound(fact)
        t = tau(fact)
        ok = bound >= t * (1.0 - 1e-12)
        if ok and omega(fact) >= 2:
            ok = bound > t
        if not ok:
            ram_violations.append({"n": n, "bound": bound, "tau": t})
    checks["ramanujan"] = {
        "ok": not ram_violations,
        "checked": sample_count,
        "violations": ram_violations[:10],
    }

    wig_count = max(1, sample_count // 10)
    wig_violations = []
    for _ in range(wig_count):
        fact = _random_primary(rng, 74, 200)
        if not wigert_style_bound(fact) > tau_log(fact):
            wig_violations.append({"pairs": fact.pairs[:4]})
    checks["wigert"] = {
        "ok": not wig_violations,
        "checked": wig_count,
        "violations": wig_violations[:10],
    }

    return LemmaReport(checks=checks)


# ---------------------------------------------------------------------------
# coverage audit


def certifying_regime(
    k: int,
    x: float,
    table: PrimeTable,
    *,
    scan_log_hi: float = _LOG_1E9,
) -> str:
    """Which regime certifies integers with omega = k at loglog n = x.

    Cells below loglog n_k contain no integer and come back as "vacuous".
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if x <= 1.0:
        raise ValueError("x must exceed 1")
    if x <= math.log(scan_log_hi):
        return "scan"
    if k >= LARGE_K_MIN:
        return "analytic-large-k"
    if table.size < k:
        raise ValueError(f"table of size {table.size} does not cover k={k}")
    if x < math.log(float(table.log_primorial[k])):
        return "vacuous"
    if k >= MID_K_LO:
        return "grid-mid" if x <= 1.8 * math.log(k) else "analytic-mid-tail"
    if x > SMALL_X_HI:
        return "analytic-small-tail"
    if k == 2:
        return "exhaustion-2^a3^b" if x <= K2_X_LO else "grid-k2"
    return "grid-small"
