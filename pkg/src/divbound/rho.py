"""The divisor-excess functional rho and its companions.

For an integer n with omega(n) distinct prime factors, theta(n) is the
normalized prime count omega(n) * loglog n / log n, and rho(n) measures
how far log tau(n) exceeds omega(n) * log(1 + 1/theta), rescaled by
loglog n / logloglog n.  The threshold of interest is rho < 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .arith import Factorization, omega, tau_log
from .primes import PrimeTable

EPS_NUM = 1e-9  # safety margin for every comparison against the threshold 2
MP_PRECISION_BITS = 106  # escalation precision for marginal values


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


def _require_value_at_least(f: Factorization, bound: int, what: str) -> None:
    if f.value_exact is not None:
        if f.value_exact < bound:
            raise DomainError(f"{what} requires n >= {bound}, got n = {f.value_exact}")
    elif f.value_log < math.log(bound) - 1e-12:
        raise DomainError(f"{what} requires n >= {bound}, got log n = {f.value_log}")


def theta(f: Factorization) -> float:
    """omega(n) * loglog n / log n; needs n >= 3."""
    _require_value_at_least(f, 3, "theta")
    return omega(f) * math.log(f.value_log) / f.value_log


def rho_value(n_log: float, omega_count: float, tau_log_value: float) -> float:
    """Scalar rho from the three quantities that determine it."""
    x = math.log(n_log)
    th = omega_count * x / n_log
    ell = math.log1p(1.0 / th)
    return (tau_log_value / (omega_count * ell) - 1.0) * x / math.log(x)


def rho_value_array(
    n_log: np.ndarray, omega_count: np.ndarray, tau_log_value: np.ndarray
) -> np.ndarray:
    """Vectorized rho_value; same formula, used by the range scanner."""
    x = np.log(n_log)
    th = omega_count * x / n_log
    ell = np.log1p(1.0 / th)
    return (tau_log_value / (omega_count * ell) - 1.0) * x / np.log(x)


def rho_precise(f: Factorization, bits: int = MP_PRECISION_BITS) -> mpmath.mpf:
    """rho recomputed from the factorization at >= 106-bit precision."""
    with mpmath.workprec(bits):
        n_log = mpmath.fsum(a * mpmath.log(p) for p, a in f.pairs)
        t_log = mpmath.fsum(mpmath.log(a + 1) for _, a in f.pairs)
        k = len(f.pairs)
        x = mpmath.log(n_log)
        th = k * x / n_log
        ell = mpmath.log(1 + 1 / th)
        return (t_log / (k * ell) - 1) * x / mpmath.log(x)


@dataclass(frozen=True)
class RhoReport:
    """One evaluated integer; exceeds_two is decided with the numeric margin."""

    n_log: float
    omega: int
    tau_log: float
    theta: float
    rho: float
    exceeds_two: bool

    def to_json_dict(self) -> dict:
        return {
            "n_log": self.n_log,
            "omega": self.omega,
            "tau_log": self.tau_log,
            "theta": self.theta,
            "rho": self.rho,
            "exceeds_two": self.exceeds_two,
        }


def rho(f: Factorization) -> RhoReport:
    """Evaluate rho(n) from a factorization; needs n >= 16 and omega >= 1.

    Values within EPS_NUM of the threshold 2 are re-evaluated at high
    precision before exceeds_two is decided.
    """
    k = omega(f)
    if k < 1:
        raise DomainError("rho requires at least one prime factor")
    _require_value_at_least(f, 16, "rho")
    t_log = tau_log(f)
    r = rho_value(f.value_log, float(k), t_log)
    if abs(r - 2.0) < EPS_NUM:
        r_mp = rho_precise(f)
        r = float(r_mp)
        exceeds = r_mp >= 2
    else:
        exceeds = r > 2.0
    x = math.log(f.value_log)
    return RhoReport(
        n_log=f.value_log,
        omega=k,
        tau_log=t_log,
        theta=k * x / f.value_log,
        rho=r,
        exceeds_two=exceeds,
    )


def kappa_search(k_max: int, table: PrimeTable) -> tuple[int, float]:
    """Maximize g(k) = k * log(log n_k) / log n_k over 1 <= k <= k_max.

    g(k) is theta at the primorial n_k, the smallest integer with k
    distinct prime factors; the overall maximum is the constant kappa.
    """
    if k_max < 9:
        raise ValueError("k_max must be >= 9 to reach the maximizer")
    if table.size < k_max:
        raise ValueError(f"table of size {table.size} does not cover k_max={k_max}")
    L = table.log_primorial[1 : k_max + 1]
    g = np.arange(1, k_max + 1) * np.log(L) / L
    k_star = int(np.argmax(g)) + 1
    return k_star, float(g[k_star - 1])


def extremal_m(k: int, z_log: float, table: PrimeTable) -> Factorization:
    """Primary integer of size about e^z_log whose rho tends to 1 as
    z_log grows (k fixed): exponent a_j is chosen so that a_j + 1 is the
    nearest integer to (z_log + log n_k) / (k log p_j)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if table.size < k:
        raise ValueError(f"table of size {table.size} does not cover k={k}")
    target = z_log + float(table.log_primorial[k])
    pairs = []
    for j in range(1, k + 1):
        p = table.nth_prime(j)
        a = math.floor(target / (k * math.log(p)) + 0.5) - 1
        if a < 1:
            raise ValueError(f"z_log={z_log} too small: exponent for p={p} would be {a}")
        pairs.append((p, a))
    return Factorization.from_pairs(pairs)
