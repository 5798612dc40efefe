"""Piecewise-linear extremal boundary for the normalized divisor ratio.

The boundary is the upper edge of the convex hull of the points
(1/s, log(s+1)/s) for s = 1, 2, ... together with (0, 0).  All the
generating points lie on the strictly concave curve x*log(1 + 1/x), so
every one of them is a vertex and the edge is the polyline through them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Factorization
from .primes import PrimeTable


class HullRangeError(ValueError):
    """Query outside the range covered by a finite hull."""


def segment_of(theta: float) -> int:
    """The s with theta in (1/(s+1), 1/s]; intervals are right-closed."""
    if not 0.0 < theta <= 1.0:
        raise ValueError(f"theta must be in (0, 1], got {theta}")
    s = int(math.floor(1.0 / theta))
    # guard against 1/theta rounding across an integer
    if (s + 1) * theta <= 1.0:
        s += 1
    elif s * theta > 1.0:
        s -= 1
    return s


def segment_value(theta: float) -> float:
    """Closed form of the boundary on segment s:
    (theta*(s+1) - 1)*log(s+1) + (1 - s*theta)*log(s+2)."""
    s = segment_of(theta)
    return (theta * (s + 1) - 1.0) * math.log(s + 1) + (1.0 - s * theta) * math.log(s + 2)


@dataclass(frozen=True)
class HullFunction:
    """Vertices (0,0), (1/s_max, log(s_max+1)/s_max), ..., (1, log 2),
    ordered by x; queries interpolate on the segment containing theta."""

    s_max: int
    vertices: tuple[tuple[float, float], ...]

    @property
    def segments(self) -> tuple[tuple[tuple[float, float], tuple[float, float]], ...]:
        return tuple(zip(self.vertices, self.vertices[1:]))

    def value(self, theta: float) -> float:
        s = segment_of(theta)
        if s > self.s_max:
            raise HullRangeError(
                f"theta={theta} lies on segment {s}, beyond s_max={self.s_max}"
            )
        return segment_value(theta)


def build_hull(s_max: int) -> HullFunction:
    """Hull whose upper boundary is exact on (1/(s_max+1), 1]."""
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    vertices = [(0.0, 0.0)]
    for s in range(s_max, 0, -1):
        vertices.append((1.0 / s, math.log(s + 1) / s))
    return HullFunction(s_max=s_max, vertices=tuple(vertices))


def f(theta: float, hull: HullFunction) -> float:
    """Boundary value at theta in (0, 1]; errors if the hull is too small."""
    return hull.value(theta)


def hull_witness(theta: float, z_log: float, table: PrimeTable) -> Factorization:
    """Primary integer m = m1^(s+1) * m2^s targeting the boundary at theta.

    With L = z_log/log(z_log), m1 is the product of the first
    floor((1 - s*theta)*L) primes and m2 of the following primes up to
    index floor(theta*L).  log tau(m)*loglog m/log m approaches the
    boundary value as z_log grows, and omega(m)*loglog m/log m approaches
    theta.
    """
    s = segment_of(theta)
    if z_log <= 1.0:
        raise ValueError("z_log must exceed 1")
    scale = z_log / math.log(z_log)
    j1 = int(math.floor((1.0 - s * theta) * scale))
    j2 = int(math.floor(theta * scale))
    if j2 < 1 or j1 >= j2:
        raise ValueError(f"degenerate index bounds j1={j1}, j2={j2} at z_log={z_log}")
    if table.size < j2:
        raise ValueError(f"table of size {table.size} does not cover index {j2}")
    pairs = [(table.nth_prime(j), s + 1) for j in range(1, j1 + 1)]
    pairs += [(table.nth_prime(j), s) for j in range(j1 + 1, j2 + 1)]
    value_log = (s + 1) * float(table.log_primorial[j1]) + s * float(
        table.log_primorial[j2] - table.log_primorial[j1]
    )
    return Factorization(pairs=tuple(pairs), value_log=value_log, value_exact=None)


def witness_ratio(m: Factorization) -> float:
    """log tau(m) * loglog m / log m, the quantity the boundary bounds."""
    t_log = math.fsum(math.log(a + 1) for _, a in m.pairs)
    return t_log * math.log(m.value_log) / m.value_log


def within_band(m: Factorization, theta: float, tol_power: float = 1.5) -> bool:
    """Whether omega(m) is within log m/(loglog m)^tol_power of
    theta*log m/loglog m (the membership band; tolerance exponent is a
    parameter, 1.5 by default)."""
    x = math.log(m.value_log)
    return abs(len(m.pairs) - theta * m.value_log / x) < m.value_log / x**tol_power
