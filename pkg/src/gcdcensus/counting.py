"""Exact enumeration of satisfying tuples and convergence diagnostics.

The counter here is deliberately simple: a nested scan over [1, x]^k
whose inner loops are pruned as soon as a partial gcd stops being a
multiple of its target, with the innermost coordinate vectorized.  It is
the trusted oracle the density constant is checked against, so no sieve
tricks beyond the Mobius-inversion count of fully-coprime tuples.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from math import gcd, inf, log

import numpy as np

from .density import DensityResult
from .errors import ResourceLimitError
from .model import ConditionSet, isolated_indices, neighbors
from .primes import mobius_up_to

_COUNT_GUARD = 10**10


@dataclass(frozen=True)
class CountReport:
    """Exact count up to x compared against a density constant.

    normalized_error rescales |density - constant| by x / (log x)^(k-1),
    the shape of the worst-case drift; sharper_log_exponent, when set,
    repeats the rescaling with the best exponent the condition structure
    allows (the largest pair-degree of any index), for information.
    """

    x: int
    count: int
    density: float
    constant: float
    normalized_error: float
    sharper_log_exponent: int | None = None
    sharper_normalized_error: float | None = None


def count(cs: ConditionSet, x: int) -> int:
    """Exact number of tuples in [1, x]^k satisfying every condition.

    Guarded by x**k <= 10**10.  Coordinates in no condition contribute a
    free factor of x each; the rest are scanned with partial-gcd pruning
    and a vectorized innermost coordinate.
    """
    x = operator.index(x)
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if x**cs.k > _COUNT_GUARD:
        raise ResourceLimitError(f"x**k = {x}**{cs.k} exceeds the {_COUNT_GUARD} count guard")
    if any(c.value > x for c in cs.conditions):
        return 0
    free = len(isolated_indices(cs))
    active = sorted(set(range(1, cs.k + 1)) - isolated_indices(cs))
    if not active:
        return x**cs.k
    return _scan(cs, x, active) * x**free


def _scan(cs: ConditionSet, x: int, active: list[int]) -> int:
    conds = cs.conditions
    values = [c.value for c in conds]
    last_active = active[-1]
    by_pos: dict[int, list[tuple[int, bool]]] = {i: [] for i in active}
    for ci, c in enumerate(conds):
        last = max(c.indices)
        for i in c.indices:
            by_pos[i].append((ci, i == last))

    ns = np.arange(1, x + 1, dtype=np.int64)
    partial = [0] * len(conds)

    def walk(pos: int) -> int:
        i = active[pos]
        if i == last_active:
            mask = np.ones(x, dtype=bool)
            for ci, complete in by_pos[i]:
                g = np.gcd(partial[ci], ns)
                mask &= g == values[ci] if complete else g % values[ci] == 0
            return int(mask.sum())
        total = 0
        for n in range(1, x + 1):
            saved = []
            ok = True
            for ci, complete in by_pos[i]:
                g = gcd(partial[ci], n)
                if (g != values[ci]) if complete else (g % values[ci] != 0):
                    ok = False
                    break
                saved.append((ci, partial[ci]))
                partial[ci] = g
            if ok:
                total += walk(pos + 1)
            for ci, old in saved:
                partial[ci] = old
        return total

    return walk(0)


def nymann_count(k: int, x: int) -> int:
    """Exact number of k-tuples <= x with overall gcd 1.

    Mobius inversion: sum over d <= x of mu(d) * floor(x/d)^k.  Used as
    an independent oracle for the single full-gcd condition.
    """
    k = operator.index(k)
    x = operator.index(x)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    mu = mobius_up_to(x)
    return sum(int(mu[d]) * (x // d) ** k for d in range(1, x + 1))


def _normalized(gap: float, x: int, exponent: int) -> float:
    if x == 1 and exponent > 0:
        return 0.0 if gap == 0.0 else inf
    return gap * x / log(x) ** exponent if exponent else gap * x


def _constant_value(density_result: DensityResult | float) -> float:
    if isinstance(density_result, DensityResult):
        return density_result.value
    return float(density_result)


def empirical_report(cs: ConditionSet, x: int, density_result: DensityResult | float) -> CountReport:
    """Count up to x and compare the empirical density with the constant."""
    a = _constant_value(density_result)
    n = count(cs, x)
    density = n / x**cs.k
    gap = abs(density - a)
    sharper = max((len(neighbors(cs, {i})) for i in range(1, cs.k + 1)), default=0)
    return CountReport(
        x=x,
        count=n,
        density=density,
        constant=a,
        normalized_error=_normalized(gap, x, cs.k - 1),
        sharper_log_exponent=sharper,
        sharper_normalized_error=_normalized(gap, x, sharper),
    )


def convergence_table(
    cs: ConditionSet, xs: list[int], density_result: DensityResult | float
) -> list[CountReport]:
    """One report per bound in ascending xs.

    The drift |density - constant| should shrink like 1/x up to log
    powers; the normalized columns make that visible at a glance.
    """
    bounds = [operator.index(x) for x in xs]
    if any(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:])):
        raise ValueError(f"bounds must be strictly ascending, got {bounds}")
    return [empirical_report(cs, x, density_result) for x in bounds]
