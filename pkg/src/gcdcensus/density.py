"""The density constant as a truncated Euler product with a certified tail.

The fraction of k-tuples in [1, x]^k satisfying an admissible condition
system tends to a constant: a product over all primes of exact rational
local factors.  Each local factor is the probability that independent
geometrically-distributed p-adic orders meet every condition at p, and is
evaluated from a per-prime LocalView by summing over independent subsets
of the residual cover.

All but the finitely many primes dividing some target share one
polynomial in t = 1/p with integer coefficients, whose constant term is 1
and whose linear term cancels; the product therefore converges like
sum 1/p^2.  Truncating at P >= 2C, where C is the sum of |c_j| for
j >= 2, leaves at most 2C/P in the logarithm, which certifies the
enclosing interval reported alongside the value.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import comb, exp, fsum, log
from typing import Iterable

import numpy as np

from .admissibility import is_admissible
from .errors import CutoffTooSmallError, InadmissibleError, ResourceLimitError
from .model import (
    ConditionSet,
    enumerate_independent_subsets,
    find_cover,
    is_cover,
    isolated_indices,
    neighbors,
)
from .padic import LocalView, local_view, relevant_primes
from .primes import prime_blocks

# Independent-subset sums are exponential in the cover size.
MAX_COVER = 24

# Primes below this are listed in the optional factor trace.
_TRACE_LIMIT = 50

DEFAULT_PRIME_CUTOFF = 10**6


@dataclass(frozen=True)
class FactorPolynomial:
    """Local Euler factor shared by all primes off the target support.

    A polynomial in t = 1/p with integer coefficients c_0..c_d, d <= k;
    always c_0 = 1 and c_1 = 0, which is what makes the Euler product
    converge absolutely.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(operator.index(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs or coeffs[0] != 1:
            raise AssertionError(f"constant coefficient must be 1, got {coeffs[:1]}")
        if len(coeffs) > 1 and coeffs[1] != 0:
            raise AssertionError(f"linear coefficient must cancel, got {coeffs[1]}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def tail_constant(self) -> int:
        """C = sum of |c_j| for j >= 2; bounds |factor - 1| by C/p^2."""
        return sum(abs(c) for c in self.coefficients[2:])

    def value_at(self, p: int) -> Fraction:
        """Exact value at t = 1/p."""
        t = Fraction(1, p)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __call__(self, t):
        """Float value at t; accepts scalars or numpy arrays."""
        acc = 0.0 * t + float(self.coefficients[-1])  # broadcasts over arrays
        for c in reversed(self.coefficients[:-1]):
            acc = acc * t + c
        return acc


@dataclass(frozen=True)
class DensityResult:
    """Truncated Euler product plus the certified enclosure of its limit."""

    value: float
    lower: float
    upper: float
    prime_cutoff: int
    factor_trace: tuple[tuple[int, Fraction], ...] | None = None


def _check_cover(cs: ConditionSet, cover: Iterable[int]) -> frozenset[int]:
    w = frozenset(cover)
    if not is_cover(cs, w):
        raise ValueError(f"{sorted(w)} is not a cover of the condition system")
    iso = w & isolated_indices(cs)
    if iso:
        raise ValueError(f"cover must exclude isolated indices, found {sorted(iso)}")
    if len(w) > MAX_COVER:
        raise ResourceLimitError(
            f"cover of size {len(w)} exceeds the {MAX_COVER}-index limit on subset sums"
        )
    return w


def local_factor(view: LocalView) -> Fraction:
    """Exact local factor of the density constant at view.p.

    Equals p^{-sum v} times the sum, over independent subsets V of w_p in
    the residual system, of p^{-|V|} (1-1/p)^{|w_p| - |V| + |M(V)| + |z_set|}
    with M(V) the residual neighbors of V outside w_p.  This is exactly
    the probability that independent geometric p-adic orders (order a with
    probability (1-1/p) p^-a) satisfy every condition at p.
    """
    if view.w_p is None:
        raise ValueError("local view carries no cover; build it with local_view(cs, p, cover)")
    if len(view.w_p) > MAX_COVER:
        raise ResourceLimitError(
            f"residual cover of size {len(view.w_p)} exceeds the {MAX_COVER}-index limit"
        )
    p = view.p
    one_minus = Fraction(p - 1, p)
    w_p = view.w_p
    pinned = len(view.z_set)
    total = Fraction(0)
    for v_sub in enumerate_independent_subsets(view.reduced, w_p):
        m = neighbors(view.reduced, v_sub) - w_p
        exponent = len(w_p) - len(v_sub) + len(m) + pinned
        total += Fraction(1, p ** len(v_sub)) * one_minus**exponent
    return total / Fraction(p) ** sum(view.v.values())


def generic_factor_polynomial(cs: ConditionSet, cover: Iterable[int]) -> FactorPolynomial:
    """Expand the shared local factor sum into a polynomial in t = 1/p.

    Valid verbatim at every prime not dividing any target, where pinning
    and reduction are trivial.  The cover must avoid isolated indices.
    """
    w = _check_cover(cs, cover)
    coeffs = [0] * (cs.k + 1)
    for v_sub in enumerate_independent_subsets(cs, w):
        m = neighbors(cs, v_sub) - w
        e = len(w) - len(v_sub) + len(m)
        shift = len(v_sub)
        for j in range(e + 1):
            coeffs[shift + j] += comb(e, j) * (-1) ** j
    return FactorPolynomial(tuple(coeffs))


def _log_fraction(f: Fraction) -> float:
    # math.log takes arbitrary-size ints, so this never overflows
    return log(f.numerator) - log(f.denominator)


def constant(
    cs: ConditionSet,
    cover: Iterable[int] | None = None,
    prime_cutoff: int = DEFAULT_PRIME_CUTOFF,
    trace: bool = False,
) -> DensityResult:
    """Truncated Euler product for the density constant, with certified tail.

    Exact rational factors are used at the primes dividing some target;
    every other prime up to the cutoff goes through the shared polynomial
    in float arithmetic, with the log-product accumulated by compensated
    summation in fixed-size blocks (bit-reproducible).  The cutoff must
    reach the largest target prime and 2C for the tail bound to apply.

    Raises InadmissibleError for systems with no solutions, and
    CutoffTooSmallError / ResourceLimitError on guard violations.
    """
    report = is_admissible(cs)
    if not report:
        raise InadmissibleError(*report.violation)
    w = _check_cover(cs, cover) if cover is not None else _check_cover(cs, find_cover(cs))
    poly = generic_factor_polynomial(cs, w)
    tail_c = poly.tail_constant
    cutoff = operator.index(prime_cutoff)
    special = relevant_primes(cs)
    if special and cutoff < special[-1]:
        raise CutoffTooSmallError(
            f"prime cutoff {cutoff} is below the largest target prime {special[-1]}"
        )
    if cutoff < 2 * tail_c:
        raise CutoffTooSmallError(
            f"prime cutoff {cutoff} is below 2C = {2 * tail_c}; the tail bound needs P >= 2C"
        )

    special_factors: list[tuple[int, Fraction]] = []
    for p in special:
        f = local_factor(local_view(cs, p, w))
        if f <= 0:
            raise AssertionError(f"internal invariant violated: nonpositive factor at p={p}")
        special_factors.append((p, f))

    special_set = frozenset(special)
    log_blocks = [_log_fraction(f) for _, f in special_factors]
    largest = 0
    trace_small: list[tuple[int, Fraction]] = []
    for block in prime_blocks(cutoff):
        largest = int(block[-1])
        if trace and int(block[0]) < _TRACE_LIMIT:
            for p in block[block < _TRACE_LIMIT]:
                if int(p) not in special_set:
                    trace_small.append((int(p), poly.value_at(int(p))))
        if special_set:
            block = block[~np.isin(block, sorted(special_set))]
            if block.size == 0:
                continue
        vals = poly(1.0 / block)
        log_blocks.append(fsum(np.log(vals)))

    total = fsum(log_blocks)
    value = exp(total)
    slack = 2.0 * tail_c / cutoff if tail_c else 0.0
    factor_trace = None
    if trace:
        factor_trace = tuple(sorted(special_factors + trace_small))
    return DensityResult(
        value=value,
        lower=value * exp(-slack),
        upper=value * exp(slack),
        prime_cutoff=largest,
        factor_trace=factor_trace,
    )


def _truncated_poly_product(poly: FactorPolynomial, cutoff: int) -> float:
    """prod of poly(1/p) over primes p <= cutoff, via block-wise fsum of logs.

    Shares the evaluation pipeline of `constant`, so a system whose generic
    polynomial has the same coefficients yields bit-identical values.
    """
    log_blocks = []
    for block in prime_blocks(cutoff):
        log_blocks.append(fsum(np.log(poly(1.0 / block))))
    return exp(fsum(log_blocks))


def toth_pairwise_constant(k: int, prime_cutoff: int = DEFAULT_PRIME_CUTOFF) -> float:
    """Closed-form constant for the all-pairs-coprime system on k indices.

    Truncated product of (1-1/p)^(k-1) (1 + (k-1)/p), expanded into exact
    integer coefficients first; cross-validation oracle for `constant` on
    the complete pairwise system.
    """
    k = operator.index(k)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    coeffs = [0] * (k + 1)
    for j in range(k):  # (1-t)^(k-1) * (1 + (k-1) t)
        c = comb(k - 1, j) * (-1) ** j
        coeffs[j] += c
        coeffs[j + 1] += c * (k - 1)
    return _truncated_poly_product(FactorPolynomial(tuple(coeffs)), prime_cutoff)


def rwise_constant(k: int, r: int, prime_cutoff: int = DEFAULT_PRIME_CUTOFF) -> float:
    """Closed-form constant for r-wise coprimality on k indices.

    Truncated product over p of sum_{x=0}^{r-1} C(k,x) p^-x (1-1/p)^(k-x),
    expanded into exact integer coefficients first.
    """
    k = operator.index(k)
    r = operator.index(r)
    if not 2 <= r <= k:
        raise ValueError(f"need 2 <= r <= k, got r={r}, k={k}")
    coeffs = [0] * (k + 1)
    for x in range(r):
        cx = comb(k, x)
        for j in range(k - x + 1):
            coeffs[x + j] += cx * comb(k - x, j) * (-1) ** j
    return _truncated_poly_product(FactorPolynomial(tuple(coeffs)), prime_cutoff)
