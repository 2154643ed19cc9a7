"""Shared test oracles and generators.

Everything here is deliberately independent of the library's computation
paths: the enumeration oracle walks tuples with itertools and math.gcd,
the local-factor oracle sums capped geometric valuation probabilities
directly, and the Mobius oracle factors by trial division.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import gcd

from hypothesis import strategies as st

from gcdcensus import Condition, ConditionSet, condition_set


def naive_count(cs: ConditionSet, x: int) -> int:
    """Count satisfying tuples by scanning the full box, no pruning."""
    total = 0
    conds = [(sorted(c.indices), c.value) for c in cs.conditions]
    for tup in itertools.product(range(1, x + 1), repeat=cs.k):
        ok = True
        for idx, value in conds:
            g = 0
            for i in idx:
                g = gcd(g, tup[i - 1])
            if g != value:
                ok = False
                break
        total += ok
    return total


def naive_first(cs: ConditionSet, bound: int):
    """Lexicographically first satisfying tuple by full scan, or None."""
    conds = [(sorted(c.indices), c.value) for c in cs.conditions]
    for tup in itertools.product(range(1, bound + 1), repeat=cs.k):
        if all(_gcd_over(tup, idx) == value for idx, value in conds):
            return tup
    return None


def _gcd_over(tup, idx):
    g = 0
    for i in idx:
        g = gcd(g, tup[i - 1])
    return g


def trial_order(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def trial_mobius(n: int) -> int:
    """mu(n) by trial division."""
    count = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            count += 1
        d += 1
    if n > 1:
        count += 1
    return (-1) ** count


def valuation_probability(cs: ConditionSet, p: int) -> Fraction:
    """Probability that independent geometric p-adic orders meet every
    condition at p: the exact value any local factor at p must equal.

    Orders above B = max exponent + 1 behave identically, so capping each
    coordinate at B and folding the geometric tail into the cap is exact.
    """
    exps = {c.indices: trial_order(c.value, p) for c in cs.conditions}
    cap = max([0] + list(exps.values())) + 1

    def prob(a: int) -> Fraction:
        if a < cap:
            return Fraction(p - 1, p) * Fraction(1, p) ** a
        return Fraction(1, p) ** cap  # all mass of orders >= cap

    total = Fraction(0)
    for orders in itertools.product(range(cap + 1), repeat=cs.k):
        if all(min(orders[i - 1] for i in c.indices) == exps[c.indices] for c in cs.conditions):
            weight = Fraction(1)
            for a in orders:
                weight *= prob(a)
            total += weight
    return total


def random_admissible(rng: random.Random, max_k: int = 6, max_base: int = 60) -> ConditionSet:
    """A random admissible system: targets read off a random base tuple.

    Whatever index sets are chosen, setting each target to the gcd of the
    base tuple over that set makes the base tuple a solution.
    """
    k = rng.randint(2, max_k)
    base = [rng.randint(1, max_base) for _ in range(k)]
    n_edges = rng.randint(1, min(6, 2**k - k - 1))
    edges: set[frozenset[int]] = set()
    while len(edges) < n_edges:
        size = rng.randint(2, k)
        edges.add(frozenset(rng.sample(range(1, k + 1), size)))
    conds = {}
    for e in edges:
        g = 0
        for i in e:
            g = gcd(g, base[i - 1])
        conds[tuple(sorted(e))] = g
    return condition_set(k, conds)


@st.composite
def condition_sets(draw, max_k: int = 4, max_value: int = 6, allow_empty: bool = True):
    """Arbitrary (not necessarily admissible) small systems."""
    k = draw(st.integers(2, max_k))
    all_edges = [
        frozenset(c)
        for size in range(2, k + 1)
        for c in itertools.combinations(range(1, k + 1), size)
    ]
    min_edges = 0 if allow_empty else 1
    chosen = draw(
        st.lists(st.sampled_from(all_edges), min_size=min_edges, max_size=len(all_edges), unique=True)
    )
    conds = tuple(Condition(e, draw(st.integers(1, max_value))) for e in chosen)
    return ConditionSet(k, conds)


@st.composite
def admissible_condition_sets(draw, max_k: int = 4, max_base: int = 30):
    """Admissible-by-construction small systems (targets from a base tuple)."""
    k = draw(st.integers(2, max_k))
    base = draw(st.lists(st.integers(1, max_base), min_size=k, max_size=k))
    all_edges = [
        frozenset(c)
        for size in range(2, k + 1)
        for c in itertools.combinations(range(1, k + 1), size)
    ]
    chosen = draw(
        st.lists(st.sampled_from(all_edges), min_size=1, max_size=len(all_edges), unique=True)
    )
    conds = []
    for e in chosen:
        g = 0
        for i in e:
            g = gcd(g, base[i - 1])
        conds.append(Condition(e, g))
    return ConditionSet(k, tuple(conds))


@st.composite
def subsets_of(draw, k: int):
    return frozenset(draw(st.lists(st.integers(1, k), unique=True)))
