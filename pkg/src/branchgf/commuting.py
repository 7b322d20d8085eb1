"""Simultaneous-conjugacy classes of commuting tuples in a finite group.

The orbits of G acting diagonally on commuting n-tuples form the level-n
nodes of a rooted tree; a node's children are the conjugacy classes of the
running centralizer, so keying each node by the isomorphism class of that
centralizer yields a self-similar keying the branching engine can consume.
Orbit counts of all (not necessarily commuting) tuples have a classical
closed form as a centralizer-size partial-fraction sum, implemented here
both over the group elements and, for symmetric groups, over partitions.

A brute-force oracle counts orbits directly by extending lexicographically
minimal orbit representatives one coordinate at a time.
"""

from __future__ import annotations

import math
from typing import Iterator

from .engine import BranchingProcess, build_branching, gf_total
from .errors import WorkBudgetError
from .perms import GroupKey, KeyRegistry, PermGroup
from .polyring import Poly, RatFun, ratfun_sum

__all__ = [
    "commuting_process",
    "commuting_gf",
    "burnside_gf",
    "burnside_gf_elementwise",
    "partitions",
    "zlambda",
    "symmetric_burnside_gf",
    "commuting_orbit_counts",
    "commuting_orbit_oracle",
    "DEFAULT_WORK_BUDGET",
]

DEFAULT_WORK_BUDGET = 10_000_000


def commuting_process(
    group: PermGroup,
    registry: KeyRegistry | None = None,
    state_limit: int = 10_000,
) -> BranchingProcess:
    """Branching process whose level-n classes are the orbits of commuting n-tuples.

    Keys are centralizer isomorphism classes: the children of a node with
    centralizer Z are the conjugacy classes of Z, each keyed by the
    centralizer in Z of its representative.  Keying by group isomorphism
    may split true classes but never merges distinct ones, which is all
    the branching engine needs.
    """
    reg = registry if registry is not None else KeyRegistry()
    memo: dict[GroupKey, dict[GroupKey, int]] = {}

    root = reg.key_for(group)

    def children(key: GroupKey) -> dict[GroupKey, int]:
        cached = memo.get(key)
        if cached is not None:
            return cached
        z = reg.representatives[key]
        counts: dict[GroupKey, int] = {}
        for cls in z.conjugacy_classes:
            child = reg.key_for(z.centralizer([cls.rep]))
            counts[child] = counts.get(child, 0) + 1
        memo[key] = counts
        return counts

    return BranchingProcess(
        root=root,
        children=children,
        label=lambda key: str(key),
        state_limit=state_limit,
    )


def commuting_gf(group: PermGroup, registry: KeyRegistry | None = None) -> RatFun:
    """Generating function of simultaneous-conjugacy classes of commuting tuples."""
    return gf_total(build_branching(commuting_process(group, registry)))


def burnside_gf(group: PermGroup) -> RatFun:
    """Generating function of orbit counts on all n-tuples.

    Orbit counting gives sum over g of |Z(g)|^n / |G|, i.e. the sum of
    size/|G| * 1/(1 - |Z|t) over conjugacy classes.
    """
    n = group.order
    terms = []
    for cls in group.conjugacy_classes:
        z_order = n // cls.size
        terms.append(RatFun(Poly([cls.size]), Poly([n]) * Poly([1, -z_order])))
    return ratfun_sum(terms)


def burnside_gf_elementwise(group: PermGroup) -> RatFun:
    """Same series as burnside_gf, summed element by element (slow cross-check)."""
    n = group.order
    terms = [
        RatFun(Poly([1]), Poly([n]) * Poly([1, -group.centralizer([g]).order]))
        for g in group.elements
    ]
    return ratfun_sum(terms)


# -- symmetric-group partition formula ----------------------------------------


def partitions(m: int) -> Iterator[tuple[int, ...]]:
    """Partitions of m as weakly decreasing tuples, lexicographically ascending."""
    if m < 0:
        raise ValueError("m must be non-negative")

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(1, min(cap, remaining) + 1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    yield from gen(m, m)


def zlambda(partition: tuple[int, ...]) -> int:
    """Centralizer order of a permutation with the given cycle type."""
    if any(p <= 0 for p in partition):
        raise ValueError("partition parts must be positive")
    mult: dict[int, int] = {}
    for part in partition:
        mult[part] = mult.get(part, 0) + 1
    out = 1
    for part, m in mult.items():
        out *= math.factorial(m) * part**m
    return out


def symmetric_burnside_gf(m: int) -> RatFun:
    """Tuple-orbit generating function of S_m via the cycle-type sum."""
    if m < 1:
        raise ValueError("m must be at least 1")
    terms = []
    for lam in partitions(m):
        z = zlambda(lam)
        terms.append(RatFun(Poly([1]), Poly([z]) * Poly([1, -z])))
    return ratfun_sum(terms)


# -- brute-force orbit oracle --------------------------------------------------


def commuting_orbit_counts(
    group: PermGroup, n_max: int, budget: int = DEFAULT_WORK_BUDGET
) -> list[int]:
    """Exact orbit counts of commuting n-tuples for n = 0..n_max.

    Works level by level on canonical (lexicographically least under
    simultaneous conjugation) representatives: every orbit at level n+1
    contains an extension of the canonical representative of its length-n
    prefix orbit, and the appended element must centralize the prefix.
    The budget caps the number of candidate tuples examined.
    """
    tables = group.conjugation_tables
    order = group.order
    all_indices = range(order)
    counts = [1]
    reps: list[tuple[int, ...]] = [()]
    centralizers: dict[tuple[int, ...], list[int]] = {(): list(all_indices)}
    work = 0
    for _ in range(n_max):
        new_reps: set[tuple[int, ...]] = set()
        for rep in reps:
            for b in centralizers[rep]:
                work += 1
                if work > budget:
                    raise WorkBudgetError(
                        f"orbit enumeration exceeded the work budget {budget}"
                    )
                candidate = rep + (b,)
                best = candidate
                for table in tables:
                    image = tuple(table[i] for i in candidate)
                    if image < best:
                        best = image
                new_reps.add(best)
        reps = sorted(new_reps)
        counts.append(len(reps))
        if len(counts) <= n_max:
            # Element c centralizes a iff conjugation by c fixes a.
            centralizers = {
                rep: [c for c in all_indices if all(tables[c][a] == a for a in rep)]
                for rep in reps
            }
    return counts


def commuting_orbit_oracle(
    group: PermGroup, n: int, budget: int = DEFAULT_WORK_BUDGET
) -> int:
    """Number of orbits of commuting n-tuples under simultaneous conjugation."""
    return commuting_orbit_counts(group, n, budget)[n]
