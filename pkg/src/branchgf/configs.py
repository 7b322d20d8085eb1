"""Point and vector configurations: Stirling, Bell, Gaussian-binomial counting.

An n-point configuration in an m-element set is an orbit of the symmetric
group acting diagonally on n-tuples; its type is the number of distinct
entries.  A vector configuration is the GL_m(F_q) analog on n-tuples of
vectors, typed by the dimension of their span.  Both trees are chains: a
type-i node keeps type i or steps to type i+1, so the class generating
functions are telescoping products and the level counts are Stirling
numbers of the second kind, Bell numbers, Gaussian binomial coefficients
and their q-Bell (subspace-total) analog.

Closed forms follow the convention fixed by the enumeration oracles: the
type-i class generating function is t^i * prod_{r=1..i} 1/(1-r*t) in the
point case and t^i * prod_{r=0..i} 1/(1-q^r*t) in the vector case.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .engine import BranchingProcess
from .errors import WorkBudgetError
from .matrixalg import Fq
from .polyring import ONE, Poly, RatFun, ratfun_sum

__all__ = [
    "point_config_process",
    "point_config_gf",
    "point_type_gf",
    "stirling2",
    "bell",
    "vector_config_process",
    "vector_config_gf",
    "vector_type_gf",
    "gaussian_binom",
    "q_stirling",
    "q_bell",
    "point_orbit_counts",
    "vector_orbit_counts",
    "config_orbit_oracle",
    "row_space_bijection_check",
    "all_subspaces",
]

DEFAULT_WORK_BUDGET = 10_000_000


# -- branching processes ---------------------------------------------------------


def point_config_process(m: int) -> BranchingProcess:
    """Chain process for point configurations: a type-i node has i children
    of type i and, below m, one child of type i+1."""
    if m < 0:
        raise ValueError("m must be non-negative")

    def children(i: int) -> dict[int, int]:
        counts: dict[int, int] = {}
        if i > 0:
            counts[i] = i
        if i < m:
            counts[i + 1] = 1
        return counts

    return BranchingProcess(root=0, children=children, label=lambda i: f"type {i}")


def vector_config_process(q: int, m: int) -> BranchingProcess:
    """Chain process for vector configurations: a type-i node has q^i
    children of type i and, below m, one child of type i+1."""
    if m < 0:
        raise ValueError("m must be non-negative")

    def children(i: int) -> dict[int, int]:
        counts: dict[int, int] = {i: q**i}
        if i < m:
            counts[i + 1] = 1
        return counts

    return BranchingProcess(root=0, children=children, label=lambda i: f"type {i}")


def point_type_gf(i: int) -> RatFun:
    """Generating function of type-i point configurations (any m >= i)."""
    den = ONE
    for r in range(1, i + 1):
        den = den * Poly([1, -r])
    return RatFun(Poly([0] * i + [1]), den)


def point_config_gf(m: int) -> RatFun:
    """Total point-configuration generating function, as the type sum."""
    return ratfun_sum(point_type_gf(i) for i in range(m + 1))


def vector_type_gf(i: int, q: int) -> RatFun:
    """Generating function of type-i vector configurations (any m >= i)."""
    den = ONE
    for r in range(0, i + 1):
        den = den * Poly([1, -(q**r)])
    return RatFun(Poly([0] * i + [1]), den)


def vector_config_gf(q: int, m: int) -> RatFun:
    """Total vector-configuration generating function, as the type sum."""
    return ratfun_sum(vector_type_gf(i, q) for i in range(m + 1))


# -- triangles -------------------------------------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, i: int) -> int:
    """Set partitions of an n-set into exactly i blocks, S(n, i)."""
    if n < 0 or i < 0:
        raise ValueError("arguments must be non-negative")
    if n == 0:
        return 1 if i == 0 else 0
    if i == 0 or i > n:
        return 0
    return stirling2(n - 1, i - 1) + i * stirling2(n - 1, i)


def bell(n: int) -> int:
    """Number of set partitions of an n-set (row sum of the Stirling triangle)."""
    return sum(stirling2(n, i) for i in range(n + 1))


@lru_cache(maxsize=None)
def q_stirling(n: int, i: int, q: int) -> int:
    """Vector-configuration type counts: S_q(n,i) = S_q(n-1,i-1) + q^i * S_q(n-1,i)."""
    if n < 0 or i < 0:
        raise ValueError("arguments must be non-negative")
    if n == 0:
        return 1 if i == 0 else 0
    if i == 0:
        return 1
    if i > n:
        return 0
    return q_stirling(n - 1, i - 1, q) + q**i * q_stirling(n - 1, i, q)


def gaussian_binom(n: int, i: int, q: int) -> int:
    """Number of i-dimensional subspaces of an n-dimensional space over F_q.

    Computed by the q-factorial product formula, deliberately not the same
    recurrence as q_stirling so that equality of the two is a real check;
    q = 1 degenerates to the ordinary binomial coefficient.
    """
    if n < 0 or i < 0:
        raise ValueError("arguments must be non-negative")
    if i > n:
        return 0
    num, den = 1, 1
    for j in range(i):
        num *= (q ** (n - j) - 1) if q > 1 else (n - j)
        den *= (q ** (j + 1) - 1) if q > 1 else (j + 1)
    assert num % den == 0
    return num // den


def q_bell(n: int, q: int) -> int:
    """Total number of subspaces of an n-dimensional space over F_q."""
    return sum(q_stirling(n, i, q) for i in range(n + 1))


# -- enumeration oracles -----------------------------------------------------------


def _rgs_canonical(tup: tuple[int, ...]) -> tuple[int, ...]:
    # Least relabeling of the entries: each value is renamed to its rank of
    # first appearance, which is the lexicographic minimum over the whole
    # symmetric group on the alphabet.
    rename: dict[int, int] = {}
    out = []
    for x in tup:
        if x not in rename:
            rename[x] = len(rename)
        out.append(rename[x])
    return tuple(out)


def point_orbit_counts(
    m: int, n_max: int, budget: int = DEFAULT_WORK_BUDGET
) -> tuple[list[int], list[list[int]]]:
    """Orbit totals and per-type splits for point tuples, by direct enumeration.

    Returns (totals, by_type) with by_type[n][i] the number of level-n
    orbits of type i.  Canonical representatives are extended one
    coordinate at a time; every orbit contains such an extension of its
    prefix's canonical form because the action is coordinatewise.
    """
    totals = [1]
    by_type = [[1] + [0] * m]
    reps: set[tuple[int, ...]] = {()}
    work = 0
    for _ in range(n_max):
        nxt: set[tuple[int, ...]] = set()
        for rep in reps:
            for x in range(m):
                work += 1
                if work > budget:
                    raise WorkBudgetError(f"exceeded work budget {budget}")
                nxt.add(_rgs_canonical(rep + (x,)))
        reps = nxt
        totals.append(len(reps))
        split = [0] * (m + 1)
        for rep in reps:
            split[len(set(rep))] += 1
        by_type.append(split)
    return totals, by_type


def brute_point_orbit_count(m: int, n: int) -> int:
    """Slow reference: canonical minima taken over all of S_m explicitly."""
    perms = list(itertools.permutations(range(m)))
    canon = set()
    for tup in itertools.product(range(m), repeat=n):
        canon.add(min(tuple(p[x] for x in tup) for p in perms))
    return len(canon)


@lru_cache(maxsize=None)
def _field(q: int) -> Fq:
    return Fq(q)


@lru_cache(maxsize=None)
def _vector_list(q: int, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.product(range(q), repeat=m))


def _vector_index(vec: tuple[int, ...], q: int) -> int:
    e = 0
    for d in reversed(vec):
        e = e * q + d
    return e


@lru_cache(maxsize=None)
def _gl_action_tables(q: int, m: int) -> tuple[tuple[int, ...], ...]:
    """For each invertible m x m matrix, its permutation of vector indices."""
    field = _field(q)
    vectors = _vector_list(q, m)
    tables = []
    for mat in itertools.product(range(q), repeat=m * m):
        rows = [mat[i * m : (i + 1) * m] for i in range(m)]
        images = []
        for v in vectors:
            out = []
            for i in range(m):
                acc = 0
                for j in range(m):
                    acc = field.add[acc][field.mul[rows[i][j]][v[j]]]
                out.append(acc)
            images.append(_vector_index(tuple(out), q))
        if len(set(images)) == len(vectors):
            tables.append(tuple(images))
    return tuple(tables)


def _span_dimension(field: Fq, vectors, width: int) -> int:
    echelon: list[list[int]] = []
    pivots: list[int] = []
    for v in vectors:
        vec = list(v)
        for row, piv in zip(echelon, pivots):
            if vec[piv]:
                factor = field.neg[field.mul[vec[piv]][field.inv[row[piv]]]]
                vec = [field.add[x][field.mul[factor][y]] for x, y in zip(vec, row)]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is not None:
            echelon.append(vec)
            pivots.append(piv)
    return len(echelon)


def _vector_rep_levels(
    q: int, m: int, n_max: int, budget: int
) -> list[list[tuple[int, ...]]]:
    """Canonical orbit representatives (as vector-index tuples) per level."""
    tables = _gl_action_tables(q, m)
    count = q**m
    levels: list[list[tuple[int, ...]]] = [[()]]
    work = 0
    for _ in range(n_max):
        nxt: set[tuple[int, ...]] = set()
        for rep in levels[-1]:
            for x in range(count):
                work += 1
                if work > budget:
                    raise WorkBudgetError(f"exceeded work budget {budget}")
                candidate = rep + (x,)
                best = candidate
                for table in tables:
                    image = tuple(table[i] for i in candidate)
                    if image < best:
                        best = image
                nxt.add(best)
        levels.append(sorted(nxt))
    return levels


def vector_orbit_counts(
    q: int, m: int, n_max: int, budget: int = DEFAULT_WORK_BUDGET
) -> tuple[list[int], list[list[int]]]:
    """Orbit totals and per-type splits for vector tuples under GL_m(F_q).

    Canonical representatives are lexicographic minima over the explicitly
    enumerated general linear group, so keep m small.
    """
    field = _field(q)
    vectors = _vector_list(q, m)
    levels = _vector_rep_levels(q, m, n_max, budget)
    totals = []
    by_type = []
    for reps in levels:
        totals.append(len(reps))
        split = [0] * (m + 1)
        for rep in reps:
            split[_span_dimension(field, [vectors[i] for i in rep], m)] += 1
        by_type.append(split)
    return totals, by_type


def config_orbit_oracle(
    kind: str, m: int, n: int, q: int | None = None, budget: int = DEFAULT_WORK_BUDGET
) -> tuple[int, list[int]]:
    """(total, per-type split) of level-n orbits for kind 'point' or 'vector'."""
    if kind == "point":
        totals, by_type = point_orbit_counts(m, n, budget)
    elif kind == "vector":
        if q is None:
            raise ValueError("vector configurations need q")
        totals, by_type = vector_orbit_counts(q, m, n, budget)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return totals[n], by_type[n]


# -- subspaces and the row-space bijection ------------------------------------------


def _span_set(field: Fq, gens, width: int, q: int) -> frozenset[tuple[int, ...]]:
    gens = [g for g in gens if any(g)]
    span = set()
    for coeffs in itertools.product(range(q), repeat=len(gens)):
        vec = (0,) * width
        for c, g in zip(coeffs, gens):
            if c:
                vec = tuple(field.add[a][field.mul[c][b]] for a, b in zip(vec, g))
        span.add(vec)
    return frozenset(span)


def all_subspaces(q: int, n: int) -> set[frozenset[tuple[int, ...]]]:
    """Every subspace of F_q^n, each as the frozenset of its vectors."""
    field = _field(q)
    vectors = _vector_list(q, n)
    spaces: set[frozenset[tuple[int, ...]]] = set()
    for dim in range(n + 1):
        for gens in itertools.combinations(vectors, dim):
            spaces.add(_span_set(field, gens, n, q))
    return spaces


def _subspace_dim(space: frozenset, q: int) -> int:
    size = len(space)
    dim = 0
    while q**dim < size:
        dim += 1
    return dim


def row_space_bijection_check(
    q: int, m: int, n: int, budget: int = DEFAULT_WORK_BUDGET
) -> bool:
    """Does tuple -> row space of its m x n coordinate matrix biject orbits
    onto the subspaces of F_q^n of dimension <= m, matching type to dimension?

    Both sides are enumerated: orbits by canonical minima over GL_m(F_q),
    subspaces by closing spans of generator sets.
    """
    field = _field(q)
    vectors = _vector_list(q, m)
    reps = _vector_rep_levels(q, m, n, budget)[n]
    seen_spaces: set[frozenset] = set()
    for rep in reps:
        cols = [vectors[i] for i in rep]  # column j holds vector j of the tuple
        rows = [tuple(cols[j][i] for j in range(n)) for i in range(m)]
        space = _span_set(field, rows, n, q)
        if _subspace_dim(space, q) != _span_dimension(field, cols, m):
            return False  # row rank must equal column rank
        if space in seen_spaces:
            return False  # not injective
        seen_spaces.add(space)
    expected = {s for s in all_subspaces(q, n) if _subspace_dim(s, q) <= m}
    return seen_spaces == expected
