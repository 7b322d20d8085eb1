"""Finite permutation groups: enumeration, centralizers, conjugacy, isomorphism.

Groups are stored as full element lists (every group in scope has order at
most a few hundred, where filtering beats stabilizer-chain machinery) and
are immutable once built.  Isomorphism testing screens with cheap
invariants first, then runs a backtracking search mapping a small
generating set onto candidate images.  A KeyRegistry assigns stable
per-run tags so that isomorphic groups share one hashable key, which is
what the tree engine consumes.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import ElementNotInGroupError, OrderLimitError

__all__ = [
    "Perm",
    "PermGroup",
    "ConjClass",
    "GroupKey",
    "KeyRegistry",
    "parse_cycles",
    "is_isomorphic",
    "symmetric_group",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "wreath_c2_s2",
]

ISO_ORDER_LIMIT = 512
CLOSURE_ORDER_LIMIT = 512


class Perm:
    """Permutation of {0, ..., d-1} stored as the tuple of point images."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation: {imgs!r}")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition: (a*b)(x) = a(b(x))."""
        a = self.images
        return Perm(a[x] for x in other.images)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm(inv)

    def conjugate(self, x: "Perm") -> "Perm":
        """self * x * self^-1 without forming the inverse."""
        g = self.images
        out = [0] * len(g)
        for i, xi in enumerate(x.images):
            out[g[i]] = g[xi]
        return Perm(out)

    def commutes_with(self, other: "Perm") -> bool:
        a, b = self.images, other.images
        return all(a[b[i]] == b[a[i]] for i in range(len(a)))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, weakly decreasing."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __le__(self, other: "Perm") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Perm({list(self.images)!r})"

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cyc)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation like "(1,2)(3,4)"; "()" is the identity.

    Points within a cycle may be separated by commas or spaces.
    """
    stripped = text.strip()
    if stripped in ("", "()"):
        return Perm.identity(degree)
    if not re.fullmatch(r"(\s*\([^()]*\)\s*)+", stripped):
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    for body in _CYCLE_RE.findall(stripped):
        body = body.strip()
        if not body:
            continue
        points = [int(tok) - 1 for tok in re.split(r"[,\s]+", body)]
        if any(not 0 <= p < degree for p in points):
            raise ValueError(f"point out of range 1..{degree} in {text!r}")
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point within a cycle in {text!r}")
        for a, b in zip(points, points[1:] + points[:1]):
            if images[a] != a:
                raise ValueError(f"point {a + 1} appears in two cycles in {text!r}")
            images[a] = b
    return Perm(images)


class ConjClass(NamedTuple):
    rep: Perm
    size: int


class PermGroup:
    """Immutable permutation group given by its full, sorted element list."""

    def __init__(self, degree: int, elements: Sequence[Perm], generators: Sequence[Perm] = ()):
        self.degree = degree
        self.elements: tuple[Perm, ...] = tuple(sorted(set(elements)))
        self.generators: tuple[Perm, ...] = tuple(generators)
        if not self.elements:
            raise ValueError("a group needs at least the identity")

    @classmethod
    def from_generators(
        cls,
        degree: int,
        generators: Sequence[Perm],
        order_limit: int = CLOSURE_ORDER_LIMIT,
    ) -> "PermGroup":
        """Close the generators under multiplication (breadth-first)."""
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        identity = Perm.identity(degree)
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in generators:
                    y = x * g
                    if y not in seen:
                        if len(seen) >= order_limit:
                            raise OrderLimitError(
                                f"group order exceeds the limit {order_limit}"
                            )
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return cls(degree, list(seen), generators)

    @classmethod
    def trivial(cls, degree: int = 1) -> "PermGroup":
        return cls(degree, [Perm.identity(degree)])

    # -- basic queries ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def _element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    def __contains__(self, perm: Perm) -> bool:
        return perm in self._element_set

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.small_generating_set
        return all(a.commutes_with(b) for a, b in itertools.combinations(gens, 2))

    @cached_property
    def element_order_counts(self) -> tuple[tuple[int, int], ...]:
        counts: dict[int, int] = {}
        for x in self.elements:
            o = x.order()
            counts[o] = counts.get(o, 0) + 1
        return tuple(sorted(counts.items()))

    @cached_property
    def small_generating_set(self) -> tuple[Perm, ...]:
        """Greedy generating set: a maximal-order element, then least outsiders."""
        if self.order == 1:
            return ()
        best = max(self.elements, key=lambda x: (x.order(), tuple(-i for i in x.images)))
        gens = [best]
        closure = _closure_set(self.degree, gens)
        while len(closure) < self.order:
            for x in self.elements:
                if x not in closure:
                    gens.append(x)
                    closure = _closure_set(self.degree, gens)
                    break
        return tuple(gens)

    # -- subgroup machinery ---------------------------------------------------

    def centralizer(self, xs: Sequence[Perm]) -> "PermGroup":
        """Subgroup of elements commuting with every member of xs."""
        for x in xs:
            if x not in self:
                raise ElementNotInGroupError(f"{x} is not in the group")
        elems = [g for g in self.elements if all(g.commutes_with(x) for x in xs)]
        return PermGroup(self.degree, elems)

    @cached_property
    def _conjugation_orbits(self) -> tuple[frozenset[Perm], ...]:
        # Conjugating by a generating set reaches the whole orbit.
        gens = self.small_generating_set or (self.identity,)
        remaining = set(self.elements)
        orbits = []
        for x in self.elements:
            if x not in remaining:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for g in gens:
                        z = g.conjugate(y)
                        if z not in orbit:
                            orbit.add(z)
                            nxt.append(z)
                frontier = nxt
            remaining -= orbit
            orbits.append(frozenset(orbit))
        return tuple(orbits)

    @cached_property
    def conjugacy_classes(self) -> tuple[ConjClass, ...]:
        """Conjugation orbits in discovery order; reps are lexicographically least."""
        return tuple(
            ConjClass(rep=min(orbit), size=len(orbit))
            for orbit in self._conjugation_orbits
        )

    @cached_property
    def class_size_of(self) -> dict[Perm, int]:
        return {
            y: len(orbit) for orbit in self._conjugation_orbits for y in orbit
        }

    @cached_property
    def center_order(self) -> int:
        return sum(1 for cls in self.conjugacy_classes if cls.size == 1)

    @cached_property
    def derived_subgroup_order(self) -> int:
        commutators = {
            a.inverse() * (b.inverse() * (a * b))
            for a in self.elements
            for b in self.elements
        }
        return len(_closure_set(self.degree, sorted(commutators)))

    @cached_property
    def fingerprint(self) -> tuple:
        """Cheap isomorphism invariants; equality is necessary, not sufficient."""
        return (
            self.order,
            self.is_abelian,
            self.element_order_counts,
            self.center_order,
            tuple(sorted(cls.size for cls in self.conjugacy_classes)),
            self.derived_subgroup_order,
        )

    # -- conjugation tables for orbit enumeration -----------------------------

    @cached_property
    def element_index(self) -> dict[Perm, int]:
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def conjugation_tables(self) -> tuple[tuple[int, ...], ...]:
        """tables[g][x] = index of elements[g] * elements[x] * elements[g]^-1."""
        idx = self.element_index
        return tuple(
            tuple(idx[g.conjugate(x)] for x in self.elements) for g in self.elements
        )

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"


def _closure_set(degree: int, generators: Sequence[Perm]) -> set[Perm]:
    identity = Perm.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# -- isomorphism ------------------------------------------------------------


def is_isomorphic(g: PermGroup, h: PermGroup) -> bool:
    """Decide isomorphism of two groups of order <= 512.

    Screens by the invariant fingerprint, settles abelian pairs by their
    element-order statistics, and otherwise maps a small generating set of
    g onto candidate tuples in h by backtracking.
    """
    if g.order > ISO_ORDER_LIMIT or h.order > ISO_ORDER_LIMIT:
        raise OrderLimitError(f"isomorphism testing supports order <= {ISO_ORDER_LIMIT}")
    if g.order != h.order:
        return False
    if g.degree == h.degree and g._element_set == h._element_set:
        return True
    if g.fingerprint != h.fingerprint:
        return False
    if g.is_abelian:
        # A finite abelian group is determined by its element-order multiset.
        return True
    gens = g.small_generating_set
    profiles = [(x.order(), g.class_size_of[x]) for x in gens]
    first_candidates = [
        cls.rep
        for cls in h.conjugacy_classes
        if (cls.rep.order(), cls.size) == profiles[0]
    ]
    rest_candidates = [
        [y for y in h.elements if (y.order(), h.class_size_of[y]) == profile]
        for profile in profiles[1:]
    ]
    for first in first_candidates:
        stack = [(first,)]
        while stack:
            assignment = stack.pop()
            if len(assignment) == len(gens):
                if _extends_to_isomorphism(g, h, gens, assignment):
                    return True
                continue
            for y in rest_candidates[len(assignment) - 1]:
                stack.append(assignment + (y,))
    return False


def _extends_to_isomorphism(
    g: PermGroup, h: PermGroup, gens: Sequence[Perm], images: Sequence[Perm]
) -> bool:
    # Propagate the generator assignment along the Cayley graph of g; any
    # conflict kills the candidate.  A conflict-free, surjective map is an
    # isomorphism because multiplication was checked on every edge.
    mapping = {g.identity: h.identity}
    queue = [g.identity]
    while queue:
        x = queue.pop()
        fx = mapping[x]
        for gen, img in zip(gens, images):
            y = x * gen
            fy = fx * img
            known = mapping.get(y)
            if known is None:
                mapping[y] = fy
                queue.append(y)
            elif known != fy:
                return False
    if len(mapping) != g.order:
        return False  # gens failed to generate (cannot happen for our gens)
    return len(set(mapping.values())) == h.order


class GroupKey(NamedTuple):
    """Hashable name for a group-isomorphism class, stable within one registry."""

    fingerprint: tuple
    tag: int

    @property
    def order(self) -> int:
        return self.fingerprint[0]

    def __str__(self) -> str:
        return f"g{self.order}.{self.tag}"


class KeyRegistry:
    """Assigns equal GroupKeys exactly to isomorphic groups, first-seen tags.

    The registry is the single mutable structure in this module; confine
    one instance to one coordinator (each branching process build creates
    its own).
    """

    def __init__(self):
        self._by_fingerprint: dict[tuple, list[tuple[PermGroup, int]]] = {}
        self._next_tag = 0
        self.representatives: dict[GroupKey, PermGroup] = {}

    def key_for(self, group: PermGroup) -> GroupKey:
        if group.order > ISO_ORDER_LIMIT:
            raise OrderLimitError(
                f"iso keys support order <= {ISO_ORDER_LIMIT}, got {group.order}"
            )
        fp = group.fingerprint
        bucket = self._by_fingerprint.setdefault(fp, [])
        for rep, tag in bucket:
            if is_isomorphic(rep, group):
                return GroupKey(fp, tag)
        tag = self._next_tag
        self._next_tag += 1
        bucket.append((group, tag))
        key = GroupKey(fp, tag)
        self.representatives[key] = group
        return key


# -- named constructors -------------------------------------------------------


def symmetric_group(m: int) -> PermGroup:
    """S_m in its natural action (m <= 6 is the supported range)."""
    if not 1 <= m <= 6:
        raise ValueError("symmetric_group supports 1 <= m <= 6")
    if m == 1:
        return PermGroup.trivial(1)
    gens = [Perm([1, 0] + list(range(2, m))), Perm(list(range(1, m)) + [0])]
    return PermGroup.from_generators(m, gens, order_limit=math.factorial(m))


def cyclic_group(k: int) -> PermGroup:
    """C_k as the group generated by a k-cycle."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return PermGroup.trivial(1)
    return PermGroup.from_generators(k, [Perm(list(range(1, k)) + [0])])


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the regular n-gon (order 2n); n <= 2 degenerates naturally."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return cyclic_group(2)
    if n == 2:
        return direct_product(cyclic_group(2), cyclic_group(2))
    rotation = Perm(list(range(1, n)) + [0])
    reflection = Perm([(n - i) % n for i in range(n)])
    return PermGroup.from_generators(n, [rotation, reflection], order_limit=2 * n)


def direct_product(g: PermGroup, h: PermGroup) -> PermGroup:
    """G x H acting on the disjoint union of the two domains."""
    degree = g.degree + h.degree
    shift = g.degree
    elements = [
        Perm(list(a.images) + [shift + x for x in b.images])
        for a in g.elements
        for b in h.elements
    ]
    gens = [Perm(list(a.images) + list(range(shift, degree))) for a in g.generators]
    gens += [Perm(list(range(shift)) + [shift + x for x in b.images]) for b in h.generators]
    return PermGroup(degree, elements, gens)


def wreath_c2_s2() -> PermGroup:
    """The order-8 group C2 wr S2 permuting two swappable pairs {1,2},{3,4}."""
    gens = [
        parse_cycles("(1,2)", 4),
        parse_cycles("(3,4)", 4),
        parse_cycles("(1,3)(2,4)", 4),
    ]
    return PermGroup.from_generators(4, gens, order_limit=8)
