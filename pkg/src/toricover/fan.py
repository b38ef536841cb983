"""Simplicial fans given by a fan matrix and maximal-cone index sets.

Indices of rays and variables are 1-based throughout, so that ``{1, 2}``
names the cone spanned by the first two columns of ``V``.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .cones import dd_from_generators, intersect
from .errors import (
    EmptyIdealError,
    IndexOutOfRangeError,
    NotSimplicialError,
    BadIntersectionError,
    RankDeficientError,
)
from .exactla import IntMatrix, as_int_matrix


def _maximal(sets):
    sets = {frozenset(s) for s in sets}
    return frozenset(s for s in sets if not any(s < t for t in sets))


def _minimal(sets):
    sets = {frozenset(s) for s in sets}
    return frozenset(s for s in sets if not any(t < s for t in sets))


def _sort_key(s):
    return (len(s), sorted(s))


@dataclass(frozen=True)
class Fan:
    """A validated simplicial fan.  Build through :func:`validate_fan`."""

    V: IntMatrix
    max_cones: frozenset
    _cone_cache: dict = field(default_factory=dict, compare=False,
                              repr=False, hash=False)

    @property
    def n(self):
        return self.V.nrows

    @property
    def m(self):
        return self.V.ncols

    def sorted_cones(self):
        return sorted(self.max_cones, key=_sort_key)

    def cone(self, index_set):
        """The :class:`RationalCone` spanned by the rays in ``index_set``."""
        key = frozenset(index_set)
        cached = self._cone_cache.get(key)
        if cached is None:
            cached = dd_from_generators(
                [self.V.column(i - 1) for i in sorted(key)], self.n)
            self._cone_cache[key] = cached
        return cached

    def contains_cone(self, index_set):
        """Whether ``<V_I>`` is a cone of the fan (a face of a maximal one)."""
        s = frozenset(index_set)
        return any(s <= c for c in self.max_cones)


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    """Ideal generated by the monomials ``prod(x_i for i in s)``."""

    num_vars: int
    supports: frozenset

    def __post_init__(self):
        supports = _minimal(self.supports)
        for s in supports:
            for i in s:
                if not 1 <= i <= self.num_vars:
                    raise IndexOutOfRangeError(
                        f"variable index {i} outside 1..{self.num_vars}")
        object.__setattr__(self, "supports", supports)

    def sorted_supports(self):
        return sorted(self.supports, key=_sort_key)

    def __str__(self):
        gens = ["*".join(f"x{i}" for i in sorted(s)) or "1"
                for s in self.sorted_supports()]
        return "(" + ", ".join(gens) + ")"


def validate_fan(V, max_cones):
    V = as_int_matrix(V)
    n, m = V.shape
    if V.rank() != n:
        raise RankDeficientError(f"fan matrix has rank {V.rank()} < {n}")
    cones = []
    for c in max_cones:
        c = frozenset(int(i) for i in c)
        for i in c:
            if not 1 <= i <= m:
                raise IndexOutOfRangeError(f"ray index {i} outside 1..{m}")
        cones.append(c)
    cones = _maximal(cones)
    fan = Fan(V, cones)
    for c in fan.sorted_cones():
        if V.take_columns(i - 1 for i in sorted(c)).rank() != len(c):
            raise NotSimplicialError(c)
    for c1, c2 in combinations(fan.sorted_cones(), 2):
        meet = intersect(fan.cone(c1), fan.cone(c2))
        if meet != fan.cone(c1 & c2):
            raise BadIntersectionError(c1, c2)
    return fan


def is_complete(fan):
    """Purity plus ridge pairing: every maximal cone is n-dimensional and
    every facet of one lies in exactly two of them."""
    n = fan.n
    if not fan.max_cones:
        return False
    if any(len(c) != n for c in fan.max_cones):
        return False
    ridges = {}
    for c in fan.max_cones:
        for i in c:
            r = c - {i}
            ridges[r] = ridges.get(r, 0) + 1
    return all(count == 2 for count in ridges.values())


def irrelevant_ideal(fan):
    everything = frozenset(range(1, fan.m + 1))
    return SquarefreeMonomialIdeal(
        fan.m, frozenset(everything - c for c in fan.max_cones))


def fan_from_irrelevant(V, ideal):
    V = as_int_matrix(V)
    if ideal.num_vars != V.ncols:
        raise IndexOutOfRangeError(
            f"ideal has {ideal.num_vars} variables, V has {V.ncols} columns")
    everything = frozenset(range(1, V.ncols + 1))
    return validate_fan(V, [everything - s for s in ideal.supports])


def irrelevant_locus_codim(ideal):
    """Codimension of the vanishing locus: the minimum size of a set of
    variables meeting every support.

    A support that is empty makes the ideal the unit ideal; its locus is
    empty and the codimension is reported as ``num_vars + 1``.
    """
    supports = ideal.sorted_supports()
    if not supports:
        raise EmptyIdealError("ideal has no generators")
    if any(not s for s in supports):
        return ideal.num_vars + 1
    return len(min_hitting_set(supports))


def min_hitting_set(supports):
    """Exact minimum hitting set by branch and bound."""
    supports = [frozenset(s) for s in supports]
    best = _greedy_hitting_set(supports)

    def lower_bound(uncovered):
        # disjoint uncovered supports each need their own element
        used, count = set(), 0
        for s in sorted(uncovered, key=len):
            if not (s & used):
                used |= s
                count += 1
        return count

    def search(chosen, uncovered):
        nonlocal best
        if not uncovered:
            if len(chosen) < len(best):
                best = frozenset(chosen)
            return
        if len(chosen) + lower_bound(uncovered) >= len(best):
            return
        pick = min(uncovered, key=lambda s: (len(s), sorted(s)))
        for v in sorted(pick):
            search(chosen | {v}, [s for s in uncovered if v not in s])

    search(frozenset(), supports)
    return best


def _greedy_hitting_set(supports):
    chosen = set()
    uncovered = list(supports)
    while uncovered:
        counts = {}
        for s in uncovered:
            for v in s:
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda x: (-counts[x], x))
        chosen.add(v)
        uncovered = [s for s in uncovered if v not in s]
    return frozenset(chosen)


def k_neighborly_primal(fan, k):
    m = fan.m
    if not 1 <= k <= m:
        raise ValueError(f"k must lie in 1..{m}")
    return all(fan.contains_cone(J)
               for J in combinations(range(1, m + 1), k))
