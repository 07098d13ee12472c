"""Finite complex reflection groups from generator matrices.

Breadth-first closure with deterministic element ordering, reflection
inventory via exact eigenspace tests, Molien series degrees, minimal
generating sets of reflections and parabolic subgroups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .errors import (
    BoundExceeded,
    CapExceeded,
    DegreeExtractionFailed,
    NoReflections,
    NotReflectionGenerated,
)
from .linalg import CycMatrix, nullspace


@dataclass(frozen=True)
class Reflection:
    index: int  # position in the group's element list
    order: int
    eigenvalue: CyclotomicNumber  # the nonunit eigenvalue (= det)
    hyperplane: tuple  # basis of the pointwise-fixed hyperplane
    primitive: bool


@dataclass
class ReflectionGroup:
    rank: int
    conductor: int
    generators: tuple
    elements: tuple  # closed under product and inverse, identity first
    reflections: tuple
    index_of: dict = field(repr=False)
    _perm_cache: dict = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_index(self, m: CycMatrix) -> int:
        return self.index_of[m]

    def right_perm(self, idx: int) -> tuple:
        """Permutation of element indices given by right multiplication."""
        perm = self._perm_cache.get(idx)
        if perm is None:
            g = self.elements[idx]
            perm = tuple(self.index_of[e @ g] for e in self.elements)
            self._perm_cache[idx] = perm
        return perm

    def subgroup_indices(self, gen_idxs) -> frozenset:
        """Indices of the subgroup generated by the given elements."""
        perms = [self.right_perm(i) for i in gen_idxs]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for perm in perms:
                    y = perm[x]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def element_order(self, idx: int) -> int:
        m = self.elements[idx]
        x = m
        k = 1
        while x != self.elements[0]:
            x = x @ m
            k += 1
        return k

    def power_indices(self, idx: int) -> list[int]:
        """Indices of all powers of the element (including identity)."""
        m = self.elements[idx]
        out = [0]
        x = m
        while x != self.elements[0]:
            out.append(self.index_of[x])
            x = x @ m
        return out


def trivial_group(rank: int, conductor: int = 1) -> ReflectionGroup:
    ident = CycMatrix.identity(rank, conductor)
    return ReflectionGroup(
        rank=rank,
        conductor=conductor,
        generators=(),
        elements=(ident,),
        reflections=(),
        index_of={ident: 0},
    )


def close_group(generators, cap: int = 10000) -> ReflectionGroup:
    """BFS closure of invertible matrices under multiplication.

    Element ordering is deterministic: identity first, then insertion
    order of the breadth-first search under the given generator order.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator (use trivial_group)")
    n = 1
    for g in gens:
        n = n * g.conductor // _gcd(n, g.conductor)
    gens = [g.promote(n) for g in gens]
    rank = gens[0].rank
    if any(g.rank != rank for g in gens):
        raise ValueError("generators must share a rank")
    ident = CycMatrix.identity(rank, n)
    elements = [ident]
    index_of = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                m = e @ g
                if m not in index_of:
                    index_of[m] = len(elements)
                    elements.append(m)
                    nxt.append(m)
                    if len(elements) > cap:
                        raise CapExceeded(
                            f"group closure exceeded cap {cap}"
                        )
        frontier = nxt
    group = ReflectionGroup(
        rank=rank,
        conductor=n,
        generators=tuple(gens),
        elements=tuple(elements),
        reflections=(),
        index_of=index_of,
    )
    group.reflections = _find_reflections(group)
    return group


def _find_reflections(group: ReflectionGroup) -> tuple:
    rank = group.rank
    ident = group.elements[0]
    raw = []
    for idx, m in enumerate(group.elements):
        if idx == 0:
            continue
        diff = m - ident
        basis = nullspace([list(row) for row in diff.entries])
        if len(basis) == rank - 1:
            raw.append((idx, group.element_order(idx), m.det(), tuple(
                tuple(v) for v in basis
            )))
    # primitivity: s is primitive iff no reflection of strictly larger
    # order has s among its powers
    powers = {idx: set(group.power_indices(idx)) for idx, *_ in raw}
    out = []
    for idx, order, ev, hyp in raw:
        primitive = not any(
            o2 > order and idx in powers[i2]
            for i2, o2, _, _ in raw
        )
        out.append(Reflection(idx, order, ev, hyp, primitive))
    return tuple(out)


def minimal_primitive_order(group: ReflectionGroup) -> int:
    if not group.reflections:
        raise NoReflections("group contains no reflections")
    return min(r.order for r in group.reflections if r.primitive)


def molien_series(group: ReflectionGroup, degree: int) -> list[Fraction]:
    """Coefficients of (1/|W|) * sum_w 1/det(1 - t w) up to t^degree."""
    n = group.conductor
    total = [CyclotomicNumber.zero(n) for _ in range(degree + 1)]
    r = group.rank
    for m in group.elements:
        cp = m.charpoly()  # low to high in lambda, length r+1
        # det(1 - t m) = 1 + a_1 t + ... + a_r t^r with a_i = cp[r-i]
        a = [cp[r - i] for i in range(r + 1)]
        inv = [CyclotomicNumber.one(n)]
        for j in range(1, degree + 1):
            acc = CyclotomicNumber.zero(n)
            for i in range(1, min(r, j) + 1):
                acc = acc + a[i] * inv[j - i]
            inv.append(-acc)
        for j in range(degree + 1):
            total[j] = total[j] + inv[j]
    scale = Fraction(1, group.order)
    return [
        _rational_of(c * scale)
        for c in total
    ]


def _rational_of(c: CyclotomicNumber) -> Fraction:
    if not c.is_rational():
        raise DegreeExtractionFailed(
            "Molien series has an irrational coefficient"
        )
    return c.rational_value()


def molien_degrees(group: ReflectionGroup) -> list[int]:
    """Degrees d_1 <= ... <= d_r with Molien = prod 1/(1 - t^d_i)."""
    r = group.rank
    bound = r + len(group.reflections)
    series = molien_series(group, bound)
    recip = [Fraction(0)] * (bound + 1)
    if series[0] != 1:
        raise DegreeExtractionFailed("Molien series has nonunit constant term")
    recip[0] = Fraction(1)
    for j in range(1, bound + 1):
        recip[j] = -sum(series[i] * recip[j - i] for i in range(1, j + 1))
    if any(c.denominator != 1 for c in recip):
        raise DegreeExtractionFailed("reciprocal series is not integral")
    rem = [int(c) for c in recip]
    degrees = []
    for _ in range(r):
        m = next((j for j in range(1, bound + 1) if rem[j] != 0), None)
        if m is None:
            raise DegreeExtractionFailed("series does not factor into r degrees")
        # divide rem by (1 - t^m)
        quot = [0] * (bound + 1)
        for j in range(bound + 1):
            quot[j] = rem[j] + (quot[j - m] if j >= m else 0)
        if any(quot[j] != 0 for j in range(bound - m + 1, bound + 1)):
            raise DegreeExtractionFailed("factor (1-t^d) does not divide")
        rem = quot[: bound - m + 1] + [0] * m
        degrees.append(m)
    if any(c != 0 for c in rem[1:]) or rem[0] != 1:
        raise DegreeExtractionFailed("residual series is not 1")
    degrees.sort()
    prod = 1
    for d in degrees:
        prod *= d
    if prod != group.order:
        raise DegreeExtractionFailed(
            f"degree product {prod} != group order {group.order}"
        )
    return degrees


def min_generating_reflections(
    group: ReflectionGroup, bound: int | None = None
) -> tuple[int, tuple[int, ...]]:
    """Smallest reflection subset generating the whole group.

    Returns (r', element indices of a witness subset). Exhaustive over
    subsets of increasing size; subsets contained in a previously found
    proper subgroup are pruned.
    """
    refl_idxs = [r.index for r in group.reflections]
    if not refl_idxs:
        raise NoReflections("group contains no reflections")
    if len(group.subgroup_indices(refl_idxs)) != group.order:
        raise NotReflectionGenerated(
            "reflections generate a proper subgroup"
        )
    if bound is None:
        bound = len(refl_idxs)
    proper_subgroups: list[frozenset] = []
    for size in range(1, bound + 1):
        for combo in itertools.combinations(refl_idxs, size):
            if any(all(i in h for i in combo) for h in proper_subgroups):
                continue
            closure = group.subgroup_indices(combo)
            if len(closure) == group.order:
                return size, combo
            proper_subgroups.append(closure)
    raise BoundExceeded(f"no generating subset of size <= {bound}")


def parabolic(group: ReflectionGroup, reflection_idxs) -> tuple:
    """Subgroup generated by the chosen reflections and its fixed space.

    Returns (W_I as ReflectionGroup over the ambient rank, exact basis
    of the common eigenvalue-1 subspace).
    """
    idxs = list(reflection_idxs)
    if not idxs:
        sub = trivial_group(group.rank, group.conductor)
        ident = CycMatrix.identity(group.rank, group.conductor)
        basis = [tuple(row) for row in zip(*ident.entries)]
        return sub, basis
    mats = [group.elements[i] for i in idxs]
    sub = close_group(mats, cap=group.order)
    ident = CycMatrix.identity(group.rank, group.conductor)
    stacked = []
    for m in mats:
        diff = m - ident
        stacked.extend([list(row) for row in diff.entries])
    basis = [tuple(v) for v in nullspace(stacked)]
    return sub, basis


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
