"""Mayer-Vietoris spectral sequence over the poset of proper subsets.

Diagrams assign graded ranks to every proper subset of {1,...,k}; the
E1 page collects H_q over subsets of fixed cardinality, the corner
argument certifies the top dimension, and an E2 page is computed when
the user supplies the maps of the diagram.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import HypothesisViolated
from .linalg import rational_matrix_rank
from .pcompact import GradedRanks, PCompactModel, flag_ranks


def proper_subsets(k: int) -> list[frozenset]:
    """All proper subsets of {1,...,k}, smallest first, deterministic."""
    out = []
    for size in range(k):
        for combo in itertools.combinations(range(1, k + 1), size):
            out.append(frozenset(combo))
    return out


@dataclass
class PosetDiagram:
    """Functor on proper subsets of {1,...,k} valued in graded ranks.

    ``maps``, when present, assigns to every covering inclusion
    (I, I + {j}) a per-degree integer matrix of shape
    rank(F(I')) x rank(F(I)) in each degree q.
    """

    k: int
    values: dict  # frozenset -> GradedRanks
    maps: dict | None = field(default=None)

    def __post_init__(self):
        expected = set(proper_subsets(self.k))
        if set(self.values) != expected:
            raise ValueError("diagram must cover every proper subset")
        if self.maps is not None:
            self._check_functoriality()

    def value(self, subset) -> GradedRanks:
        return self.values[frozenset(subset)]

    def map_matrix(self, src: frozenset, dst: frozenset, q: int):
        """Matrix of H_q(F(src) -> F(dst)) for a covering inclusion."""
        per_degree = self.maps.get((src, dst), {})
        rows = self.values[dst].rank(q)
        cols = self.values[src].rank(q)
        mat = per_degree.get(q)
        if mat is None:
            mat = [[0] * cols for _ in range(rows)]
        if len(mat) != rows or any(len(r) != cols for r in mat):
            raise ValueError(
                f"map {sorted(src)}->{sorted(dst)} degree {q}: wrong shape"
            )
        return mat

    def _check_functoriality(self):
        degrees = set()
        for g in self.values.values():
            degrees.update(g.ranks)
        for subset in proper_subsets(self.k):
            outside = [j for j in range(1, self.k + 1) if j not in subset]
            for a, b in itertools.combinations(outside, 2):
                top = subset | {a, b}
                if len(top) >= self.k:
                    continue
                for q in degrees:
                    via_a = _mat_mul(
                        self.map_matrix(subset | {a}, top, q),
                        self.map_matrix(subset, subset | {a}, q),
                    )
                    via_b = _mat_mul(
                        self.map_matrix(subset | {b}, top, q),
                        self.map_matrix(subset, subset | {b}, q),
                    )
                    if via_a != via_b:
                        raise ValueError(
                            f"diagram maps do not commute over {sorted(subset)}"
                            f" -> {sorted(top)} in degree {q}"
                        )


def _mat_mul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in range(len(a))]
    return [
        [sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


@dataclass(frozen=True)
class SSPage:
    k: int
    table: dict  # (p, q) -> rank

    def rank(self, p: int, q: int) -> int:
        return self.table.get((p, q), 0)

    def euler(self) -> int:
        return sum((-1) ** (p + q) * r for (p, q), r in self.table.items())

    def rows(self):
        return sorted({q for (_, q) in self.table})

    def as_triples(self):
        return sorted([p, q, r] for (p, q), r in self.table.items())


def e1_page(diagram: PosetDiagram) -> SSPage:
    """E1_{p,q} = direct sum of H_q(F(I)) over |I| = k - 1 - p."""
    table: dict = {}
    for subset, graded in diagram.values.items():
        p = diagram.k - 1 - len(subset)
        for q, r in graded.ranks.items():
            if r:
                table[(p, q)] = table.get((p, q), 0) + r
    return SSPage(diagram.k, table)


def diagram_euler(diagram: PosetDiagram) -> int:
    """Alternating sum over the diagram with signs (-1)^(k-1-|I|)."""
    return sum(
        (-1) ** (diagram.k - 1 - len(subset)) * graded.euler()
        for subset, graded in diagram.values.items()
    )


def _check_hypothesis(diagram: PosetDiagram) -> int:
    top = diagram.value(frozenset()).top_degree()
    for subset, graded in diagram.values.items():
        if subset and graded.top_degree() >= top:
            raise HypothesisViolated(
                f"dim F({sorted(subset)}) >= dim F(empty) = {top}"
            )
    return top


def hocolim_dim(diagram: PosetDiagram) -> int:
    """dim hocolim F = dim F(empty) + k - 1, via the corner argument."""
    top = _check_hypothesis(diagram)
    page = e1_page(diagram)
    corner = (diagram.k - 1, top)
    for (p, q), r in page.table.items():
        if q >= top and r and (p, q) != corner:
            raise HypothesisViolated(
                f"unexpected E1 entry at (p={p}, q={q}) above the corner"
            )
    assert page.rank(*corner) > 0
    return top + diagram.k - 1


def top_rank(diagram: PosetDiagram) -> int:
    """Rank of H_top(hocolim F) = rank of H_top(F(empty))."""
    top = _check_hypothesis(diagram)
    hocolim_dim(diagram)  # re-certifies the corner
    return diagram.value(frozenset()).rank(top)


def _d1_blocks(diagram: PosetDiagram, p: int, q: int):
    """Block matrix of d1: E1_{p,q} -> E1_{p-1,q} with simplicial signs."""
    k = diagram.k
    srcs = [s for s in proper_subsets(k) if len(s) == k - 1 - p]
    dsts = [s for s in proper_subsets(k) if len(s) == k - p]
    src_offsets, total_cols = {}, 0
    for s in srcs:
        src_offsets[s] = total_cols
        total_cols += diagram.values[s].rank(q)
    dst_offsets, total_rows = {}, 0
    for s in dsts:
        dst_offsets[s] = total_rows
        total_rows += diagram.values[s].rank(q)
    block = [[0] * total_cols for _ in range(total_rows)]
    for src in srcs:
        cols = diagram.values[src].rank(q)
        if cols == 0:
            continue
        for j in sorted(set(range(1, k + 1)) - src):
            dst = src | {j}
            if len(dst) >= k:
                continue
            sign = (-1) ** sorted(dst).index(j)
            mat = diagram.map_matrix(src, dst, q)
            ro, co = dst_offsets[dst], src_offsets[src]
            for i in range(len(mat)):
                for t in range(cols):
                    block[ro + i][co + t] += sign * mat[i][t]
    return block, total_rows, total_cols


def e2_page(diagram: PosetDiagram) -> SSPage:
    """Homology of (E1, d1); requires diagram maps."""
    if diagram.maps is None:
        raise ValueError("E2 computation requires diagram maps")
    k = diagram.k
    degrees = sorted({q for g in diagram.values.values() for q in g.ranks})
    e1 = e1_page(diagram)
    table = {}
    for q in degrees:
        ranks_in = {}
        for p in range(k):
            block, rows, cols = _d1_blocks(diagram, p, q)
            ranks_in[p] = rational_matrix_rank(
                [[Fraction(v) for v in row] for row in block]
            ) if rows and cols else 0
        # sanity: d1 . d1 = 0 given functoriality (checked at build time)
        for p in range(k):
            dim = e1.rank(p, q)
            rank_out = ranks_in.get(p, 0)  # d1 leaving (p, q)
            rank_in = ranks_in.get(p + 1, 0)  # d1 arriving from (p+1, q)
            h = dim - rank_out - rank_in
            assert h >= 0, "rank bookkeeping failed"
            if h:
                table[(p, q)] = h
    return SSPage(k, table)


@dataclass(frozen=True)
class AdjointReport:
    prime: int
    kappa: int
    r_prime: int
    dimension: int  # dim A_G = d
    top_rank: int
    euler: int  # Euler characteristic of A_G
    exact_ranks: GradedRanks | None  # reduced H_*(A_G), only when r' = 1
    e1: SSPage
    is_sphere: bool | None  # None when only the E1 bound is known
    note: str


def adjoint_diagram(model: PCompactModel) -> PosetDiagram:
    """I |-> H_*(G/C_I) over proper subsets of the generating reflections."""
    values = {}
    for subset in proper_subsets(model.r_prime):
        positions = [i - 1 for i in sorted(subset)]
        values[subset] = flag_ranks(model, positions)
    return PosetDiagram(k=model.r_prime, values=values)


def adjoint_homology(model: PCompactModel) -> AdjointReport:
    """Homological shadow of the adjoint space A_G = Sigma^kappa hocolim G/C_I."""
    diagram = adjoint_diagram(model)
    dim_h = hocolim_dim(diagram)
    dim_a = dim_h + model.kappa
    assert dim_a == model.dimension, "adjoint dimension must equal dim G"
    tr = top_rank(diagram)
    page = e1_page(diagram)
    chi_hocolim = page.euler()
    assert chi_hocolim == diagram_euler(diagram)
    # chi(Sigma^kappa X) = 1 + (-1)^kappa * (chi(X) - 1)
    euler_a = 1 + (-1) ** model.kappa * (chi_hocolim - 1)
    if model.r_prime == 1:
        flag = diagram.value(frozenset())
        reduced = GradedRanks(
            {d: c for d, c in flag.ranks.items() if d > 0}
        ).shifted(model.kappa)
        is_sphere = reduced.total() == 1
        note = "exact: suspension of the flag variety"
        exact = reduced
    else:
        exact = None
        is_sphere = None
        note = "E1 bound only below the top degree; supply maps for E2"
    return AdjointReport(
        prime=model.p,
        kappa=model.kappa,
        r_prime=model.r_prime,
        dimension=dim_a,
        top_rank=tr,
        euler=euler_a,
        exact_ranks=exact,
        e1=page,
        is_sphere=is_sphere,
        note=note,
    )


def sphere_diagram(n: int, k: int, with_maps: bool = False) -> PosetDiagram:
    """F(empty) = S^n, F(I) = point; hocolim is S^(n+k-1)."""
    values = {}
    for subset in proper_subsets(k):
        if subset:
            values[subset] = GradedRanks({0: 1})
        else:
            values[subset] = GradedRanks({0: 1, n: 1})
    maps = None
    if with_maps:
        maps = {}
        for subset in proper_subsets(k):
            for j in range(1, k + 1):
                if j in subset:
                    continue
                dst = subset | {j}
                if len(dst) >= k:
                    continue
                maps[(subset, dst)] = {0: [[1]]}  # identity on H_0, zero above
    return PosetDiagram(k=k, values=values, maps=maps)
