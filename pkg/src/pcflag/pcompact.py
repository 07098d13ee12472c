"""Numeric invariants of the p-compact group attached to a Weyl group.

Dimension, rank, minimal generating reflections, kappa, minimal
primitive reflection order, flag-variety Poincare polynomials and the
rank-one centralizer structure check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotPrimitive
from .padic import DEFAULT_PRECISION, embed_matrices
from .reflection import (
    Reflection,
    ReflectionGroup,
    min_generating_reflections,
    minimal_primitive_order,
    molien_degrees,
    parabolic,
)


@dataclass(frozen=True)
class GradedRanks:
    """Ranks of a free graded Z_p-module with finite support."""

    ranks: dict  # degree -> rank

    @staticmethod
    def from_coefficients(coeffs) -> "GradedRanks":
        return GradedRanks({d: c for d, c in enumerate(coeffs) if c})

    def rank(self, degree: int) -> int:
        return self.ranks.get(degree, 0)

    def top_degree(self) -> int:
        return max((d for d, c in self.ranks.items() if c), default=0)

    def euler(self) -> int:
        return sum((-1) ** d * c for d, c in self.ranks.items())

    def total(self) -> int:
        return sum(self.ranks.values())

    def shifted(self, k: int) -> "GradedRanks":
        return GradedRanks({d + k: c for d, c in self.ranks.items()})


@dataclass
class PCompactModel:
    p: int
    rank: int
    weyl: ReflectionGroup
    degrees: list  # d_1 <= ... <= d_r
    dimension: int  # d = sum(2 d_i - 1)
    r_prime: int
    kappa: int
    min_order: int  # minimal primitive reflection order l
    gen_reflections: tuple = field(default=())  # witness element indices
    precision: int = DEFAULT_PRECISION


def build_model(
    weyl: ReflectionGroup, p: int, precision: int = DEFAULT_PRECISION
) -> PCompactModel:
    """Derive all invariants; raises NoEmbedding if W does not act over Z_p."""
    embed_matrices(list(weyl.generators), p, precision)
    degrees = molien_degrees(weyl)
    r_prime, witness = min_generating_reflections(weyl)
    l = minimal_primitive_order(weyl)
    r = weyl.rank
    d = sum(2 * di - 1 for di in degrees)
    kappa = r + 1 - r_prime
    assert kappa >= 0, "kappa must be non-negative"
    if l > 2:
        assert (p - 1) % l == 0, "minimal order must divide p - 1"
    return PCompactModel(
        p=p,
        rank=r,
        weyl=weyl,
        degrees=degrees,
        dimension=d,
        r_prime=r_prime,
        kappa=kappa,
        min_order=l,
        gen_reflections=witness,
        precision=precision,
    )


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c, r = divmod(num[i + len(den) - 1], den[-1])
        assert r == 0, "non-exact polynomial division"
        q[i] = c
        for j, v in enumerate(den):
            num[i + j] -= c * v
    assert all(v == 0 for v in num), "flag Poincare quotient is not polynomial"
    return q


def _one_minus_t_pow(d: int) -> list[int]:
    poly = [0] * (d + 1)
    poly[0], poly[d] = 1, -1
    return poly


def parabolic_degrees(model: PCompactModel, subset) -> tuple[list[int], int]:
    """Degrees of W_I on the full rank-r space and |W_I|.

    ``subset`` holds 0-based positions into the chosen minimal
    generating reflection list; the trivial subgroup yields r ones.
    """
    idxs = [model.gen_reflections[i] for i in subset]
    sub, _ = parabolic(model.weyl, idxs)
    return molien_degrees(sub), sub.order


def flag_poincare(model: PCompactModel, subset=()) -> list[int]:
    """Poincare polynomial of H*(G/C_I; Z_p), coefficients low to high.

    Degrees are cohomological: generators of the coinvariant algebra
    sit in degree 2.
    """
    sub_degrees, _ = parabolic_degrees(model, subset)
    num = [1]
    for d in model.degrees:
        num = _poly_mul(num, _one_minus_t_pow(2 * d))
    den = [1]
    for d in sub_degrees:
        den = _poly_mul(den, _one_minus_t_pow(2 * d))
    return _poly_divexact(num, den)


def flag_euler(model: PCompactModel, subset=()) -> int:
    """Euler characteristic |W| / |W_I| of the flag variety G/C_I."""
    _, sub_order = parabolic_degrees(model, subset)
    assert model.weyl.order % sub_order == 0
    return model.weyl.order // sub_order


def flag_ranks(model: PCompactModel, subset=()) -> GradedRanks:
    return GradedRanks.from_coefficients(flag_poincare(model, subset))


@dataclass(frozen=True)
class CentralizerReport:
    reflection_index: int
    order: int  # l
    weyl_degrees: list  # degrees of <s> on the rank-r space
    dim_centralizer: int  # (r - 1) + (2l - 1)
    rank_one_quotient: bool  # exactly one degree > 1


def centralizer_structure(
    model: PCompactModel, s: Reflection
) -> CentralizerReport:
    """Structure of the centralizer attached to a primitive reflection."""
    if not s.primitive:
        raise NotPrimitive(
            f"reflection at index {s.index} is a power of a larger-order one"
        )
    sub, _ = parabolic(model.weyl, [s.index])
    degrees = molien_degrees(sub)
    l = s.order
    assert sub.order == l, "centralizer Weyl group must be cyclic of order l"
    nontrivial = [d for d in degrees if d > 1]
    return CentralizerReport(
        reflection_index=s.index,
        order=l,
        weyl_degrees=degrees,
        dim_centralizer=(model.rank - 1) + (2 * l - 1),
        rank_one_quotient=(len(nontrivial) == 1 and nontrivial[0] == l),
    )


def model_report(model: PCompactModel) -> dict:
    """JSON-serializable record of the model invariants."""
    return {
        "prime": model.p,
        "rank": model.rank,
        "order": model.weyl.order,
        "reflections": len(model.weyl.reflections),
        "degrees": list(model.degrees),
        "dimension": model.dimension,
        "rPrime": model.r_prime,
        "kappa": model.kappa,
        "l": model.min_order,
    }
