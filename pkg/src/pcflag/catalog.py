"""Built-in group catalog and the group-specification file format.

The catalog ships only groups whose matrices are explicitly known or
analytically forced: cyclic C_m in rank 1, the symmetric group S_n in
its rank-(n-1) reflection representation, the rank-2 group no. 7 from
the Shephard-Todd list, and the Sullivan Weyl group C_{p-1} (which
depends on the chosen prime). Other groups enter via files.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import (
    CyclotomicNumber,
    euler_phi,
    format_rational,
    parse_rational,
)
from .errors import NonInvertibleGenerator, ParseError, UnknownGroup
from .linalg import CycMatrix


@dataclass(frozen=True)
class GroupSpec:
    """Parsed but not yet closed group input."""

    name: str
    rank: int
    conductor: int
    generators: tuple  # CycMatrix
    primes: tuple = ()  # intended primes, informational


def g7_generators() -> list[CycMatrix]:
    """The rank-2 Shephard-Todd group no. 7, entries in Q(zeta_24).

    1/sqrt(2) is (zeta^3 + zeta^21)/2 since zeta_8 + zeta_8^-1 = sqrt(2).
    """
    z = CyclotomicNumber.zeta(24)
    half = Fraction(1, 2)
    r2inv = (z ** 3 + z ** 21) * half
    s = CycMatrix.from_rational_rows([[-1, 0], [0, 1]]).promote(24)
    t = CycMatrix([
        [r2inv * (-z), r2inv * (z ** 7)],
        [r2inv * (-z), r2inv * (-(z ** 7))],
    ])
    u = CycMatrix([
        [r2inv * (-(z ** 7)), r2inv * (-(z ** 7))],
        [r2inv * z, r2inv * (-z)],
    ])
    return [s, t, u]


def cyclic_generators(m: int) -> list[CycMatrix]:
    if m == 1:
        return [CycMatrix.identity(1, 1)]
    return [CycMatrix([[CyclotomicNumber.zeta(m)]])]


def symmetric_generators(n: int) -> list[CycMatrix]:
    """Adjacent transpositions of S_n on the rank-(n-1) root basis."""
    if n < 2:
        raise ValueError("need n >= 2")
    r = n - 1
    gens = []
    for i in range(r):
        rows = [[1 if a == b else 0 for b in range(r)] for a in range(r)]
        rows[i][i] = -1
        if i > 0:
            rows[i][i - 1] = 1
        if i + 1 < r:
            rows[i][i + 1] = 1
        gens.append(CycMatrix.from_rational_rows(rows))
    return gens


CATALOG_NAMES = ["pm1", "sullivan", "S2", "S3", "S4", "G7"]


def catalog_list() -> list[dict]:
    return [
        {"name": "pm1", "description": "{+1,-1} in rank 1 (alias of C2)"},
        {"name": "Cm", "description": "cyclic group of order m in rank 1 (C2, C3, C4, ...)"},
        {"name": "Sn", "description": "symmetric group S_n, rank n-1 reflection representation"},
        {"name": "sullivan", "description": "C_{p-1} in rank 1; the Sullivan sphere Weyl group (needs --prime)"},
        {"name": "G7", "description": "Shephard-Todd no. 7, rank 2, order 144, entries in Q(zeta_24)"},
    ]


def resolve_catalog(name: str, p: int | None = None) -> GroupSpec:
    """Look up a catalog entry; cyclic/symmetric names are parametric."""
    if name == "pm1":
        name = "C2"
    if name == "sullivan":
        if p is None:
            raise UnknownGroup("the sullivan entry needs a prime")
        gens = cyclic_generators(p - 1)
        return GroupSpec("sullivan", 1, gens[0].conductor, tuple(gens), (p,))
    if name == "G7":
        gens = g7_generators()
        return GroupSpec("G7", 2, 24, tuple(gens), (13, 37, 61))
    m = re.fullmatch(r"C(\d+)", name)
    if m:
        order = int(m.group(1))
        if order < 2:
            raise UnknownGroup("cyclic catalog groups start at C2")
        gens = cyclic_generators(order)
        return GroupSpec(name, 1, gens[0].conductor, tuple(gens))
    m = re.fullmatch(r"S(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise UnknownGroup("symmetric catalog groups start at S2")
        return GroupSpec(name, n - 1, 1, tuple(symmetric_generators(n)))
    raise UnknownGroup(f"unknown catalog group {name!r}")


# -- group files ---------------------------------------------------------

def _matrix_to_json(m: CycMatrix):
    return [
        [[format_rational(c) for c in e.coeffs] for e in row]
        for row in m.entries
    ]


def spec_to_json(spec: GroupSpec) -> dict:
    obj = {
        "name": spec.name,
        "rank": spec.rank,
        "conductor": spec.conductor,
        "generators": [_matrix_to_json(m) for m in spec.generators],
    }
    if spec.primes:
        obj["primes"] = list(spec.primes)
    return obj


def serialize_group(spec: GroupSpec) -> str:
    return json.dumps(spec_to_json(spec), indent=2, sort_keys=True) + "\n"


def spec_from_json(obj: dict, source: str = "<input>") -> GroupSpec:
    for fld in ("name", "rank", "conductor", "generators"):
        if fld not in obj:
            raise ParseError(f"{source}: missing field {fld!r}")
    rank = obj["rank"]
    conductor = obj["conductor"]
    if not isinstance(rank, int) or rank < 1:
        raise ParseError(f"{source}: rank must be a positive integer")
    if not isinstance(conductor, int) or conductor < 1:
        raise ParseError(f"{source}: conductor must be a positive integer")
    phi = euler_phi(conductor)
    gens = []
    for gi, rows in enumerate(obj["generators"]):
        if len(rows) != rank or any(len(r) != rank for r in rows):
            raise ParseError(f"{source}: generator {gi} is not {rank}x{rank}")
        entries = []
        for row in rows:
            entry_row = []
            for coeffs in row:
                if len(coeffs) != phi:
                    raise ParseError(
                        f"{source}: generator {gi} entry needs phi({conductor})"
                        f" = {phi} coefficients, got {len(coeffs)}"
                    )
                try:
                    vals = [parse_rational(c) for c in coeffs]
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"{source}: bad rational: {exc}") from None
                entry_row.append(CyclotomicNumber(conductor, vals))
            entries.append(entry_row)
        mat = CycMatrix(entries)
        if mat.det().is_zero():
            raise NonInvertibleGenerator(
                f"{source}: generator {gi} has determinant zero"
            )
        gens.append(mat)
    primes = tuple(obj.get("primes", ()))
    return GroupSpec(obj["name"], rank, conductor, tuple(gens), primes)


def parse_group_file(path: str) -> GroupSpec:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except FileNotFoundError:
        raise ParseError(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}") from None
    return spec_from_json(obj, source=path)


def resolve_group(name_or_path: str, p: int | None = None) -> GroupSpec:
    """Catalog name first; anything containing a path separator or
    ending in .json is read as a group file."""
    if "/" in name_or_path or name_or_path.endswith(".json"):
        return parse_group_file(name_or_path)
    return resolve_catalog(name_or_path, p)
