"""JSON-serializable reports shared by the CLI and the HTTP service."""

from __future__ import annotations

import os

from .catalog import GroupSpec, catalog_list, resolve_group, spec_to_json
from .errors import InvalidL, PCFlagError
from .hocolim import adjoint_homology
from .padic import DEFAULT_PRECISION, embed_matrices
from .pcompact import (
    PCompactModel,
    build_model,
    centralizer_structure,
    flag_euler,
    flag_poincare,
    model_report,
)
from .reflection import ReflectionGroup, close_group
from .splitting import (
    idempotent_e,
    identity_operator,
    indicator_e,
    primitive_root_lift,
    psi,
    transfer_image_bg,
    transfer_image_umkehr,
    umkehr_residues,
    verify_framing_obstruction,
)

DEFAULT_CAP = 20000
PRECISION_ENV = "PCFLAG_PRECISION"


def default_precision() -> int:
    value = os.environ.get(PRECISION_ENV)
    return int(value) if value else DEFAULT_PRECISION


def load_group(name_or_path: str, p: int | None = None,
               cap: int = DEFAULT_CAP) -> tuple[GroupSpec, ReflectionGroup]:
    spec = resolve_group(name_or_path, p)
    return spec, close_group(list(spec.generators), cap=cap)


def load_model(name_or_path: str, p: int, precision: int | None = None,
               cap: int = DEFAULT_CAP) -> tuple[GroupSpec, PCompactModel]:
    precision = precision or default_precision()
    spec, group = load_group(name_or_path, p, cap)
    return spec, build_model(group, p, precision)


def catalog_report() -> dict:
    return {"entries": catalog_list()}


def group_info_report(name: str, p: int, precision: int | None = None) -> dict:
    spec, model = load_model(name, p, precision)
    report = model_report(model)
    report["name"] = spec.name
    report["conductor"] = spec.conductor
    return report


def flag_report(name: str, p: int, subset=(), precision: int | None = None) -> dict:
    spec, model = load_model(name, p, precision)
    positions = sorted(subset)
    if any(i < 0 or i >= model.r_prime for i in positions):
        raise PCFlagError(
            f"subset indices must lie in 1..{model.r_prime}"
        )
    coeffs = flag_poincare(model, positions)
    return {
        "name": spec.name,
        "prime": p,
        "subset": [i + 1 for i in positions],
        "poincare": coeffs,
        "euler": flag_euler(model, positions),
        "topDegree": len(coeffs) - 1,
    }


def adjoint_report(name: str, p: int, precision: int | None = None) -> dict:
    spec, model = load_model(name, p, precision)
    rep = adjoint_homology(model)
    out = {
        "name": spec.name,
        "prime": p,
        "k": model.r_prime,
        "kappa": rep.kappa,
        "dim": rep.dimension,
        "topRank": rep.top_rank,
        "euler": rep.euler,
        "page": rep.e1.as_triples(),
        "note": rep.note,
    }
    if rep.exact_ranks is not None:
        out["ranks"] = {str(d): c for d, c in sorted(rep.exact_ranks.ranks.items())}
        out["verdict"] = "sphere" if rep.is_sphere else "not a sphere"
    else:
        out["verdict"] = "undetermined (E1 bound only)"
    return out


def splitting_report(p: int, l: int, degree_bound: int | None = None,
                     precision: int | None = None) -> dict:
    precision = precision or default_precision()
    if l <= 1 or (p - 1) % l != 0:
        raise InvalidL(f"l={l} must divide p-1={p - 1} and exceed 1")
    n_max = (degree_bound // 2) if degree_bound else 3 * (p - 1)
    k = precision
    zeta = primitive_root_lift(p, k)
    psi_op = psi(p, zeta, n_max, k)
    es = [idempotent_e(s, psi_op) for s in range(p - 1)]
    ident = identity_operator(p, n_max, k)
    total = es[0]
    for e in es[1:]:
        total = total + e
    checks = {
        "idempotent": all(e.compose(e) == e for e in es),
        "orthogonal": all(
            es[i].compose(es[j]).is_zero()
            for i in range(p - 1)
            for j in range(p - 1)
            if i != j
        ),
        "complete": total == ident,
        "matches_indicator": all(
            es[s] == indicator_e(s, p, n_max, k) for s in range(p - 1)
        ),
    }
    f_bg, bn_ranks = transfer_image_bg(p, l, n_max, k)
    f_um, thom_ranks = transfer_image_umkehr(p, l, n_max, k)
    checks["bg_residues_zero_mod_l"] = all(
        c == (1 if j % l == 0 else 0) for j, c in enumerate(f_bg.coeffs)
    )
    checks["umkehr_idempotent"] = f_um.compose(f_um) == f_um
    report = {
        "p": p,
        "l": l,
        "precision": k,
        "degreeBound": 2 * n_max,
        "zeta": zeta,
        "bgResidues": [s for s in range(p - 1) if s % l == 0],
        "umkehrResidues": umkehr_residues(p, l),
        "bnDegrees": sorted(bn_ranks.ranks),
        "thomDegrees": sorted(thom_ranks.ranks),
    }
    if l > 2:
        framing = verify_framing_obstruction(p, l, n_max, k)
        checks["framing_obstruction"] = framing["ok"]
    else:
        report["framingNote"] = "l=2 is handled by the classical Pittie-Smith case"
    report["checksPassed"] = [name for name, ok in checks.items() if ok]
    report["checksFailed"] = [name for name, ok in checks.items() if not ok]
    report["ok"] = not report["checksFailed"]
    return report


def centralizer_report(name: str, p: int, reflection: int,
                       precision: int | None = None) -> dict:
    spec, model = load_model(name, p, precision)
    refls = model.weyl.reflections
    if reflection < 0 or reflection >= len(refls):
        raise PCFlagError(
            f"reflection index must lie in 0..{len(refls) - 1}"
        )
    rep = centralizer_structure(model, refls[reflection])
    return {
        "name": spec.name,
        "prime": p,
        "reflection": reflection,
        "elementIndex": rep.reflection_index,
        "order": rep.order,
        "weylDegrees": rep.weyl_degrees,
        "dimCentralizer": rep.dim_centralizer,
        "rankOneQuotient": rep.rank_one_quotient,
        "dimGroup": model.dimension,
    }


def embed_report(name: str, p: int, precision: int | None = None) -> dict:
    precision = precision or default_precision()
    spec = resolve_group(name, p)
    result = embed_matrices(list(spec.generators), p, precision)
    return {
        "name": spec.name,
        "prime": p,
        "precision": precision,
        "modulus": list(result.modulus),
        "residueDegree": len(result.modulus) - 1,
        "matrices": [[list(row) for row in m] for m in result.matrices],
    }


def group_file_report(name_or_path: str, p: int | None = None) -> dict:
    spec = resolve_group(name_or_path, p)
    return spec_to_json(spec)
