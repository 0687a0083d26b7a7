"""FastAPI service wrapping the core library.

Every endpoint is a pure function of its request body, so responses are
deterministic and cacheable.  The CLI drives the same app in-process; a
deployed instance serves the identical contract over HTTP.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .betti import betti_closed, betti_homology_oracle, betti_mapping_cone, table_stats
from .containment import (
    ContainmentQuery,
    containment_sweep,
    hh_containment_check,
    lemma_inequalities,
    sweep_csv,
    valid_fold_params,
    waldschmidt_profile,
)
from .decomposition import alexander_dual, polarize, same_ideal_any_levels
from .ideals import alpha
from .schemas import (
    BettiRequest,
    CertifyRequest,
    ContainmentRequest,
    DualRequest,
    ExportCasRequest,
    HealthResponse,
    LinquotRequest,
    ParamsRequest,
    SweepRequest,
    SymbolicRequest,
)
from .sss import is_sss
from .star_config import (
    SettingError,
    cas_snippet,
    fold_ideal,
    fold_params,
    fold_symbolic,
    pol_dual_sss,
    seqcm_certificate,
    symbolic_oracle,
)

app = FastAPI(title="starconfig", version=__version__)


def _params(req: ParamsRequest):
    try:
        return fold_params(req.s, req.b, req.a, req.form_degree)
    except SettingError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/params")
def params_endpoint(req: ParamsRequest) -> dict:
    return _params(req).to_json()


@app.post("/generators")
def generators_endpoint(req: ParamsRequest) -> dict:
    p = _params(req)
    I = fold_ideal(p)
    return {"params": p.to_json(), "count": len(I), "ideal": I.to_json()}


@app.post("/symbolic")
def symbolic_endpoint(req: SymbolicRequest) -> dict:
    p = _params(req)
    I = fold_symbolic(p, req.m)
    out = {
        "params": p.to_json(),
        "m": req.m,
        "count": len(I),
        "alpha": alpha(I),
        "ideal": I.to_json(),
    }
    if req.oracle_check:
        out["oracle_agrees"] = symbolic_oracle(fold_ideal(p), req.m) == I
    return out


@app.post("/betti")
def betti_endpoint(req: BettiRequest) -> dict:
    p = _params(req)
    dual = pol_dual_sss(p, req.m)
    tables = {}
    for method in req.methods:
        if method == "formula":
            tables[method] = betti_closed(dual)
        elif method == "cone":
            tables[method] = betti_mapping_cone(dual)
        elif method == "homology":
            tables[method] = betti_homology_oracle(dual.ideal(), req.char)
        else:
            raise HTTPException(status_code=422, detail=f"unknown method {method!r}")
    first = next(iter(tables.values()))
    agree = all(t == first for t in tables.values())
    return {
        "params": p.to_json(),
        "m": req.m,
        "methods": list(tables),
        "agree": agree,
        "tables": {k: t.to_json() for k, t in tables.items()},
        "diagram": first.render(),
        "stats": table_stats(first),
    }


@app.post("/linquot")
def linquot_endpoint(req: LinquotRequest) -> dict:
    p = _params(req)
    cert = seqcm_certificate(p, req.m)
    if cert.quotients is None:
        raise HTTPException(status_code=500, detail="dual ideal failed the shift/symmetry check")
    table = cert.quotients
    return {
        "params": p.to_json(),
        "m": req.m,
        "valid": table.valid,
        "count": len(table.rows),
        "rows": table.to_json()["rows"],
        "table": table.render_table(),
    }


@app.post("/dual")
def dual_endpoint(req: DualRequest) -> dict:
    p = _params(req)
    dual = pol_dual_sss(p, req.m)
    ok, witness = is_sss(dual.ideal())
    out = {
        "params": p.to_json(),
        "m": req.m,
        "lambdas": dual.to_json(),
        "count": len(dual.generators()),
        "is_sss": ok,
        "witness": witness,
    }
    if req.verify_route:
        other = alexander_dual(polarize(fold_symbolic(p, req.m)))
        out["route_agrees"] = same_ideal_any_levels(dual.ideal(), other)
    return out


@app.post("/certify")
def certify_endpoint(req: CertifyRequest) -> dict:
    p = _params(req)
    return seqcm_certificate(p, req.m).to_json()


@app.post("/containment")
def containment_endpoint(req: ContainmentRequest) -> dict:
    p = _params(req)
    query = ContainmentQuery(p, req.k, req.l, req.m)
    holds, report = hh_containment_check(query)
    ineq = lemma_inequalities(p, req.k, req.l, req.m)
    out = {
        "holds": holds,
        "lhs_order": query.lhs_order,
        "mm_power": query.mm_power,
        "generators_checked": report["generators_checked"],
        "failures": report["failures"],
        "mu_bound": ineq["mu_bound"],
        "order_bound": ineq["order_bound"],
        "profile": None,
    }
    if req.n_max:
        out["profile"] = waldschmidt_profile(p, req.n_max).to_json()
    return out


@app.post("/sweep")
def sweep_endpoint(req: SweepRequest) -> dict:
    try:
        packs = valid_fold_params(req.s_values, req.b_values, strict_only=req.strict_only)
    except SettingError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    rows = containment_sweep(packs, l_max=req.l_max, m_max=req.m_max, timings=req.timings)
    return {
        "rows": rows,
        "csv": sweep_csv(rows),
        "all_hold": all(r["holds"] for r in rows),
    }


@app.post("/export-cas")
def export_cas_endpoint(req: ExportCasRequest) -> dict:
    p = _params(req)
    if req.what == "fold":
        snippet = cas_snippet(fold_ideal(p), "I")
    elif req.what == "symbolic":
        snippet = cas_snippet(fold_symbolic(p, req.m), "I")
    elif req.what == "dual":
        snippet = cas_snippet(pol_dual_sss(p, req.m).ideal(), "J")
    else:
        raise HTTPException(status_code=422, detail=f"unknown export target {req.what!r}")
    return {"params": p.to_json(), "m": req.m, "what": req.what, "snippet": snippet}
