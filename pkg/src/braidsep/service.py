"""HTTP service over the library, plus the operation handlers it shares
with the command line client.

Each handler takes a request model and returns a response model; the FastAPI
app is a thin routing layer. Domain errors (parse failures, unbound
parameters, singular matrices) surface as 422 responses with the library's
own message.
"""

from __future__ import annotations

import random
from typing import Callable, TypeVar

from fastapi import FastAPI, HTTPException

from . import schemas
from .braid import (
    parse_braid,
    reference_representation,
    separate,
    trace_pair,
)
from .catalog import catalog_rows
from .components import MultiplicityVector, enumerate_components, local_quiver
from .family import (
    ParamFamily,
    Representation,
    family_for_type,
    generic_family,
    make_representation,
    random_specialization,
)
from .field import EisensteinRational, parse_scalar, render
from .knots import KnotEntry, load_knots, run_invertibility_sweep
from .linalg import ExactMatrix

# dimension vectors of the six exceptional simples, in cyclic order
HEXAGON_SIMPLES = (
    (1, 0, 1, 0, 0),
    (0, 1, 0, 1, 0),
    (1, 0, 0, 0, 1),
    (0, 1, 1, 0, 0),
    (1, 0, 0, 1, 0),
    (0, 1, 0, 0, 1),
)


def _matrix(m: ExactMatrix) -> schemas.Matrix:
    return schemas.Matrix(**m.to_json_dict())


def _braid_relation_holds(rep: Representation) -> bool:
    s1, s2 = rep.sigma1, rep.sigma2
    return s1 @ s2 @ s1 == s2 @ s1 @ s2


# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------

def run_components(request: schemas.ComponentsRequest) -> schemas.ComponentsResponse:
    names = {row.beta: row.type_code for row in catalog_rows()}
    rows = [
        schemas.ComponentRow(
            name=names.get(comp.beta),
            beta=list(comp.beta.as_tuple()),
            n=comp.beta.n,
            dim_gamma=comp.dim_gamma,
            dim_b3=comp.dim_b3,
            mirror_of=list(comp.mirror_of.as_tuple()) if comp.mirror_of else None,
        )
        for comp in enumerate_components(request.n)
    ]
    if all(row.name is not None for row in rows):
        rows.sort(key=lambda row: row.name)  # catalog order for the named sizes
    return schemas.ComponentsResponse(n=request.n, rows=rows)


def _resolve_family(request: schemas.FamilyRequest):
    if (request.type_code is None) == (request.alpha is None):
        raise ValueError("provide exactly one of type_code or alpha")
    if request.type_code is not None:
        resolution = family_for_type(request.type_code)
        return resolution.row.type_code, resolution.family, resolution.source
    family = generic_family(MultiplicityVector(*request.alpha))
    return None, family, "generic"


def run_family(request: schemas.FamilyRequest) -> schemas.FamilyResponse:
    type_code, family, source = _resolve_family(request)
    if request.random:
        if request.params or request.lam is not None:
            raise ValueError("random draws every parameter; do not bind any")
        spec = random_specialization(
            family, random.Random(request.seed), request.low, request.high
        )
        bindings, lam, matrix = spec.bindings, spec.lam, spec.matrix
        rep = spec.representation
    else:
        if request.lam is None:
            raise ValueError("lambda is required unless random is set")
        bindings = {name: parse_scalar(text) for name, text in request.params.items()}
        lam = parse_scalar(request.lam)
        matrix = family.specialize(bindings)
        rep = make_representation(matrix, family.alpha, lam)
    if not _braid_relation_holds(rep):
        raise RuntimeError("braid relation failed; refusing to print the matrices")
    return schemas.FamilyResponse(
        type_code=type_code,
        source=source,
        code=family.code,
        alpha=list(family.alpha.as_tuple()),
        beta=list(family.beta.as_tuple()),
        n=family.n,
        free_params=list(family.free_params),
        bindings={name: render(bindings[name]) for name in family.free_params},
        lam=render(lam),
        b=_matrix(matrix),
        sigma1=_matrix(rep.sigma1),
        sigma2=_matrix(rep.sigma2),
    )


def _witness_model(witness) -> schemas.Witness | None:
    if witness is None:
        return None
    return schemas.Witness(
        bindings={name: render(value) for name, value in witness.bindings.items()},
        lam=render(witness.lam),
        trace_word=render(witness.trace_word),
        trace_reversed=render(witness.trace_reversed),
    )


def run_separate(request: schemas.SeparateRequest) -> schemas.SeparateResponse:
    word = parse_braid(request.braid)
    resolution = family_for_type(request.component)
    verdict = separate(
        word,
        resolution.family,
        request.trials,
        request.seed,
        request.low,
        request.high,
    )
    return schemas.SeparateResponse(
        braid=str(word),
        component=resolution.row.type_code,
        status=verdict.status,
        trials=verdict.trials,
        witness=_witness_model(verdict.witness),
        explanation=verdict.explanation(),
    )


def run_sweep(request: schemas.SweepRequest) -> schemas.SweepResponse:
    if request.knots is None:
        entries = load_knots()
    else:
        entries = [
            KnotEntry(
                name=item.name,
                braid=parse_braid(item.braid),
                crossings=item.crossings,
                source=item.source,
            )
            for item in request.knots
        ]
    resolution = family_for_type(request.component)
    results = run_invertibility_sweep(
        entries,
        resolution.family,
        request.trials,
        request.seed,
        request.low,
        request.high,
    )
    rows = [
        schemas.SweepRow(
            name=result.entry.name,
            crossings=result.entry.crossings,
            braid=str(result.entry.braid),
            status=result.verdict.status,
            trials=result.verdict.trials,
            witness=_witness_model(result.verdict.witness),
        )
        for result in results
    ]
    return schemas.SweepResponse(component=resolution.row.type_code, rows=rows)


def _selftest_checks() -> list[schemas.SelftestCheck]:
    checks: list[schemas.SelftestCheck] = []

    def check(name: str, fn: Callable[[], str]) -> None:
        try:
            detail, ok = fn(), True
        except Exception as err:  # noqa: BLE001 - report, do not crash
            detail, ok = f"{type(err).__name__}: {err}", False
        checks.append(schemas.SelftestCheck(name=name, ok=ok, detail=detail))

    def reference_fixture() -> str:
        rep = reference_representation()
        assert _braid_relation_holds(rep), "braid relation failed"
        power = (rep.sigma1 @ rep.sigma2) ** 3
        assert power == ExactMatrix.identity(rep.n) * rep.lam ** 6, "center failed"
        return "braid relation and central power hold exactly"

    def reference_traces() -> str:
        rep = reference_representation()
        word = parse_braid("s1^-2 s2 s1^-1 s2 s1^-1 s2^2")
        fwd, rev = trace_pair(word, rep)
        assert fwd == parse_scalar("-1092-7128r"), f"trace {render(fwd)}"
        assert rev == parse_scalar("6036+7128r"), f"reversed trace {render(rev)}"
        return f"traces {render(fwd)} and {render(rev)} as published"

    def flype_traces() -> str:
        family = family_for_type("6b").family
        one, minus = EisensteinRational(1), EisensteinRational(-1)
        bindings = dict(zip("abcdefg", (one, minus, one, minus, one, minus, one)))
        rep = family.representation(bindings, minus)
        word = parse_braid("s1^-1 s2^2 s1^-2 s2")
        fwd, rev = trace_pair(word, rep)
        assert fwd == parse_scalar("-228+648r"), f"trace {render(fwd)}"
        assert rev == parse_scalar("-876-648r"), f"reversed trace {render(rev)}"
        return f"traces {render(fwd)} and {render(rev)} as published"

    def catalog_enumeration() -> str:
        rows = catalog_rows()
        assert len(rows) == 24, f"{len(rows)} catalog rows"
        for row in rows:
            matches = [
                comp
                for comp in enumerate_components(row.n)
                if comp.beta == row.beta
            ]
            assert len(matches) == 1, f"{row.type_code} not enumerated"
            assert matches[0].dim_b3 == row.dim_b3, f"{row.type_code} dimension"
        return "all 24 catalog rows enumerated with matching dimensions"

    def hexagon() -> str:
        expected = [
            [1 if (i - j) % 6 in (1, 5) else 0 for j in range(6)] for i in range(6)
        ]
        assert local_quiver(HEXAGON_SIMPLES) == expected, "not the hexagon"
        return "local quiver of the six exceptional simples is the hexagon"

    def flype_separation() -> str:
        family = family_for_type("6b").family
        verdict = separate(
            parse_braid("s1^-1 s2^2 s1^-2 s2"), family, trials=3, seed=1
        )
        assert verdict.separated, verdict.status
        return f"separated on trial {verdict.trials} with an exact witness"

    check("reference-fixture", reference_fixture)
    check("reference-traces", reference_traces)
    check("family-6b-flype-traces", flype_traces)
    check("catalog-enumeration", catalog_enumeration)
    check("hexagon-local-quiver", hexagon)
    check("flype-separation-on-6b", flype_separation)
    return checks


def run_selftest() -> schemas.SelftestResponse:
    checks = _selftest_checks()
    return schemas.SelftestResponse(ok=all(c.ok for c in checks), checks=checks)


# ---------------------------------------------------------------------------
# FastAPI app
# ---------------------------------------------------------------------------

app = FastAPI(
    title="braidsep",
    description="Exact trace separation of braid words from their reversals "
    "on parametrized representation families.",
)

T = TypeVar("T")


def _guard(fn: Callable[[], T]) -> T:
    try:
        return fn()
    except (ValueError, ArithmeticError) as err:
        raise HTTPException(status_code=422, detail=str(err)) from err


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/components")
def components(request: schemas.ComponentsRequest) -> schemas.ComponentsResponse:
    return _guard(lambda: run_components(request))


@app.post("/family")
def family(request: schemas.FamilyRequest) -> schemas.FamilyResponse:
    return _guard(lambda: run_family(request))


@app.post("/separate")
def separate_endpoint(request: schemas.SeparateRequest) -> schemas.SeparateResponse:
    return _guard(lambda: run_separate(request))


@app.post("/knots/sweep")
def knots_sweep(request: schemas.SweepRequest) -> schemas.SweepResponse:
    return _guard(lambda: run_sweep(request))


@app.post("/selftest")
def selftest() -> schemas.SelftestResponse:
    return run_selftest()
