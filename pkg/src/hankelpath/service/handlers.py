"""Service handlers: pure functions from request models to response models.

The FastAPI app and the CLI both call these, so command-line runs and HTTP
calls produce identical results.
"""

from __future__ import annotations

from .. import hankel, pathcount, transform, verify
from ..polyx import Poly, RatSeries
from ..scalars import scalar_parse, scalar_str
from . import schemas


class UsageError(ValueError):
    """Invalid request parameters (maps to HTTP 422 / CLI exit code 2)."""


def _params(ell: int, t_text: str) -> pathcount.PathParams:
    try:
        t = scalar_parse(t_text)
    except Exception as exc:
        raise UsageError(f"bad t value {t_text!r}: {exc}") from exc
    try:
        return pathcount.PathParams(ell, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _series(spec: schemas.SeriesSpec) -> RatSeries:
    try:
        return RatSeries(Poly.from_strings(spec.num),
                         Poly.from_strings(spec.den))
    except Exception as exc:
        raise UsageError(f"bad series: {exc}") from exc


def _series_spec(s: RatSeries) -> schemas.SeriesSpec:
    obj = s.to_json()
    return schemas.SeriesSpec(num=obj["num"], den=obj["den"])


def _fe_spec(fe: transform.QuadFE) -> schemas.CanonicalFESpec:
    return schemas.CanonicalFESpec(d=fe.d, k=fe.k, u=_series_spec(fe.u),
                                   v=_series_spec(fe.v))


def _chain_spec(chain: transform.FactorChain) -> schemas.ChainSpec:
    return schemas.ChainSpec(
        sign=chain.sign, delta=chain.delta,
        factors=[schemas.FactorSpec(base=scalar_str(b), offset=o)
                 for b, o in chain.factors])


def seq(request: schemas.SeqRequest) -> schemas.SeqResponse:
    params = _params(request.ell, request.t)
    terms = pathcount.f_series(params, request.n_max)
    return schemas.SeqResponse(ell=request.ell, t=request.t,
                               terms=[scalar_str(c) for c in terms])


def hankel_table(request: schemas.HankelRequest) -> schemas.HankelResponse:
    params = _params(request.ell, request.t)
    terms = pathcount.f_series(params,
                               2 * request.n_max + request.shift - 1)
    dets = hankel.det_sequence(terms, request.n_max, shift=request.shift)
    rows = [schemas.HankelRow(n=i + 1, det=scalar_str(d))
            for i, d in enumerate(dets)]
    period = None
    if request.detect_period:
        found = hankel.detect_period(dets, request.max_period)
        if found:
            period = schemas.PeriodReport(period=found[0], offset=found[1])
    return schemas.HankelResponse(ell=request.ell, t=request.t,
                                  shift=request.shift, rows=rows,
                                  period=period)


def transform_orbit(request: schemas.TransformRequest) -> schemas.TransformResponse:
    if (request.fe is None) == (request.quadratic is None):
        raise UsageError("provide exactly one of 'fe' or 'quadratic'")
    try:
        if request.fe is not None:
            fe = transform.QuadFE(request.fe.d, request.fe.k,
                                  _series(request.fe.u),
                                  _series(request.fe.v))
        else:
            form = transform.QuadraticForm(_series(request.quadratic.a),
                                           _series(request.quadratic.b),
                                           _series(request.quadratic.c))
            fe = transform.canonicalize(form)
        if request.shift:
            fe = transform.shift_out(fe, request.shift)
    except (transform.CanonicalizationError,
            transform.RationalTerminal) as exc:
        raise UsageError(str(exc)) from exc
    trace = transform.orbit(fe, max_steps=request.max_steps)
    return schemas.TransformResponse(
        status=trace.status,
        states=[_fe_spec(s) for s in trace.states],
        steps=[schemas.StepSpec(kind=s.kind, before=_fe_spec(s.before),
                                after=_fe_spec(s.after),
                                chain=_chain_spec(s.chain), note=s.note)
               for s in trace.steps],
        cycle=trace.cycle,
        recurrence=_chain_spec(trace.recurrence) if trace.recurrence else None,
    )


def lgv(request: schemas.LgvRequest) -> schemas.LgvResponse:
    params = _params(request.ell, request.t)
    try:
        config = pathcount.ITConfig(tuple(request.initials),
                                    tuple(request.terminals))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    signed = pathcount.lgv_signed_sum(config, params, budget=request.budget)
    det = hankel.det_exact(pathcount.lgv_matrix(config, params))
    return schemas.LgvResponse(signed_sum=scalar_str(signed),
                               determinant=scalar_str(det),
                               match=signed == det)


def run_verify(request: schemas.VerifyRequest) -> schemas.VerifyResponse:
    results = verify.run_checks(only=request.only)
    if not results:
        raise UsageError(f"no check matches {request.only!r}")
    items = [schemas.VerifyItem(name=r.name, passed=r.passed,
                                detail=r.detail, seconds=r.seconds)
             for r in results]
    return schemas.VerifyResponse(ok=all(r.passed for r in results),
                                  results=items)
