"""One-shot verification suite: every headline determinant identity.

Each check is exact (integer / rational / polynomial equality, zero
tolerance) and independent of the machinery it certifies wherever an
independent route exists (DP oracle vs recurrence, signed tuple sums vs
determinants, factor chains vs direct determinant sequences).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

from . import hankel, pathcount, transform
from .polyx import Poly, RatSeries
from .scalars import RatFunc, T, Scalar

ONE_PLUS_T = RatFunc((1, 1))

PERIOD14 = [1, 1, 0, 0, -1, -1, -1, -1, -1, 0, 0, 1, 1, 1]
PREFIX_SHIFT1 = [0, -1, 0, 1, 1, 0, -1, 0, 1, 0, -1, -1, 0, 1]
PREFIX_SHIFT2 = [1, 1, 1, 1, 0, 0, -1, -1, -1, -1, -1, 0, 0, 1]
PREFIX_SHIFT3 = [1, -1, -1, 0, 0, 0, -1, -1, 1, 1, 0, 0, 0, 1]
PREFIX_SHIFT4 = [2, 3, 4, 0, 0, -4, -5, -6, -7, -8, 0, 0, 8, 9, 10,
              11, 12, 0, 0, -12, -13, -14, -15, -16, 0, 0, 16]

SEQ_L3 = [1, 0, 1, 1, 2, 3, 6, 10, 20, 36, 72, 136, 273, 532]
SEQ_MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]
SEQ_SCHRODER_AERATED = [1, 0, 2, 0, 6, 0, 22, 0, 90, 0, 394, 0]
SEQ_CATALAN_AERATED = [1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132, 0, 429]

DELANNOY_4 = [[1, 1, 1, 1], [1, 3, 5, 7], [1, 5, 13, 25], [1, 7, 25, 63]]


def _qf(a, b, c) -> transform.QuadraticForm:
    return transform.QuadraticForm(RatSeries(Poly(a)), RatSeries(Poly(b)),
                                   RatSeries(Poly(c)))


def fe_ell3() -> transform.QuadFE:
    # F = 1/(1 - x^3 - x^2 F), the ell=3, t=1 state
    return transform.canonicalize(_qf([0, 0, -1], [1, 0, 0, -1], [-1]))


def fe_motzkin(t: Scalar = T) -> transform.QuadFE:
    # F = 1/(1 - t x - x^2 F)
    return transform.canonicalize(_qf([0, 0, -1], [1, -t], [-1]))


def fe_schroder_aerated(t: Scalar = T) -> transform.QuadFE:
    # F = 1/(1 - t x^2 - x^2 F)
    return transform.canonicalize(_qf([0, 0, -1], [1, 0, -t], [-1]))


def fe_schroder(t: Scalar = T) -> transform.QuadFE:
    # F = 1/(1 - t x - x F), the non-aerated weighted case
    return transform.canonicalize(_qf([0, -1], [1, -t], [-1]))


def fe_motzkin_shifted_t1() -> transform.QuadFE:
    # G = (F - 1)/x at t=1: G = (1+x)/(1 - x - 2x^2 - x^3 G)
    return transform.canonicalize(_qf([0, 0, 0, -1], [1, -1, -2], [-1, -1]))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _expect(condition: bool, message: str, failures: List[str]):
    if not condition:
        failures.append(message)


def _result(failures: List[str], ok_detail: str) -> Tuple[bool, str]:
    if failures:
        return False, "; ".join(failures)
    return True, ok_detail


# -- reference sequences ------------------------------------------------------

def check_seq_fidelity() -> Tuple[bool, str]:
    failures: List[str] = []
    cases = [
        (pathcount.PathParams(3, 1), SEQ_L3),
        (pathcount.PathParams(1, 1), SEQ_MOTZKIN),
        (pathcount.PathParams(2, 1), SEQ_SCHRODER_AERATED),
        (pathcount.PathParams(1, 0), SEQ_CATALAN_AERATED),
    ]
    for params, expected in cases:
        got = pathcount.f_series(params, len(expected) - 1)
        _expect(got == expected,
                f"ell={params.ell}, t={params.t}: got {got}", failures)
    return _result(failures, "all four reference sequences reproduced")


# -- two independent counting routes -----------------------------------------

def check_oracle_equivalence() -> Tuple[bool, str]:
    failures: List[str] = []
    for ell in (1, 2, 3, 4):
        for t in (0, 1, 2, T):
            params = pathcount.PathParams(ell, t)
            a = pathcount.f_series(params, 30)
            b = pathcount.f_dp_oracle(params, 30)
            _expect(a == b, f"mismatch at ell={ell}, t={t}", failures)
    return _result(failures, "recurrence = DP oracle for ell<=4, n<=30")


# -- closed-form symbolic determinants ---------------------------------------

def check_motzkin_unit_det() -> Tuple[bool, str]:
    failures: List[str] = []
    terms = pathcount.f_series(pathcount.PathParams(1, T), 18)
    for n in range(1, 11):
        d = hankel.det_exact(hankel.hankel_matrix(terms, n))
        _expect(d == 1, f"det H_{n} = {d}", failures)
    return _result(failures, "det H_n = 1 for n <= 10, symbolic t")


def check_aerated_schroder_det() -> Tuple[bool, str]:
    failures: List[str] = []
    terms = pathcount.f_series(pathcount.PathParams(2, T), 15)
    for n in range(1, 9):
        d = hankel.det_exact(hankel.hankel_matrix(terms, n))
        exp = n * n // 4 if n % 2 == 0 else (n - 1) * (n + 1) // 4
        want = ONE_PLUS_T ** exp
        _expect(d == want, f"det H_{n} = {d}, want (1+t)^{exp}", failures)
    return _result(failures, "det H_n = (1+t)^(n^2/4 resp. (n-1)(n+1)/4)")


def check_schroder_det() -> Tuple[bool, str]:
    failures: List[str] = []
    terms = pathcount.schroder_series(T, 15)
    spot = pathcount.schroder_series(1, 5)
    _expect(spot == [1, 2, 6, 22, 90, 394], f"t=1 spot check: {spot}", failures)
    for n in range(1, 9):
        d = hankel.det_exact(hankel.hankel_matrix(terms, n))
        exp = n * (n - 1) // 2
        _expect(d == ONE_PLUS_T ** exp,
                f"det H_{n} = {d}, want (1+t)^{exp}", failures)
    return _result(failures, "non-aerated det H_n = (1+t)^(n(n-1)/2)")


def check_shifted_schroder_det() -> Tuple[bool, str]:
    failures: List[str] = []
    terms = pathcount.f_series(pathcount.PathParams(2, T), 16)
    for n in range(1, 9):
        d = hankel.det_exact(hankel.hankel_matrix(terms, n, shift=1))
        if n % 2:
            _expect(d == 0, f"det H1_{n} = {d}, want 0", failures)
        else:
            exp = n * (n + 2) // 4
            want = ONE_PLUS_T ** exp
            if (n // 2) % 2:
                want = -want
            _expect(d == want, f"det H1_{n} = {d}", failures)
    return _result(failures, "shifted dets alternate 0 / +-(1+t)^(n(n+2)/4)")


# -- the period-14 determinant pattern at ell=3 ------------------------------

def check_ell3_period14() -> Tuple[bool, str]:
    failures: List[str] = []
    terms = pathcount.f_series(pathcount.PathParams(3, 1), 83)
    dets = hankel.det_sequence(terms, 42)
    _expect(dets == PERIOD14 * 3, f"det sequence prefix {dets[:14]}", failures)
    period = hankel.detect_period(dets, 20)
    _expect(period == (14, 0), f"detect_period gave {period}", failures)
    _expect(hankel.det_exact([]) == 1, "det of empty matrix is not 1", failures)
    return _result(failures, "period-14 pattern holds through n=42")


# -- shifted Motzkin determinants --------------------------------------------

def check_shifted_motzkin_det() -> Tuple[bool, str]:
    failures: List[str] = []
    terms = pathcount.f_series(pathcount.PathParams(1, T), 20)
    dets = hankel.det_sequence(terms, 10, shift=1)
    _expect(dets[0] == T, f"det H1_1 = {dets[0]}", failures)
    _expect(dets[1] == T * T - 1, f"det H1_2 = {dets[1]}", failures)
    for n in range(3, 11):
        want = T * dets[n - 2] - dets[n - 3]
        _expect(dets[n - 1] == want, f"recurrence fails at n={n}", failures)

    terms1 = pathcount.f_series(pathcount.PathParams(1, 1), 37)
    dets1 = hankel.det_sequence(terms1, 18, shift=1)
    pattern6 = [1, 0, -1, -1, 0, 1]
    _expect(dets1 == [pattern6[i % 6] for i in range(18)],
            f"t=1 sequence {dets1}", failures)

    terms2 = pathcount.f_series(pathcount.PathParams(1, 2), 25)
    dets2 = hankel.det_sequence(terms2, 12, shift=1)
    _expect(dets2 == [n + 1 for n in range(1, 13)],
            f"t=2 sequence {dets2}", failures)
    return _result(failures, "recurrence, period 6 at t=1, n+1 at t=2")


# -- signed path-tuple sums vs determinants ----------------------------------

def _lgv_match(config: pathcount.ITConfig, params: pathcount.PathParams):
    signed = pathcount.lgv_signed_sum(config, params)
    det = hankel.det_exact(pathcount.lgv_matrix(config, params))
    return signed, det


def check_lgv_lemma() -> Tuple[bool, str]:
    failures: List[str] = []
    touching = pathcount.ITConfig(((0, 0), (-1, 0), (-2, 0), (-3, 0)),
                              ((0, 0), (1, 0), (2, 0), (3, 0)))
    signed, det = _lgv_match(touching, pathcount.PathParams(1, 1))
    _expect(signed == 1 and det == 1,
            f"crossing axis config: signed={signed}, det={det}", failures)

    shifted4 = pathcount.ITConfig(((0, 0), (-1, 0), (-2, 0), (-3, 0)),
                              ((1, 0), (2, 0), (3, 0), (4, 0)))
    signed, det = _lgv_match(shifted4, pathcount.PathParams(1, T))
    want = T ** 4 - 3 * T ** 2 + 1  # det H1_4 from the shifted recurrence
    _expect(signed == det == want,
            f"shifted axis config: signed={signed}, det={det}", failures)

    params = pathcount.PathParams(1, 1)
    checked = 0
    for order in (1, 2, 3):
        for ini_x in combinations(range(0, -5, -1), order):
            for ter_x in combinations(range(0, 5), order):
                config = pathcount.ITConfig(
                    tuple((x, 0) for x in ini_x),
                    tuple((x, 0) for x in ter_x))
                signed, det = _lgv_match(config, params)
                checked += 1
                if signed != det:
                    _expect(False,
                            f"mismatch for {ini_x}/{ter_x}: {signed} != {det}",
                            failures)
    return _result(failures,
                   f"signed sums equal determinants for {checked} configs")


# -- Delannoy matrix determinants --------------------------------------------

def check_delannoy() -> Tuple[bool, str]:
    failures: List[str] = []
    m = pathcount.delannoy_matrix(4, 1)
    _expect(m == DELANNOY_4, f"4x4 t=1 matrix: {m}", failures)
    _expect(hankel.det_exact(m) == 64, "det of 4x4 t=1 matrix != 64", failures)
    for n in range(1, 7):
        d = hankel.det_exact(pathcount.delannoy_matrix(n, T))
        exp = n * (n - 1) // 2
        _expect(d == ONE_PLUS_T ** exp, f"det M(0) at n={n}: {d}", failures)
    return _result(failures, "det M(0) = (1+t)^(n(n-1)/2), n <= 6 symbolic")


# -- the ell=3 transformation orbit ------------------------------------------

def _ell3_intermediates() -> List[transform.QuadFE]:
    # the hand-entered functional equations after transformations 1..4
    return [
        transform.canonicalize(_qf([0, 0, -1], [1, 0, 0, 1], [-1, -1])),
        transform.canonicalize(_qf([0, 0, -1, -1], [1, 0, -2, -1], [0, 0, -1])),
        transform.canonicalize(_qf([0, 0, 0, 0, -1], [1, 0, -2, -1], [-1, -1])),
        transform.canonicalize(_qf([0, 0, -1, -1], [1, 0, 0, 1], [-1])),
    ]


def check_engine_ell3() -> Tuple[bool, str]:
    failures: List[str] = []
    trace = transform.orbit(fe_ell3())
    _expect(trace.status == "cycle", f"status {trace.status}", failures)
    _expect(trace.cycle == (0, 5), f"cycle {trace.cycle}", failures)
    rec = trace.recurrence
    if rec is None:
        failures.append("no recurrence reported")
    else:
        _expect(rec.delta == 7 and rec.sign == -1 and not rec.factors,
                f"recurrence delta={rec.delta}, sign={rec.sign}, "
                f"factors={rec.factors}", failures)
    for idx, want in enumerate(_ell3_intermediates(), start=1):
        if idx < len(trace.states):
            _expect(transform.fe_equal(trace.states[idx], want),
                    f"state {idx} differs: {trace.states[idx]}", failures)
    return _result(failures, "5-step cycle with delta=7, sign=-1")


# -- orbits of the classical sequences ---------------------------------------

def check_engine_known_orbits() -> Tuple[bool, str]:
    failures: List[str] = []

    # Motzkin: one-step fixed point
    trace = transform.orbit(fe_motzkin())
    _expect(trace.status == "cycle" and trace.cycle == (0, 1),
            f"Motzkin orbit: {trace.status}, {trace.cycle}", failures)
    if trace.recurrence:
        rec = trace.recurrence
        _expect(rec.delta == 1 and rec.sign == 1 and not rec.factors,
                f"Motzkin recurrence {rec}", failures)

    # aerated weighted Schroeder: det H_n = (1+t)^(n-1) det H_{n-2}
    trace = transform.orbit(fe_schroder_aerated())
    _expect(trace.status == "cycle" and trace.cycle == (0, 3),
            f"aerated orbit: {trace.status}, {trace.cycle}", failures)
    rec = trace.recurrence
    if rec is None:
        failures.append("aerated orbit has no recurrence")
    else:
        _expect(rec.delta == 2 and rec.sign == 1
                and rec.factors == ((ONE_PLUS_T, 1),),
                f"aerated recurrence delta={rec.delta}, sign={rec.sign}, "
                f"factors={rec.factors}", failures)

    # non-aerated: cycle away from the start, factor (1+t) at current size
    trace = transform.orbit(fe_schroder())
    _expect(trace.status == "cycle" and trace.cycle == (1, 3),
            f"non-aerated orbit: {trace.status}, {trace.cycle}", failures)
    rec = trace.recurrence
    if rec is None:
        failures.append("non-aerated orbit has no recurrence")
    else:
        _expect(rec.delta == 1 and rec.sign == 1
                and rec.factors == ((ONE_PLUS_T, 0),),
                f"non-aerated recurrence delta={rec.delta}, sign={rec.sign}, "
                f"factors={rec.factors}", failures)
    # unrolling the chain gives the closed form (1+t)^(n(n-1)/2)
    terms = pathcount.schroder_series(T, 15)
    for n in range(1, 9):
        d = hankel.det_exact(hankel.hankel_matrix(terms, n))
        _expect(d == ONE_PLUS_T ** (n * (n - 1) // 2),
                f"closed form fails at n={n}", failures)

    # shifted Motzkin at t=1: delta 3, sign -1, hence period 6
    trace = transform.orbit(fe_motzkin_shifted_t1())
    _expect(trace.status == "cycle" and trace.cycle == (0, 2),
            f"shifted orbit: {trace.status}, {trace.cycle}", failures)
    rec = trace.recurrence
    if rec is None:
        failures.append("shifted orbit has no recurrence")
    else:
        _expect(rec.delta == 3 and rec.sign == -1 and not rec.factors,
                f"shifted recurrence delta={rec.delta}, sign={rec.sign}",
                failures)
    return _result(failures, "known orbits all close as expected")


# -- numeric certification of every recorded step ---------------------------

def verify_application_chain(fe_from: transform.QuadFE,
                             fe_to: transform.QuadFE,
                             chain: transform.FactorChain,
                             n_max: int = 12) -> Optional[str]:
    """det H_n(from) must equal chain factor times det H_{n-delta}(to)."""
    terms_from = transform.series_of_fe(fe_from, 2 * n_max)
    terms_to = transform.series_of_fe(fe_to, 2 * n_max)
    for n in range(1, n_max + 1):
        if n < chain.delta:
            continue
        lhs = hankel.det_exact(hankel.hankel_matrix(terms_from, n))
        rhs = hankel.det_exact(
            hankel.hankel_matrix(terms_to, n - chain.delta))
        if lhs != chain.scale_at(n) * rhs:
            return (f"chain relation fails at n={n}: det={lhs}, "
                    f"scale*det'={chain.scale_at(n) * rhs}")
    return None


def _orbit_application_chains(trace: transform.OrbitTrace):
    for i in range(len(trace.states) - 1):
        yield (trace.states[i], trace.states[i + 1],
               transform._between(trace.chains, i, i + 1))


def check_chain_soundness() -> Tuple[bool, str]:
    failures: List[str] = []
    orbits = {
        "ell3": transform.orbit(fe_ell3()),
        "motzkin": transform.orbit(fe_motzkin()),
        "aerated-schroder": transform.orbit(fe_schroder_aerated()),
        "schroder": transform.orbit(fe_schroder()),
        "motzkin-shifted": transform.orbit(fe_motzkin_shifted_t1()),
    }
    pairs = 0
    for label, trace in orbits.items():
        for fe_from, fe_to, chain in _orbit_application_chains(trace):
            message = verify_application_chain(fe_from, fe_to, chain)
            pairs += 1
            if message:
                _expect(False, f"{label}: {message}", failures)
    return _result(failures, f"{pairs} transformation steps certified to n=12")


# -- shifted ell=3 determinant periods ---------------------------------------

def check_ell3_shifted_periods() -> Tuple[bool, str]:
    failures: List[str] = []
    terms = pathcount.f_series(pathcount.PathParams(3, 1), 60)
    prefixes = {1: PREFIX_SHIFT1, 2: PREFIX_SHIFT2, 3: PREFIX_SHIFT3}
    for shift, prefix in prefixes.items():
        dets = hankel.det_sequence(terms, 28, shift=shift)
        _expect(dets[:14] == prefix,
                f"k={shift} prefix {dets[:14]}", failures)
        _expect(dets[14:28] == dets[:14],
                f"k={shift} does not repeat with period 14", failures)
    trace = transform.orbit(transform.shift_out(fe_ell3(), 1))
    _expect(trace.status == "cycle", f"shift-1 orbit status {trace.status}",
            failures)
    rec = trace.recurrence
    if rec is None:
        failures.append("shift-1 orbit has no recurrence")
    else:
        _expect(rec.delta == 7 and rec.sign == -1,
                f"shift-1 recurrence delta={rec.delta}, sign={rec.sign}", failures)
    return _result(failures, "k=1..3 prefixes, period 14 to n=28, shift-1 orbit")


# -- the shift-4 mixed recurrence --------------------------------------------

def check_ell3_shift4_recurrence() -> Tuple[bool, str]:
    failures: List[str] = []
    terms = pathcount.f_series(pathcount.PathParams(3, 1), 90)
    dets4 = hankel.det_sequence(terms, 40, shift=4)
    dets0 = hankel.det_sequence(terms, 40)
    _expect(dets4[:27] == PREFIX_SHIFT4,
            f"shift-4 prefix {dets4[:27]}", failures)
    for n in range(8, 41):
        want = 4 * dets0[n - 2] - dets4[n - 8]
        _expect(dets4[n - 1] == want,
                f"mixed recurrence fails at n={n}", failures)
    # G0 = (F0 - 1)/x^2: plain Hankel of the doubly shifted sequence
    g0_terms = terms[2:]
    for n in range(1, 21):
        lhs = hankel.det_exact(hankel.hankel_matrix(g0_terms, n))
        rhs = -hankel.det_exact(hankel.hankel_matrix(terms, n + 5))
        _expect(lhs == rhs, f"det H_n(G0) != -det H_(n+5)(F0) at n={n}",
                failures)
    trace = transform.orbit(transform.shift_out(fe_ell3(), 4), max_steps=12)
    _expect(trace.status == "no_cycle",
            f"shift-4 orbit reported {trace.status}, expected honest no-cycle",
            failures)
    return _result(failures, "mixed recurrence n=8..40, G0 relation, no cycle")


CHECKS: Dict[str, Callable[[], Tuple[bool, str]]] = {
    "seq-fidelity": check_seq_fidelity,
    "oracle-equivalence": check_oracle_equivalence,
    "motzkin-unit-det": check_motzkin_unit_det,
    "aerated-schroder-det": check_aerated_schroder_det,
    "ell3-period14": check_ell3_period14,
    "schroder-det": check_schroder_det,
    "shifted-motzkin-det": check_shifted_motzkin_det,
    "shifted-schroder-det": check_shifted_schroder_det,
    "lgv-identity": check_lgv_lemma,
    "delannoy-det": check_delannoy,
    "engine-ell3": check_engine_ell3,
    "engine-known-orbits": check_engine_known_orbits,
    "chain-soundness": check_chain_soundness,
    "ell3-shifted-periods": check_ell3_shifted_periods,
    "ell3-shift4-recurrence": check_ell3_shift4_recurrence,
}


def run_checks(only: Optional[str] = None) -> List[CheckResult]:
    results: List[CheckResult] = []
    for name, func in CHECKS.items():
        if only and only not in name:
            continue
        start = time.perf_counter()
        try:
            passed, detail = func()
        except Exception as exc:  # a crash is a failure, not an abort
            passed, detail = False, f"exception: {exc!r}"
        results.append(CheckResult(name, passed, detail,
                                   time.perf_counter() - start))
    return results
