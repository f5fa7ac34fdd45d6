"""Shape predicates for nonnegative coefficient sequences.

Three nested properties, each checked exactly:

  unimodal          rises (weakly) to a peak, then falls (weakly)
  log-concave       a_j^2 >= a_{j-1} a_{j+1} for every interior j
  ultra-log-concave a_j / C(n, j) is log-concave, n = len - 1

For sequences with no internal zeros, ultra-log-concave implies
log-concave implies unimodal; that chain is asserted whenever all three
are computed together, as a built-in consistency alarm.

All predicates are invariant under positive scaling, so the batch runner
works on integer-scaled polynomial coefficients and never touches a
Fraction in its hot loop.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import polynomials
from .reports import CertReport

Number = Fraction | int


class InternalConsistencyError(AssertionError):
    """The ULC => log-concave => unimodal chain failed; something is broken."""


@dataclass(frozen=True)
class ShapeVerdict:
    """Results of the shape predicates on one sequence.

    Fields not requested by the particular check stay None.  On failure,
    failure_witness is the index where the property first breaks: the
    dip index for unimodality, the middle index of the first violated
    three-term inequality for the concavity checks.
    """

    unimodal: bool | None = None
    log_concave: bool | None = None
    ultra_log_concave: bool | None = None
    peak_index: int | None = None
    failure_witness: int | None = None


def _validate(seq: Sequence[Number]) -> list[Number]:
    values = list(seq)
    if not values:
        raise ValueError("shape predicates need a nonempty sequence")
    for k, v in enumerate(values):
        if v < 0:
            raise ValueError(f"entry {k} is negative; sequences must be >= 0")
    return values


def is_unimodal(seq: Sequence[Number]) -> ShapeVerdict:
    """Weakly increasing then weakly decreasing.

    peak_index is the smallest index attaining the maximum (the start of
    the peak plateau).  The failure witness is the dip: the first index
    sitting strictly below both a previous and a following entry.
    """
    values = _validate(seq)
    rise_end = 0
    while rise_end + 1 < len(values) and values[rise_end] <= values[rise_end + 1]:
        rise_end += 1
    for j in range(rise_end, len(values) - 1):
        if values[j] < values[j + 1]:
            # walk back to the dip: the low point before this new rise
            dip = j
            while dip > 0 and values[dip - 1] == values[dip]:
                dip -= 1
            return ShapeVerdict(unimodal=False, failure_witness=dip)
    peak = rise_end
    while peak > 0 and values[peak - 1] == values[peak]:
        peak -= 1
    return ShapeVerdict(unimodal=True, peak_index=peak)


def is_log_concave(seq: Sequence[Number]) -> ShapeVerdict:
    """a_j^2 >= a_{j-1} a_{j+1} for all interior j (any zeros allowed)."""
    values = _validate(seq)
    for j in range(1, len(values) - 1):
        if values[j] * values[j] < values[j - 1] * values[j + 1]:
            return ShapeVerdict(log_concave=False, failure_witness=j)
    return ShapeVerdict(log_concave=True)


def is_ultra_log_concave(seq: Sequence[Number]) -> ShapeVerdict:
    """Log-concavity of a_j / C(n, j) with n = len(seq) - 1.

    Checked by integer cross-multiplication,
        a_j^2 C(n, j-1) C(n, j+1) >= a_{j-1} a_{j+1} C(n, j)^2,
    so no division ever happens and exactness is free.
    """
    values = _validate(seq)
    n = len(values) - 1
    for j in range(1, n):
        lhs = values[j] * values[j] * math.comb(n, j - 1) * math.comb(n, j + 1)
        rhs = values[j - 1] * values[j + 1] * math.comb(n, j) ** 2
        if lhs < rhs:
            return ShapeVerdict(ultra_log_concave=False, failure_witness=j)
    return ShapeVerdict(ultra_log_concave=True)


def shape_summary(seq: Sequence[Number]) -> ShapeVerdict:
    """All three predicates at once, with the implication chain asserted.

    For strictly positive sequences, ultra-log-concave forces log-concave
    forces unimodal; a violation of that chain means a predicate
    implementation is wrong, so it raises rather than returning.
    """
    values = _validate(seq)
    uni = is_unimodal(values)
    lc = is_log_concave(values)
    ulc = is_ultra_log_concave(values)
    if all(v > 0 for v in values):
        if ulc.ultra_log_concave and not lc.log_concave:
            raise InternalConsistencyError(
                "ultra-log-concave sequence judged not log-concave"
            )
        if lc.log_concave and not uni.unimodal:
            raise InternalConsistencyError(
                "log-concave positive sequence judged not unimodal"
            )
    witness = None
    for verdict in (ulc, lc, uni):
        if verdict.failure_witness is not None:
            witness = verdict.failure_witness
    return ShapeVerdict(
        unimodal=uni.unimodal,
        log_concave=lc.log_concave,
        ultra_log_concave=ulc.ultra_log_concave,
        peak_index=uni.peak_index,
        failure_witness=witness,
    )


def shape_report(
    n_values: Iterable[int],
    override: Callable[[int], Sequence[Number]] | None = None,
) -> list[CertReport]:
    """Shape verdicts for the shifted polynomials Q_n over a range of n.

    Each report covers one n, computed on the integer-scaled coefficients
    of n! * Q_n (the predicates cannot tell the difference and the
    arithmetic stays integral).  A failing n still gets its report, with
    the witness index, and stops the run there; everything before it is
    returned as well.

    override, when given, replaces the coefficient source per n; it
    exists so tests can inject a doctored sequence and watch the failure
    path fire.
    """
    reports: list[CertReport] = []
    for n in n_values:
        if n < 0:
            raise ValueError("shape reports need nonnegative n")
        start = time.perf_counter()
        seq = (
            list(override(n)) if override is not None else list(polynomials.q_scaled_coeffs(n))
        )
        verdict = shape_summary(seq)
        elapsed = time.perf_counter() - start
        passed = bool(verdict.ultra_log_concave)
        details = {
            "unimodal": verdict.unimodal,
            "log_concave": verdict.log_concave,
            "ultra_log_concave": verdict.ultra_log_concave,
            "peak_index": verdict.peak_index,
            "length": len(seq),
        }
        witnesses = []
        if not passed:
            witnesses.append(
                {
                    "failure_witness": verdict.failure_witness,
                    "window": [
                        str(seq[k])
                        for k in range(
                            max(0, (verdict.failure_witness or 0) - 1),
                            min(len(seq), (verdict.failure_witness or 0) + 2),
                        )
                    ],
                }
            )
        reports.append(
            CertReport(
                kind="shape",
                target={"n": n},
                verdict="pass" if passed else "fail",
                details=details,
                witnesses=witnesses,
                timings={"total": elapsed},
            )
        )
        if not passed:
            break
    return reports
