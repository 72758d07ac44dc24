"""High-precision truncated evaluation of the nested series and verification.

The zeta evaluation of an admissible composition (k1, ..., kl) is the partial
sum of 1/(n1^k1 ... nl^kl) over n1 > ... > nl >= 1 with n1 <= N, computed by
a streaming dynamic program over nested prefix sums in O(l * N) operations.
Sums are accumulated in decimal floating point at a configurable number of
significant digits (plus guard digits), so truncation error dominates
rounding error by a wide margin at desk-scale cutoffs.

The truncation tail of the zeta sum is estimated by

    tail(N) ~ (1 + ln N)^(l-1) * N^(1-k1) / (k1 - 1),

a comparison-with-integrals heuristic.  It overstates the tail of deep
compositions by large factorial factors and can understate shallow ones by a
few percent (log-integral corrections), so it is an error estimate rather
than a certified enclosure; the refinement inequality |value(2N) - value(N)|
<= tail(N) is validated empirically in the test suite, and relation
verification multiplies it by a slack factor.

The two auxiliary series with the coupling factor 1/(n1 - n_last) do not
split into prefix sums, so they are evaluated over (n1, n_last) pairs in
float64 with vectorized inner products, at an independently capped cutoff;
their tails are estimated from half-cutoff refinement plus a small absolute
floor covering float64 accumulation noise across the O(N^2) terms.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from decimal import Decimal, localcontext

import numpy as np

from .relations import Relation
from .words import Composition, DomainError, Poly, composition_of, is_admissible_composition

DEFAULT_CUTOFF = 10**6
DEFAULT_DIGITS = 30
DEFAULT_SLACK = 10.0
DEFAULT_ST_CUTOFF = 10**4
_GUARD_DIGITS = 10
_FLOAT_NOISE = 1e-13  # rounding floor for the O(N^2) float64 summations


@dataclass(frozen=True)
class EvalResult:
    """Partial sum of a nested series with its truncation metadata."""

    value: Decimal
    truncation: int
    tail_bound: float


@dataclass(frozen=True)
class VerifyReport:
    relation: str
    residual: float
    threshold: float
    passed: bool

    def to_obj(self) -> dict:
        return {
            "relation": self.relation,
            "residual": self.residual,
            "threshold": self.threshold,
            "passed": self.passed,
        }


_mzv_cache: dict = {}
_cache_lock = threading.Lock()


def mzv_tail_bound(c: Composition, cutoff: int) -> float:
    l = len(c)
    if l == 0:
        return 0.0
    k1 = c[0]
    return (1.0 + math.log(cutoff)) ** (l - 1) * cutoff ** (1.0 - k1) / (k1 - 1.0)


def mzv_eval(c: Composition, cutoff: int = DEFAULT_CUTOFF, digits: int = DEFAULT_DIGITS) -> EvalResult:
    """Truncated zeta value of an admissible composition.

    The empty composition is the unit and evaluates to exactly 1.  Results
    are memoized on (composition, cutoff, digits); concurrent duplicate
    inserts are idempotent.
    """
    c = tuple(c)
    if c and not is_admissible_composition(c):
        raise DomainError(f"composition is not admissible (series diverges): {c}")
    key = (c, cutoff, digits)
    hit = _mzv_cache.get(key)
    if hit is not None:
        return hit
    if not c:
        result = EvalResult(Decimal(1), cutoff, 0.0)
    else:
        result = EvalResult(_mzv_sum(c, cutoff, digits), cutoff, mzv_tail_bound(c, cutoff))
    with _cache_lock:
        _mzv_cache.setdefault(key, result)
    return _mzv_cache[key]


def _mzv_sum(c: Composition, cutoff: int, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + _GUARD_DIGITS
        l = len(c)
        one = Decimal(1)
        # acc[i] = sum over n >= n_i > ... > n_l >= 1 so far; acc[l] is the
        # empty chain.  Updating outermost-first uses the inner value from
        # the previous n, which is exactly the strict inequality n_i > n_{i+1}.
        acc = [Decimal(0)] * l + [one]
        exps = list(c)
        for n in range(1, cutoff + 1):
            inv = one / n
            for i in range(l):
                acc[i] += inv ** exps[i] * acc[i + 1]
        total = acc[0]
    with localcontext() as ctx:
        ctx.prec = digits  # guard digits are internal only
        return +total


def zeta_of_poly(p: Poly, cutoff: int = DEFAULT_CUTOFF, digits: int = DEFAULT_DIGITS) -> EvalResult:
    """Linear extension of mzv_eval; support must be admissible (unit allowed)."""
    total = Decimal(0)
    tail = 0.0
    with localcontext() as ctx:
        ctx.prec = digits + _GUARD_DIGITS
        for w, coeff in p.items():
            if w and not (w[0] == "x" and w[-1] == "y"):
                raise DomainError(f"word is not admissible: {w!r}")
            r = mzv_eval(composition_of(w), cutoff, digits)
            total += Decimal(coeff.numerator) / Decimal(coeff.denominator) * r.value
            tail += abs(float(coeff)) * r.tail_bound
    with localcontext() as ctx:
        ctx.prec = digits
        return EvalResult(+total, cutoff, tail)


def _check_t_args(c: Composition):
    if not c or any(k < 1 for k in c):
        raise DomainError(f"series arguments must be positive integers: {c}")
    if max(c) < 2:
        raise DomainError(f"series diverges: no argument exceeds 1 in {c}")


def _inv_powers(N: int, k: int) -> np.ndarray:
    v = np.zeros(N + 1)
    v[1:] = np.arange(1, N + 1, dtype=float) ** (-float(k))
    return v


def _t_sum(c: Composition, N: int) -> float:
    """Partial sum over n1 > ... > nl > j >= 0, n1 <= N, of the coupled series."""
    l = len(c)
    inv = _inv_powers(N, 1)
    pow1 = _inv_powers(N, c[0])
    if l == 1:
        h = np.cumsum(inv[1:])
        return float(np.sum(h * pow1[1:]))
    pows = [_inv_powers(N, k) for k in c]
    # chains[i][j] = sum of the index chain n_{i+2} > ... > n_l > j with all
    # entries strictly below the current outer n; updating i in increasing
    # order keeps each update reading the pre-update (strictly smaller) level.
    chains = [np.zeros(N) for _ in range(l - 1)]
    total = 0.0
    for n in range(1, N + 1):
        if n > l - 1:
            total += pow1[n] * float(np.dot(chains[0][:n], inv[n:0:-1]))
        for i in range(l - 2):
            chains[i][:n] += pows[i + 1][n] * chains[i + 1][:n]
        chains[l - 2][:n] += pows[l - 1][n]
    return total


def _s_sum(c: Composition, k_last: int, N: int) -> float:
    """Partial sum over n1 > ... > nl > j >= 1 with the extra j^-k_last factor."""
    l = len(c)
    inv = _inv_powers(N, 1)
    pow1 = _inv_powers(N, c[0])
    w = np.zeros(N)
    w[1:] = np.arange(1, N, dtype=float) ** (-float(k_last))
    if l == 1:
        total = 0.0
        for n in range(2, N + 1):
            total += pow1[n] * float(np.dot(w[:n], inv[n:0:-1]))
        return total
    pows = [_inv_powers(N, k) for k in c]
    chains = [np.zeros(N) for _ in range(l - 1)]
    total = 0.0
    for n in range(1, N + 1):
        if n > l:
            total += pow1[n] * float(np.dot(chains[0][:n] * w[:n], inv[n:0:-1]))
        for i in range(l - 2):
            chains[i][:n] += pows[i + 1][n] * chains[i + 1][:n]
        chains[l - 2][:n] += pows[l - 1][n]
    return total


def t_series_eval(c: Composition, cutoff: int = DEFAULT_ST_CUTOFF) -> EvalResult:
    """Coupled series with factor 1/(n1 - j), innermost index j >= 0.

    Requires some argument to exceed 1.  The tail estimate is the half-cutoff
    refinement delta, doubled for safety; it is an empirical figure, not a
    certified bound.
    """
    c = tuple(c)
    _check_t_args(c)
    v = float(_t_sum(c, cutoff))
    v_half = float(_t_sum(c, cutoff // 2))
    return EvalResult(Decimal(repr(v)), cutoff, 2.0 * abs(v - v_half) + _FLOAT_NOISE)


def s_series_eval(c: Composition, k_last: int, cutoff: int = DEFAULT_ST_CUTOFF) -> EvalResult:
    """Coupled series with innermost index j >= 1 carrying exponent k_last >= 0."""
    c = tuple(c)
    if not c or any(k < 1 for k in c):
        raise DomainError(f"series arguments must be positive integers: {c}")
    if k_last < 0:
        raise DomainError(f"last exponent must be >= 0: {k_last}")
    if max(c) < 2 and k_last < 1:
        raise DomainError(f"series diverges: {c} with last exponent {k_last}")
    v = float(_s_sum(c, k_last, cutoff))
    v_half = float(_s_sum(c, k_last, cutoff // 2))
    return EvalResult(Decimal(repr(v)), cutoff, 2.0 * abs(v - v_half) + _FLOAT_NOISE)


def verify(
    relations,
    cutoff: int = DEFAULT_CUTOFF,
    slack: float = DEFAULT_SLACK,
    digits: int = DEFAULT_DIGITS,
) -> list:
    """Evaluate each relation element; pass iff |residual| <= slack * tail sum."""
    reports = []
    for rel in relations:
        r = zeta_of_poly(rel.element, cutoff, digits)
        residual = abs(float(r.value))
        threshold = slack * r.tail_bound
        label = rel.label() if isinstance(rel, Relation) else str(rel)
        reports.append(VerifyReport(label, residual, threshold, residual <= threshold))
    return reports
