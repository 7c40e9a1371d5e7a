"""Two independent high-precision evaluators for phi(x).

phi(x) = e^{x^2/2} integral_x^inf e^{-t^2/2} dt
       = e^{x^2/2} sqrt(pi/2) erfc(x/sqrt(2))
       = integral_0^inf e^{-x t - t^2/2} dt.

Route 1 (series) computes erf by its everywhere-convergent Maclaurin
series; route 2 (quadrature) integrates the Laplace-type integral on a
truncated interval with a rigorous tail bound.  The two routes share no
machinery with each other or with the bound/continued-fraction code, so
certificates never test that machinery against itself.

Precision policy for the series route: evaluating 1 - erf(x/sqrt(2))
loses about x^2/2 * log2(e) bits to cancellation (positive x), and the
Maclaurin terms themselves peak near e^{x^2/2}; working precision is
therefore escalated by x^2 * log2(e) + 64 guard bits, which caps the
absolute error of the final product at well under 2^-(p+32).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpf

from .errors import EnvelopeError
from .families import pq_pair
from .numutil import check_precision, to_mpf

ENVELOPE = 30  # |x| beyond this is refused; the guard-bit budget assumes it

LOG2_E = math.log2(math.e)


@dataclass(frozen=True)
class OracleValue:
    value: mpf
    error_bound: mpf
    method: str


def _series_workprec(x: float, precision_bits: int) -> int:
    return precision_bits + 64 + math.ceil(float(x) * float(x) * LOG2_E)


def _erf_maclaurin(z: mpf) -> mpf:
    """erf(z) = 2/sqrt(pi) sum_k (-1)^k z^{2k+1} / (k! (2k+1)),
    summed at the current working precision."""
    zz = z * z
    term = z  # z^{2k+1} / k!
    total = z
    cutoff = mpf(2) ** (-mp.prec - 8)
    k = 0
    while True:
        k += 1
        term = term * zz / k
        contrib = term / (2 * k + 1)
        total = total + contrib if k % 2 == 0 else total - contrib
        # terms grow until k ~ |z|^2; only stop once they are shrinking
        if k > zz and abs(contrib) < cutoff:
            break
    return total * 2 / mp.sqrt(mp.pi)


def phi_series(x, precision_bits: int = 128) -> OracleValue:
    """phi via the erf Maclaurin series at escalated working precision."""
    check_precision(precision_bits)
    xf = float(to_mpf(x))
    if abs(xf) > ENVELOPE:
        raise EnvelopeError(f"|x| must be <= {ENVELOPE}")
    w = _series_workprec(xf, precision_bits)
    with mp.workprec(w):
        xv = to_mpf(x)
        erfc = 1 - _erf_maclaurin(xv / mp.sqrt(2))
        value = mp.exp(xv * xv / 2) * mp.sqrt(mp.pi / 2) * erfc
        # forward estimate: accumulated rounding is O(N) ulps of the peak
        # term, and the x^2*log2(e) escalation cancels the e^{x^2/2}
        # amplification exactly, leaving ~2^-(p+48); 2^-(p+32) is generous.
        error_bound = mpf(2) ** (-(precision_bits + 32))
    return OracleValue(value=value, error_bound=error_bound, method="series")


def phi_quadrature(x, precision_bits: int = 128) -> OracleValue:
    """phi via tanh-sinh quadrature of integral_0^T e^{-xt-t^2/2} dt.

    T solves xT + T^2/2 = (p+16) ln 2, so the discarded tail is below
    2^-(p+16) * max(1, 1/(x+T)); the quadrature error estimate is taken
    from the integrator and padded by a factor 2^8.
    """
    check_precision(precision_bits)
    xf = float(to_mpf(x))
    if abs(xf) > ENVELOPE:
        raise EnvelopeError(f"|x| must be <= {ENVELOPE}")
    with mp.workprec(precision_bits + 32):
        xv = to_mpf(x)
        big = (precision_bits + 16) * mp.ln(2)
        t_cut = -xv + mp.sqrt(xv * xv + 2 * big)
        tail = mp.exp(-xv * t_cut - t_cut * t_cut / 2) * max(mpf(1), 1 / (xv + t_cut))

        def integrand(t):
            return mp.exp(-xv * t - t * t / 2)

        # split at the integrand's peak when it lies inside the interval
        points = [mpf(0), t_cut]
        if xv < 0 and -xv < t_cut:
            points = [mpf(0), -xv, t_cut]
        value, est = mp.quad(integrand, points, error=True, maxdegree=10)
        error_bound = tail + est * 256 + (1 + abs(value)) * mpf(2) ** (-(precision_bits + 8))
    return OracleValue(value=value, error_bound=error_bound, method="quadrature")


def phi_derivative(n: int, x, precision_bits: int = 128) -> mpf:
    """phi^(n)(x) = P_n(x) phi(x) - Q_n(x), with phi from the series route."""
    if n < 0:
        raise ValueError("order must be non-negative")
    pair = pq_pair(n)
    ov = phi_series(x, precision_bits + 32)
    with mp.workprec(precision_bits + 32):
        return pair.p.eval_real(x, precision_bits + 32) * ov.value - pair.q.eval_real(
            x, precision_bits + 32
        )
