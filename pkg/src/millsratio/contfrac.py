"""Continued-fraction expansion of the Mills ratio for x > 0.

For x > 0,

    phi(x) = [0; b_0 x, b_1 x, b_2 x, ...]
           = 1/(x + 1/(x + 2/(x + 3/(x + ...))))

with b_{2n} = C(2n, n) / 4^n and b_{2n+1} = 1 / ((2n+1) b_{2n}).  The
n-th convergent equals Q_n(x)/P_n(x) exactly; the "ladder" form above is
an equivalence transform of the same fraction, and the depth-d ladder
truncation 1/(x + 1/(x + 2/(x + ... + d/x))) equals the order-(d+1)
convergent (the offset was fixed empirically on small depths and is
asserted by the test suite).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from mpmath import mp, mpf

from .errors import DomainError
from .numutil import check_precision, to_mpf


def cf_b(n: int) -> Fraction:
    """Partial-quotient coefficient b_n, exact."""
    if n < 0:
        raise ValueError("index must be non-negative")
    m, r = divmod(n, 2)
    even = Fraction(comb(2 * m, m), 4**m)
    if r == 0:
        return even
    return 1 / ((2 * m + 1) * even)


def cf_convergent(n: int, x: Fraction) -> Fraction:
    """Exact value of [0; b_0 x, ..., b_{n-1} x] = Q_n(x)/P_n(x).

    Computed through the scaled recurrence p_{k+1} = b_k x p_k + p_{k-1}
    (and likewise for q), which keeps every intermediate rational.
    """
    x = Fraction(x)
    if n < 1:
        raise ValueError("order must be >= 1")
    if x <= 0:
        raise DomainError("expansion is stated for x > 0")
    p_prev, p = Fraction(1), x
    q_prev, q = Fraction(0), Fraction(1)
    for k in range(1, n):
        bk = cf_b(k)
        p_prev, p = p, bk * x * p + p_prev
        q_prev, q = q, bk * x * q + q_prev
    return q / p


def cf_ladder_eval(depth: int, x, precision_bits: int) -> mpf:
    """Bottom-up evaluation of 1/(x + 1/(x + 2/(x + ... + depth/x))).

    Backward (tail-first) evaluation is numerically self-correcting for
    continued fractions, so no extra guard precision is needed.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    check_precision(precision_bits)
    with mp.workprec(precision_bits):
        xv = to_mpf(x)
        if xv <= 0:
            raise DomainError("ladder is stated for x > 0")
        acc = mpf(depth) / xv
        for k in range(depth - 1, 0, -1):
            acc = k / (xv + acc)
        return 1 / (xv + acc)


def expansion_str(count: int) -> str:
    """Rendering "[0; b0*x, b1*x, ...]" with exact rational b_k."""
    parts = []
    for k in range(count):
        b = cf_b(k)
        parts.append(f"{b}*x" if b.denominator > 1 or b.numerator != 1 else "x")
    return "[0; " + ", ".join(parts) + ", ...]"
