"""Exact evaluation oracles: q-Pochhammer products and twist-knot invariants.

The colored Jones sequence of a twist knot has a closed double-sum form; it
is evaluated here term by term in K(q) and serves as the independent oracle
for recurrence and unrolling tests (small n only: the sum has O(n**2) terms).
"""

from __future__ import annotations

from .ratfunc import RF_ONE, RatFuncQ


def q_pochhammer(a: RatFuncQ, k: int) -> RatFuncQ:
    """(a; q)_k = product of (1 - a q**j) for j = 0..k-1; empty product is 1."""
    if k < 0:
        raise ValueError("q-Pochhammer length must be nonnegative")
    acc = RF_ONE
    for j in range(k):
        factor = RF_ONE - a.scale_qpow(j)
        if factor.is_zero():
            return factor
        acc = acc * factor
    return acc


def colored_jones_twist(p: int, n: int) -> RatFuncQ:
    """n-th colored Jones value of the p-th twist knot (unknot-normalized).

    Double sum over 0 <= j <= k <= n; the factor (q**(1-n); q)_k kills all
    terms with k >= n >= 1, so the work is quadratic in n.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    total = RatFuncQ.const(0)
    for k in range(n + 1):
        front = q_pochhammer(RatFuncQ.q_power(1 - n), k)
        if front.is_zero():
            break
        front = front * q_pochhammer(RatFuncQ.q_power(1 + n), k)
        for j in range(k + 1):
            expo = k + p * j * (j + 1) + j * (j - 1) // 2
            weight = RatFuncQ.q_power(2 * j + 1) - RF_ONE
            term = (
                RatFuncQ.q_power(expo)
                * weight
                * front
                * q_pochhammer(RatFuncQ.q_power(k - j + 1), j)
                / q_pochhammer(RatFuncQ.q_power(1), k + j + 1)
            )
            if j % 2 == 0:
                total = total - term
            else:
                total = total + term
    return total
