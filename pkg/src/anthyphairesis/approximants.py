"""Convergents of an expansion and the side-and-diameter numbers.

Convergents follow the continuant recurrence p_k = k_k*p_{k-1} + p_{k-2}
(likewise q), indexed from 0 at the integer part, so adjacent pairs
satisfy p_k*q_{k-1} - p_{k-1}*q_k = (-1)^(k+1).  The side-and-diameter
pairs are the classical integer approximations to the diagonal-to-side
ratio of a square, with d*d - 2*s*s alternating between -1 and +1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expansion import Expansion, canonical_expansion, surd_anth
from .surds import QuadraticSurd, isqrt


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    index: int

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def convergents(e: Expansion, n: int) -> list[Convergent]:
    """First n convergents of an expansion.

    For finite expansions n is clamped to the number of quotients, so
    the last convergent returned equals the exact rational value.
    """
    if n < 1:
        raise ValueError("invalid count: need n >= 1")
    quotients = e.terms(n)
    if not quotients:
        raise ValueError("invalid expansion: no quotients")
    out = []
    p_prev, p_curr = 1, quotients[0]
    q_prev, q_curr = 0, 1
    out.append(Convergent(p_curr, q_curr, 0))
    for i, k in enumerate(quotients[1:], start=1):
        p_prev, p_curr = p_curr, k * p_curr + p_prev
        q_prev, q_curr = q_curr, k * q_curr + q_prev
        out.append(Convergent(p_curr, q_curr, i))
    return out


def side_diameter(n: int) -> list[tuple[int, int]]:
    """First n side-and-diameter pairs from (1, 1).

    s' = s + d, d' = 2s + d; every pair satisfies d*d - 2*s*s = +/-1
    with alternating sign starting at -1.
    """
    if n < 1:
        raise ValueError("invalid count: need n >= 1")
    pairs = [(1, 1)]
    while len(pairs) < n:
        s, d = pairs[-1]
        pairs.append((s + d, 2 * s + d))
    return pairs


def pell_values(e: Expansion, n: int, radicand: int) -> list[int]:
    """p*p - N*q*q over the first n convergents of the expansion of sqrt(N).

    The expansion is checked against a fresh expansion of sqrt(radicand);
    passing anything else is an error.  Every value is bounded by
    2*sqrt(N) + 1 in absolute value.
    """
    r = isqrt(radicand)
    if radicand <= 0 or r * r == radicand:
        raise ValueError(f"invalid input: {radicand} is not a positive nonsquare")
    reference, _ = surd_anth(QuadraticSurd.sqrt(radicand))
    if canonical_expansion(e) != canonical_expansion(reference):
        raise ValueError(f"invalid input: expansion does not match sqrt({radicand})")
    return [c.p * c.p - radicand * c.q * c.q for c in convergents(e, n)]
