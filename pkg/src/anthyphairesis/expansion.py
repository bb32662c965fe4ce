"""Anthyphairesis: quotient sequences for pairs of magnitudes.

For natural numbers this is the Euclidean algorithm with its quotient
trail (finite by descent).  For quadratic surds the remainder-ratio
states (p + sqrt(d))/q are iterated exactly; the first time a state
recurs, two remainder ratios are equal, which forces the quotient tail
to cycle, so the expansion is cut there into preperiod and period.
Equality of ratios is decided by comparing whole expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .surds import QuadraticSurd, SurdState

DEFAULT_MAX_STEPS = 10**6


@dataclass(frozen=True)
class Expansion:
    """Quotients of an anthyphairesis: preperiod plus repeating period.

    An empty period means the expansion terminated (commensurable
    ratio).  Only the first quotient may be 0 (ratio below 1).
    """

    preperiod: tuple[int, ...] = ()
    period: tuple[int, ...] = ()

    @property
    def is_finite(self) -> bool:
        return not self.period

    @property
    def kind(self) -> str:
        return "finite" if self.is_finite else "periodic"

    def terms(self, n: int) -> list[int]:
        """First n quotients; fewer if the expansion is finite and short."""
        out = list(self.preperiod[:n])
        while self.period and len(out) < n:
            out.extend(self.period[: n - len(out)])
        return out

    def __str__(self) -> str:
        pre = ", ".join(map(str, self.preperiod))
        if self.is_finite:
            return f"[{pre}]"
        per = ", ".join(map(str, self.period))
        return f"[{pre}; ({per})]" if pre else f"[; ({per})]"


@dataclass(frozen=True)
class Trace:
    """Remainder-ratio states visited while expanding, one per quotient.

    states[i] is the exact ratio e_{i-1}/e_i whose floor is quotients[i]:
    a SurdState for irrational ratios, a reduced Fraction for rational
    ones.  repeat_at = (m, n) records the first state recurrence
    states[m] == states[n]; it is the witness that the quotients from m
    to n-1 repeat forever.
    """

    quotients: tuple[int, ...]
    states: tuple[SurdState | Fraction, ...]
    repeat_at: tuple[int, int] | None = None

    @property
    def preperiod_length(self) -> int | None:
        return self.repeat_at[0] if self.repeat_at else None

    @property
    def period_length(self) -> int | None:
        return self.repeat_at[1] - self.repeat_at[0] if self.repeat_at else None


def euclid_anth(a: int, b: int) -> tuple[list[int], int]:
    """Quotient sequence and gcd of two positive integers.

    Successive divisions a = k*b + r until the remainder vanishes; the
    last nonzero remainder is the gcd.  A leading 0 appears when a < b.
    """
    if a <= 0 or b <= 0:
        raise ValueError("invalid magnitude: inputs must be positive")
    quotients = []
    while True:
        k, r = divmod(a, b)
        quotients.append(k)
        if r == 0:
            return quotients, b
        a, b = b, r


def _rational_trace(p: int, q: int) -> tuple[Expansion, Trace]:
    quotients, _ = euclid_anth(p, q)
    remainders = [p, q]
    while remainders[-2] % remainders[-1] != 0:
        remainders.append(remainders[-2] % remainders[-1])
    states = tuple(
        Fraction(remainders[i], remainders[i + 1]) for i in range(len(quotients))
    )
    return Expansion(tuple(quotients)), Trace(tuple(quotients), states)


def surd_anth(
    x: QuadraticSurd, max_steps: int = DEFAULT_MAX_STEPS
) -> tuple[Expansion, Trace]:
    """Expand a positive exact value into its anthyphairesis.

    Rational values reduce to euclid_anth of numerator and denominator.
    Irrational values iterate the remainder-ratio recurrence, recording
    each state; the loop stops at the first repeated state (looked up
    exactly), which fixes preperiod and period.  The trace keeps one
    extra quotient at the repeat index, so states and quotients stay
    aligned one-to-one.
    """
    if x.sign() <= 0:
        raise ValueError(f"invalid magnitude: {x} is not positive")
    if x.is_rational:
        f = x.as_fraction()
        return _rational_trace(f.numerator, f.denominator)

    state = SurdState.from_surd(x)
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    states: list[SurdState] = []
    for i in range(max_steps):
        key = (state.p, state.q)
        if key in seen:
            m = seen[key]
            states.append(state)
            quotients.append(state.floor())
            expansion = Expansion(tuple(quotients[:m]), tuple(quotients[m:i]))
            return expansion, Trace(tuple(quotients), tuple(states), (m, i))
        seen[key] = i
        states.append(state)
        k, state = state.step()
        quotients.append(k)
    raise RuntimeError(f"no repeat within {max_steps} steps")


def anth_pair(
    a: QuadraticSurd, b: QuadraticSurd, max_steps: int = DEFAULT_MAX_STEPS
) -> tuple[Expansion, Trace]:
    """Anthyphairesis of a to b, i.e. the expansion of the ratio a/b.

    The first quotient is 0 when a < b; equal magnitudes give [1].
    """
    if a.sign() <= 0 or b.sign() <= 0:
        raise ValueError("invalid magnitude: both inputs must be positive")
    return surd_anth(a / b, max_steps=max_steps)


def is_commensurable(a: QuadraticSurd, b: QuadraticSurd) -> bool:
    """Whether a and b have a common measure (finite anthyphairesis)."""
    if a.sign() <= 0 or b.sign() <= 0:
        raise ValueError("invalid magnitude: both inputs must be positive")
    return (a / b).is_rational


def _primitive_root(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for length in range(1, n + 1):
        if n % length == 0 and word == word[:length] * (n // length):
            return word[:length]
    return word


def canonical_expansion(e: Expansion) -> Expansion:
    """Normal form under sequence equality; idempotent.

    Finite: a trailing quotient 1 merges into its predecessor (the
    [.., k, 1] = [.., k+1] identity), so equal rationals get equal
    expansions.  Periodic: the period shrinks to its primitive root,
    then trailing preperiod entries equal to the period's last entry
    are absorbed by rotating the period, minimizing the preperiod.
    """
    if e.is_finite:
        pre = list(e.preperiod)
        if len(pre) > 1 and pre[-1] == 1:
            pre.pop()
            pre[-1] += 1
        return Expansion(tuple(pre))
    period = _primitive_root(e.period)
    pre = list(e.preperiod)
    while pre and pre[-1] == period[-1]:
        pre.pop()
        period = (period[-1],) + period[:-1]
    return Expansion(tuple(pre), period)


def proportion_eq(
    a: QuadraticSurd, b: QuadraticSurd, c: QuadraticSurd, d: QuadraticSurd
) -> bool:
    """Decide a/b = c/d by comparing the two anthyphaireses.

    Both expansions are brought to canonical form first, so the test is
    plain componentwise equality; for quadratic inputs this decides
    real-number equality of the ratios.
    """
    left, _ = anth_pair(a, b)
    right, _ = anth_pair(c, d)
    return canonical_expansion(left) == canonical_expansion(right)
