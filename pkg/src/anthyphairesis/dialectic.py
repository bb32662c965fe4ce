"""Ratio-state counting over remainder sequences.

A sequence of strictly decreasing remainders has one ratio per adjacent
pair; the dialectic number is the count of *distinct* ratios plus one
(the plus-one rule: terms = adjacent ratios + 1).  A periodic expansion
visits only finitely many remainder-ratio states, so its dialectic
number is finite even though the remainders never run out; the regress
walk below makes that collapse explicit by sampling remainders one
period apart and observing a single ratio class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .expansion import Trace
from .surds import SurdState


class FiniteExpansionError(ValueError):
    """Operation needs a periodic trace but the expansion terminated."""


@dataclass(frozen=True)
class RatioState:
    """One equivalence class of remainder ratios, with a representative."""

    class_id: int
    representative: SurdState | Fraction


def dialectic_number_seq(
    terms: Sequence[int], cycle: Sequence[int] = (), scale: int = 1
) -> int:
    """Distinct successive-term ratios of a sequence, plus one.

    Ratios compare in lowest terms (2/4 counts as 4/8).  ``terms`` alone
    describes a finite sequence.  With ``cycle`` the sequence continues
    forever as cycle, cycle*scale, cycle*scale**2, ...; scale=1 is plain
    repetition of the cycle, scale=2 with cycle=[2] is the doubling
    sequence 2, 4, 8, ...  The ratio set of the infinite tail closes
    after one scaled copy of the cycle: block-internal ratios are scale
    invariant and every block boundary contributes the same ratio, so
    enumerating terms + cycle + cycle*scale is exhaustive.
    """
    seq = list(terms) + list(cycle)
    if not seq:
        raise ValueError("invalid input: empty sequence")
    if any(t <= 0 for t in seq) or scale <= 0:
        raise ValueError("invalid input: terms must be positive")
    seq += [t * scale for t in cycle]
    ratios = {Fraction(seq[i], seq[i + 1]) for i in range(len(seq) - 1)}
    return len(ratios) + 1


def dialectic_number_exp(trace: Trace) -> int:
    """Distinct remainder-ratio states of a trace, plus one.

    The initial ratio counts as a state.  For a periodic trace the
    recorded states already run through one full period plus the repeat,
    so the set is complete; for a finite trace the states are the
    rational successive ratios.
    """
    return len(set(trace.states)) + 1


def ratio_states(trace: Trace) -> list[RatioState]:
    """Each recorded remainder index mapped to its ratio class."""
    ids: dict[SurdState | Fraction, int] = {}
    out = []
    for state in trace.states:
        class_id = ids.setdefault(state, len(ids))
        out.append(RatioState(class_id, state))
    return out


def remainder_classes(trace: Trace, count: int | None = None) -> list[int]:
    """Class ids of the remainder ratios, in order of first appearance.

    For a periodic trace the ids may be extended to any ``count`` via
    the detected cycle (class of index i >= preperiod repeats with the
    period).  A finite trace yields exactly its recorded classes;
    asking for more is an error.
    """
    base = [rs.class_id for rs in ratio_states(trace)]
    if count is None or count <= len(base):
        return base[:count] if count is not None else base
    if trace.repeat_at is None:
        raise FiniteExpansionError(
            "finite anthyphairesis: no cycle to extend the classes with"
        )
    m, n = trace.repeat_at
    length = n - m
    while len(base) < count:
        i = len(base)
        base.append(base[m + (i - m) % length])
    return base


def tma_regress(trace: Trace, n: int) -> list[tuple[int, int]]:
    """Sample remainder indices one period apart, with their class ids.

    Starting at the first in-period remainder, n samples spaced a full
    period apart all land in the same ratio class; the would-be infinite
    regress of ever-smaller remainders is a single class repeated.
    """
    if n < 1:
        raise ValueError("invalid count: need n >= 1")
    if trace.repeat_at is None:
        raise FiniteExpansionError("finite anthyphairesis: nothing recurs")
    m, r = trace.repeat_at
    length = r - m
    last = m + (n - 1) * length
    classes = remainder_classes(trace, count=last + 1)
    return [(m + j * length, classes[m + j * length]) for j in range(n)]
