"""Eventually-periodic representations of closed subsets of N ∪ {∞}.

Give N ∪ {∞} the topology of the one-point compactification of discrete N:
a subset is closed iff it is a finite subset of N or it contains ∞.  Ordered
by inclusion, the closed sets form a complete lattice (meets are
intersections, finite joins are unions, infinite joins add ∞ when the union
of the natural parts is infinite).

The carrier here is the sublattice of closed sets whose natural part is
eventually periodic: membership of n below ``threshold`` is looked up in
``prefix``, and at or above ``threshold`` it is ``n % period in residues``.
This class of sets is closed under finite unions and intersections, so the
representation supports the full binary lattice structure exactly.

Closedness forces the invariant: a nonempty residue set (infinite natural
part) requires the ∞ flag.

Every constructed value is normalized to the canonical form (minimal period,
then minimal threshold), so structural equality coincides with equality of
the denoted sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ClosednessViolation, ValidationError


@dataclass(frozen=True)
class ClosedSetRep:
    """Canonical eventually-periodic closed subset of N ∪ {∞}."""

    prefix: frozenset = frozenset()
    threshold: int = 0
    period: int = 1
    residues: frozenset = frozenset()
    infinity: bool = False

    def __post_init__(self):
        prefix = frozenset(self.prefix)
        residues = frozenset(self.residues)
        if self.period < 1:
            raise ValidationError(f"period must be >= 1, got {self.period}")
        if self.threshold < 0:
            raise ValidationError(f"threshold must be >= 0, got {self.threshold}")
        if any(n < 0 or n >= self.threshold for n in prefix):
            raise ValidationError("prefix entries must lie in [0, threshold)")
        if any(r < 0 or r >= self.period for r in residues):
            raise ValidationError("residues must lie in [0, period)")
        if residues and not self.infinity:
            raise ClosednessViolation(
                "infinite natural part requires the point at infinity")
        norm = _normal_form(prefix, self.threshold, self.period, residues)
        prefix, threshold, period, residues = norm
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "threshold", threshold)
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "residues", residues)

    def __contains__(self, n: int) -> bool:
        if n < self.threshold:
            return n in self.prefix
        return (n % self.period) in self.residues

    def __repr__(self):
        return f"ClosedSetRep({format_closed_set(self)})"


def _normal_form(prefix, threshold, period, residues):
    """Minimal period, then minimal threshold; empty tail collapses to p=1."""
    if not residues:
        threshold = max(prefix) + 1 if prefix else 0
        return prefix, threshold, 1, frozenset()
    for d in range(1, period + 1):
        if period % d:
            continue
        if all(len({(c + k * d) in residues for k in range(period // d)}) == 1
               for c in range(d)):
            residues = frozenset(c for c in range(d) if c in residues)
            period = d
            break
    while threshold > 0:
        n = threshold - 1
        if (n in prefix) != ((n % period) in residues):
            break
        threshold = n
    prefix = frozenset(n for n in prefix if n < threshold)
    return prefix, threshold, period, residues


def closedset_normalize(rep: ClosedSetRep) -> ClosedSetRep:
    """Canonical form of a representation; idempotent by construction."""
    return ClosedSetRep(rep.prefix, rep.threshold, rep.period, rep.residues,
                        rep.infinity)


def member(rep: ClosedSetRep, n: int) -> bool:
    return n in rep


def _window(a: ClosedSetRep, b: ClosedSetRep):
    t = max(a.threshold, b.threshold)
    span = math.lcm(a.period, b.period)
    return t, span


@lru_cache(maxsize=1 << 16)
def closedset_leq(a: ClosedSetRep, b: ClosedSetRep) -> bool:
    """Subset test on denotations.

    Membership beyond the common threshold is periodic with the lcm of the
    periods, so checking one aligned window decides inclusion exactly.
    """
    if a.infinity and not b.infinity:
        return False
    t, span = _window(a, b)
    return all(n in b for n in range(t + span) if n in a)


def _pointwise(a, b, keep, infinity):
    t, span = _window(a, b)
    prefix = frozenset(n for n in range(t) if keep(n in a, n in b))
    residues = frozenset((t + i) % span for i in range(span)
                         if keep((t + i) in a, (t + i) in b))
    return ClosedSetRep(prefix, t, span, residues, infinity)


@lru_cache(maxsize=1 << 16)
def closedset_join(a: ClosedSetRep, b: ClosedSetRep) -> ClosedSetRep:
    """Union; closed because a finite union of closed sets is closed."""
    return _pointwise(a, b, lambda x, y: x or y, a.infinity or b.infinity)


@lru_cache(maxsize=1 << 16)
def closedset_meet(a: ClosedSetRep, b: ClosedSetRep) -> ClosedSetRep:
    """Intersection; closed sets are stable under arbitrary intersections."""
    return _pointwise(a, b, lambda x, y: x and y, a.infinity and b.infinity)


def closed_set(naturals=(), infinity=False) -> ClosedSetRep:
    """Closed set with a finite natural part."""
    naturals = frozenset(naturals)
    threshold = max(naturals) + 1 if naturals else 0
    return ClosedSetRep(naturals, threshold, 1, frozenset(), infinity)


def periodic_set(residues, period, *, prefix=(), threshold=0,
                 infinity=True) -> ClosedSetRep:
    """Closed set whose natural part is periodic from ``threshold`` on."""
    return ClosedSetRep(frozenset(prefix), threshold, period,
                        frozenset(residues), infinity)


EMPTY = closed_set()
INF_POINT = closed_set(infinity=True)
FULL = periodic_set({0}, 1)
EVENS = periodic_set({0}, 2)
ODDS = periodic_set({1}, 2)


def is_empty(rep: ClosedSetRep) -> bool:
    return not rep.prefix and not rep.residues and not rep.infinity


def natural_part_is_finite(rep: ClosedSetRep) -> bool:
    return not rep.residues


def finite_naturals(rep: ClosedSetRep) -> tuple:
    """The natural part as a sorted tuple; only for finite natural parts."""
    if rep.residues:
        raise ValidationError("natural part is infinite")
    return tuple(sorted(rep.prefix))


def min_natural(rep: ClosedSetRep):
    """Least natural member, or None when the natural part is empty."""
    if rep.prefix:
        return min(rep.prefix)
    if rep.residues:
        return rep.threshold + min((r - rep.threshold) % rep.period
                                   for r in rep.residues)
    return None


def naturals_up_to(rep: ClosedSetRep, n: int) -> list:
    return [m for m in range(n + 1) if m in rep]


def truncate_naturals(rep: ClosedSetRep, n: int) -> ClosedSetRep:
    """The finite closed set {m in rep ∩ N : m <= n}."""
    return closed_set(naturals_up_to(rep, n))


def natural_closure(rep: ClosedSetRep) -> ClosedSetRep:
    """Closure of the natural part: itself if finite, else with ∞ attached.

    This is the supremum of the finite closed subsets of ``rep``'s natural
    part, i.e. the value of the approximation kernel on ``rep``.
    """
    return ClosedSetRep(rep.prefix, rep.threshold, rep.period, rep.residues,
                        bool(rep.residues))


def format_closed_set(rep: ClosedSetRep) -> str:
    if not rep.residues:
        items = [str(n) for n in sorted(rep.prefix)]
        if rep.infinity:
            items.append("inf")
        return "{" + ",".join(items) + "}"
    body = f"mod {rep.period}: {sorted(rep.residues)} from {rep.threshold}"
    if rep.prefix:
        body += f", prefix {sorted(rep.prefix)}"
    body += ", inf"
    return "{" + body + "}"
