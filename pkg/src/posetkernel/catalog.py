"""The poset catalog: finite generators, the ω+1 chain, closed subsets of
N ∪ {∞}, and the lift / disjoint-sum combinators.

Each kind ships *certified* closed-form rules for its order, suprema, and
way-below relation.  Way-below is defined by a quantification over all
directed bounded-above sets, which is undecidable on infinite carriers, so
the rules below are proved here once and machine-refuted (never confirmed)
against the family bank by the oracle module.

Certified rules and why they hold:

ω+1 (naturals below a top point ω)
    m << n  iff m <= n for naturals: any directed set with supremum >= n
    contains its supremum when that supremum is a natural (bounded subsets
    of a chain of naturals are finite), and otherwise is unbounded in the
    naturals or contains ω, so some member dominates m.  m << ω always, by
    the same case split.  ω << y never: the chain 0 < 1 < 2 < ... has
    supremum ω and no member dominating ω.  The poset is a complete chain,
    hence conditionally complete, continuous, and interpolating.

Closed sets of N ∪ {∞} (closed iff finite or containing ∞), by inclusion
    A << B  iff  A is finite, ∞ ∉ A, and A ⊆ B.
    If so: any directed D with sup ⊇ B covers each natural of A by some
    member, and directedness bounds those finitely many members inside D.
    Conversely ∞ ∈ A is killed by the chain {0..n} (supremum N ∪ {∞} ⊇ B
    for every B, no member contains ∞), and an infinite natural part is
    impossible without ∞ (closedness).  Consequences:
        approximants of C = the finite subsets of C ∩ N (always nonempty,
        the empty set approximates everything), so the whole lattice is
        approximable;
        kernel value of C = closure of C ∩ N  (C ∩ N itself if finite,
        else (C ∩ N) ∪ {∞});
        retract membership: ∞ ∈ C implies C ∩ N infinite.
    The lattice is complete but NOT continuous: the approximants of {∞}
    are {∅}, whose supremum ∅ differs from {∞}.
    Interpolation holds with witness A itself: A << A << B, because a
    finite set without ∞ is way-below itself.

Punctured closed sets (the same lattice with ∅ removed)
    A << B additionally requires A nonempty (∅ is gone).  {∞} now has no
    approximants at all, so the approximable part is a proper subset:
    exactly the closed sets with a natural member.  Infima can fail:
    {0} and {1} have no common lower bound.  Still conditionally complete
    (suprema of nonempty families of nonempty sets are nonempty) and
    interpolating (same witness).

Lift (add a fresh bottom ⊥)
    ⊥ << everything (every directed set has a member, and ⊥ is below it);
    inner pairs keep the inner rule, because directed sets in the lift are
    directed sets of the inner poset with ⊥ optionally added, which changes
    neither suprema nor domination of non-bottom elements.  The lift makes
    every element approximable.

Disjoint sum
    Directed sets live inside one component (a cross pair has no upper
    bound), so order, suprema and way-below are all componentwise and cross
    pairs never relate.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from . import closedsets as cs
from .closedsets import (ClosedSetRep, closed_set, closedset_join,
                         closedset_leq, closedset_meet, format_closed_set,
                         is_empty, min_natural, natural_closure,
                         natural_part_is_finite, periodic_set,
                         truncate_naturals)
from .core import (BOTTOM, Inner, Left, NO_INFIMUM, NO_SUPREMUM, OMEGA,
                   FinitePoset, FinitePosetPresentation, PosetPresentation,
                   Right, build_finite_poset, is_element)
from .errors import SizeLimit, UnknownName, ValidationError
from .families import ChainFamily, ExplicitFamily, map_family

MAX_FINITE_SIZE = 16


# ---------------------------------------------------------------------------
# ω + 1


class OmegaPlusOnePresentation(PosetPresentation):
    kind = "omega_plus_one"
    name = "omega_plus_one"
    certified_conditionally_complete = True
    certified_interpolating = True
    certified_continuous = True

    def contains(self, x) -> bool:
        return x is OMEGA or (type(x) is int and x >= 0)

    def leq(self, x, y) -> bool:
        if x is OMEGA:
            return y is OMEGA
        if y is OMEGA:
            return True
        return x <= y

    def finite_sup(self, xs):
        if any(x is OMEGA for x in xs):
            return OMEGA
        return max(xs)

    def finite_inf(self, xs):
        nats = [x for x in xs if x is not OMEGA]
        return min(nats) if nats else OMEGA

    def lower_bound_exists(self, xs):
        return True

    def waybelow(self, x, y) -> bool:
        if x is OMEGA:
            return False
        if y is OMEGA:
            return True
        return x <= y

    def waybelow_family(self, x):
        if x is OMEGA:
            return self._naturals_chain()
        return ExplicitFamily(tuple(range(x + 1)), x, label=f"naturals<= {x}")

    @staticmethod
    def _naturals_chain():
        return ChainFamily(lambda i: i, OMEGA, label="ascending-naturals",
                           member_dominates=lambda v: v is not OMEGA,
                           kernel_image_sup=OMEGA)

    def family_bank(self):
        return [
            self._naturals_chain(),
            ExplicitFamily((0,), 0, label="zero"),
            ExplicitFamily((0, 1, 2, 3), 3, label="small-chain"),
            ExplicitFamily((2, 5, 9), 9, label="sparse-chain"),
            ExplicitFamily((OMEGA,), OMEGA, label="top-singleton"),
            ExplicitFamily((1, 3, OMEGA), OMEGA, label="chain-through-top"),
        ]

    def sample_elements(self, rng, count):
        out = []
        for _ in range(count):
            out.append(OMEGA if rng.random() < 0.15 else rng.randrange(25))
        return out

    def interesting_elements(self):
        return [0, 1, 2, 3, 7, OMEGA]

    def interpolation_witness(self, x, y):
        return x if x is not OMEGA else None

    def format_element(self, x) -> str:
        return "omega" if x is OMEGA else str(x)

    def parse_element(self, literal):
        if literal == "omega":
            return OMEGA
        if isinstance(literal, str) and literal.startswith("nat:"):
            try:
                n = int(literal[4:])
            except ValueError:
                raise ValidationError(f"bad natural literal {literal!r}") from None
            if n < 0:
                raise ValidationError("naturals are non-negative")
            return n
        raise ValidationError(
            f"expected 'omega' or 'nat:<k>', got {literal!r}")


# ---------------------------------------------------------------------------
# Closed subsets of N ∪ {∞}


class ClosedSetsPresentation(PosetPresentation):
    certified_conditionally_complete = True
    certified_interpolating = True
    certified_continuous = False

    def __init__(self, punctured=False):
        self.punctured = punctured
        self.kind = "punctured_closed_sets" if punctured else "closed_sets"
        self.name = self.kind

    def contains(self, x) -> bool:
        if not isinstance(x, ClosedSetRep):
            return False
        return not (self.punctured and is_empty(x))

    def leq(self, x, y) -> bool:
        return closedset_leq(x, y)

    def finite_sup(self, xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = closedset_join(acc, x)
        return acc

    def finite_inf(self, xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = closedset_meet(acc, x)
        if self.punctured and is_empty(acc):
            return NO_INFIMUM
        return acc

    def lower_bound_exists(self, xs):
        if not self.punctured:
            return True
        acc = xs[0]
        for x in xs[1:]:
            acc = closedset_meet(acc, x)
        return not is_empty(acc)

    def waybelow(self, x, y) -> bool:
        if self.punctured and is_empty(x):
            return False
        return (natural_part_is_finite(x) and not x.infinity
                and closedset_leq(x, y))

    def waybelow_family(self, x):
        if self.punctured and min_natural(x) is None:
            return None
        if natural_part_is_finite(x):
            base = closed_set(x.prefix)
            return ExplicitFamily((base,), base, label="natural-part")
        start = min_natural(x)
        sup = natural_closure(x)
        return ChainFamily(
            lambda i: truncate_naturals(x, start + i),
            sup,
            label="finite-truncations",
            member_dominates=lambda v: (natural_part_is_finite(v)
                                        and not v.infinity
                                        and closedset_leq(v, x)),
            kernel_image_sup=sup,
        )

    def family_bank(self):
        initial = ChainFamily(
            lambda i: closed_set(range(i + 1)), cs.FULL,
            label="initial-segments",
            member_dominates=lambda v: (natural_part_is_finite(v)
                                        and not v.infinity),
            kernel_image_sup=cs.FULL)
        evens = ChainFamily(
            lambda i: closed_set(range(0, 2 * i + 1, 2)), cs.EVENS,
            label="even-initial-segments",
            member_dominates=lambda v: (natural_part_is_finite(v)
                                        and not v.infinity
                                        and closedset_leq(v, cs.EVENS)),
            kernel_image_sup=cs.EVENS)
        through_inf = ChainFamily(
            lambda i: closed_set(range(i + 1), infinity=True), cs.FULL,
            label="initial-segments-with-inf",
            member_dominates=natural_part_is_finite,
            kernel_image_sup=cs.FULL)
        families = [
            initial,
            evens,
            through_inf,
            ExplicitFamily((closed_set({1}), closed_set({2}),
                            closed_set({1, 2})),
                           closed_set({1, 2}), label="join-closed-pair"),
            ExplicitFamily((closed_set({0}), closed_set({0, 1}),
                            closed_set({0, 1, 2})),
                           closed_set({0, 1, 2}), label="three-chain"),
            ExplicitFamily((cs.INF_POINT, closed_set({0}, True),
                            closed_set({0, 1}, True)),
                           closed_set({0, 1}, True),
                           label="chain-through-inf"),
            ExplicitFamily((cs.INF_POINT,), cs.INF_POINT,
                           label="inf-singleton"),
        ]
        if not self.punctured:
            families.append(ExplicitFamily(
                (cs.EMPTY, closed_set({1}), closed_set({2}),
                 closed_set({1, 2})),
                closed_set({1, 2}), label="join-closed-with-bottom"))
            families.append(ExplicitFamily((cs.EMPTY,), cs.EMPTY,
                                           label="bottom-singleton"))
        return families

    def sample_elements(self, rng, count):
        out = []
        pool = self.interesting_elements()
        for _ in range(count):
            style = rng.random()
            if style < 0.45:
                size = rng.randint(0, 4)
                nats = frozenset(rng.randrange(12) for _ in range(size))
                rep = closed_set(nats, infinity=rng.random() < 0.35)
            elif style < 0.85:
                p = rng.randint(1, 4)
                rs = frozenset(q for q in range(p) if rng.random() < 0.5)
                if not rs:
                    rs = frozenset({rng.randrange(p)})
                t = rng.randint(0, 4)
                pref = frozenset(m for m in range(t) if rng.random() < 0.4)
                rep = periodic_set(rs, p, prefix=pref, threshold=t)
            else:
                rep = rng.choice(pool)
            if self.punctured and is_empty(rep):
                rep = closed_set({rng.randrange(8)})
            out.append(rep)
        return out

    def interesting_elements(self):
        base = [
            cs.INF_POINT,
            closed_set({0}),
            closed_set({1}),
            closed_set({5}),
            closed_set({0, 1}),
            closed_set({1, 3}),
            closed_set({1, 3}, infinity=True),
            closed_set({0}, infinity=True),
            cs.FULL,
            cs.EVENS,
            cs.ODDS,
            periodic_set({0}, 3),
            periodic_set({2}, 3, prefix={0}, threshold=1),
        ]
        if not self.punctured:
            base.insert(0, cs.EMPTY)
        return base

    def interpolation_witness(self, x, y):
        return x

    def continuity_counterexample(self):
        return cs.INF_POINT

    def format_element(self, x) -> str:
        return format_closed_set(x)

    def parse_element(self, literal):
        rep = parse_closed_set_literal(literal)
        if self.punctured and is_empty(rep):
            raise ValidationError(
                "the punctured lattice does not contain the empty set")
        return rep


def parse_closed_set_literal(literal) -> ClosedSetRep:
    """Closed-set literal: {"finite": [...], "infinity": b} or the full
    prefix/threshold/period/residues/infinity form."""
    if not isinstance(literal, dict):
        raise ValidationError(f"closed-set literal must be an object, "
                              f"got {literal!r}")
    extra = set(literal) - {"finite", "prefix", "threshold", "period",
                            "residues", "infinity"}
    if extra:
        raise ValidationError(f"unknown closed-set fields {sorted(extra)}")
    infinity = bool(literal.get("infinity", False))
    if "finite" in literal:
        nats = literal["finite"]
        if not isinstance(nats, list) or not all(
                isinstance(n, int) and n >= 0 for n in nats):
            raise ValidationError("'finite' must be a list of naturals")
        return closed_set(nats, infinity=infinity)
    try:
        return ClosedSetRep(frozenset(literal.get("prefix", [])),
                            literal.get("threshold", 0),
                            literal.get("period", 1),
                            frozenset(literal.get("residues", [])),
                            infinity)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad closed-set literal: {exc}") from None


def closed_set_to_literal(rep: ClosedSetRep) -> dict:
    if natural_part_is_finite(rep):
        return {"finite": sorted(rep.prefix), "infinity": rep.infinity}
    return {"prefix": sorted(rep.prefix), "threshold": rep.threshold,
            "period": rep.period, "residues": sorted(rep.residues),
            "infinity": rep.infinity}


# ---------------------------------------------------------------------------
# Lift: a fresh bottom below an inner poset


class LiftPresentation(PosetPresentation):
    kind = "lift"

    def __init__(self, inner: PosetPresentation):
        self.inner = inner
        self.name = f"lift({inner.name})"
        self.is_finite_kind = inner.is_finite_kind
        self.certified_conditionally_complete = \
            inner.certified_conditionally_complete
        self.certified_interpolating = inner.certified_interpolating
        self.certified_continuous = inner.certified_continuous

    def contains(self, x) -> bool:
        if x is BOTTOM:
            return True
        return isinstance(x, Inner) and self.inner.contains(x.value)

    def elements(self):
        return [BOTTOM] + [Inner(e) for e in self.inner.elements()]

    def leq(self, x, y) -> bool:
        if x is BOTTOM:
            return True
        if y is BOTTOM:
            return False
        return self.inner.leq(x.value, y.value)

    def finite_sup(self, xs):
        proper = [x.value for x in xs if x is not BOTTOM]
        if not proper:
            return BOTTOM
        s = self.inner.finite_sup(tuple(proper))
        return Inner(s) if is_element(s) else s

    def finite_inf(self, xs):
        if any(x is BOTTOM for x in xs):
            return BOTTOM
        vals = tuple(x.value for x in xs)
        g = self.inner.finite_inf(vals)
        if is_element(g):
            return Inner(g)
        if g is NO_INFIMUM:
            exists = self.inner.lower_bound_exists(vals)
            if exists is False:
                return BOTTOM
            if exists is True:
                return NO_INFIMUM
        return g

    def lower_bound_exists(self, xs):
        return True

    def waybelow(self, x, y) -> bool:
        if x is BOTTOM:
            return True
        if y is BOTTOM:
            return False
        return self.inner.waybelow(x.value, y.value)

    def waybelow_family(self, x):
        if x is BOTTOM:
            return ExplicitFamily((BOTTOM,), BOTTOM, label="bottom")
        fam = self.inner.waybelow_family(x.value)
        if fam is None:
            return ExplicitFamily((BOTTOM,), BOTTOM, label="bottom-only")
        if isinstance(fam, ExplicitFamily):
            return ExplicitFamily((BOTTOM,) + tuple(Inner(m) for m in fam.members),
                                  Inner(fam.supremum), label=fam.label)
        return self._lift_chain(fam)

    @staticmethod
    def _lift_chain(fam: ChainFamily) -> ChainFamily:
        inner_dom = fam.member_dominates

        def dominates(x):
            if x is BOTTOM:
                return True
            return inner_dom(x.value)

        return map_family(
            fam, Inner,
            dominates=dominates if inner_dom is not None else None,
            image_sup=(Inner(fam.kernel_image_sup)
                       if fam.kernel_image_sup is not None else None))

    def family_bank(self):
        bank = [ExplicitFamily((BOTTOM,), BOTTOM, label="bottom-singleton")]
        for fam in self.inner.family_bank():
            if isinstance(fam, ExplicitFamily):
                bank.append(ExplicitFamily(
                    tuple(Inner(m) for m in fam.members),
                    Inner(fam.supremum), label=f"lifted:{fam.label}"))
            else:
                bank.append(self._lift_chain(fam))
        anchors = self.inner.interesting_elements()
        if anchors:
            bank.append(ExplicitFamily((BOTTOM, Inner(anchors[0])),
                                       Inner(anchors[0]),
                                       label="bottom-and-anchor"))
        return bank

    def sample_elements(self, rng, count):
        out = []
        for v in self.inner.sample_elements(rng, count):
            out.append(BOTTOM if rng.random() < 0.12 else Inner(v))
        return out

    def interesting_elements(self):
        return [BOTTOM] + [Inner(e) for e in self.inner.interesting_elements()]

    def interpolation_witness(self, x, y):
        if x is BOTTOM:
            return BOTTOM
        z = self.inner.interpolation_witness(x.value, y.value)
        return Inner(z) if z is not None else None

    def continuity_counterexample(self):
        ce = self.inner.continuity_counterexample()
        return Inner(ce) if ce is not None else None

    def format_element(self, x) -> str:
        if x is BOTTOM:
            return "bottom"
        return f"inner:{self.inner.format_element(x.value)}"

    def parse_element(self, literal):
        if literal == "bottom" or literal == {"bottom": True}:
            return BOTTOM
        if isinstance(literal, dict) and set(literal) == {"inner"}:
            return Inner(self.inner.parse_element(literal["inner"]))
        raise ValidationError(
            "lift element literal is 'bottom' or {\"inner\": ...}")


# ---------------------------------------------------------------------------
# Disjoint sum


class DisjointSumPresentation(PosetPresentation):
    kind = "disjoint_sum"

    def __init__(self, left: PosetPresentation, right: PosetPresentation):
        self.left = left
        self.right = right
        self.name = f"disjoint_sum({left.name}, {right.name})"
        self.is_finite_kind = left.is_finite_kind and right.is_finite_kind
        self.certified_conditionally_complete = (
            left.certified_conditionally_complete
            and right.certified_conditionally_complete)
        self.certified_interpolating = (left.certified_interpolating
                                        and right.certified_interpolating)
        if left.certified_continuous is False or \
                right.certified_continuous is False:
            self.certified_continuous = False
        elif left.certified_continuous and right.certified_continuous:
            self.certified_continuous = True
        else:
            self.certified_continuous = None

    def _side(self, x):
        if isinstance(x, Left):
            return self.left, x.value, Left
        return self.right, x.value, Right

    def contains(self, x) -> bool:
        if isinstance(x, Left):
            return self.left.contains(x.value)
        if isinstance(x, Right):
            return self.right.contains(x.value)
        return False

    def elements(self):
        return ([Left(e) for e in self.left.elements()]
                + [Right(e) for e in self.right.elements()])

    def leq(self, x, y) -> bool:
        if type(x) is not type(y):
            return False
        comp, xv, _ = self._side(x)
        return comp.leq(xv, y.value)

    def _same_side(self, xs):
        if all(isinstance(x, Left) for x in xs):
            return self.left, tuple(x.value for x in xs), Left
        if all(isinstance(x, Right) for x in xs):
            return self.right, tuple(x.value for x in xs), Right
        return None

    def finite_sup(self, xs):
        side = self._same_side(xs)
        if side is None:
            return NO_SUPREMUM
        comp, vals, wrap = side
        s = comp.finite_sup(vals)
        return wrap(s) if is_element(s) else s

    def finite_inf(self, xs):
        side = self._same_side(xs)
        if side is None:
            return NO_INFIMUM
        comp, vals, wrap = side
        g = comp.finite_inf(vals)
        return wrap(g) if is_element(g) else g

    def lower_bound_exists(self, xs):
        side = self._same_side(xs)
        if side is None:
            return False
        comp, vals, _ = side
        return comp.lower_bound_exists(vals)

    def waybelow(self, x, y) -> bool:
        if type(x) is not type(y):
            return False
        comp, xv, _ = self._side(x)
        return comp.waybelow(xv, y.value)

    def waybelow_family(self, x):
        comp, xv, wrap = self._side(x)
        fam = comp.waybelow_family(xv)
        if fam is None:
            return None
        return self._wrap_family(fam, wrap)

    @staticmethod
    def _wrap_family(fam, wrap):
        if isinstance(fam, ExplicitFamily):
            return ExplicitFamily(tuple(wrap(m) for m in fam.members),
                                  wrap(fam.supremum), label=fam.label)
        inner_dom = fam.member_dominates

        def dominates(x):
            return isinstance(x, wrap) and inner_dom(x.value)

        return map_family(
            fam, wrap,
            dominates=dominates if inner_dom is not None else None,
            image_sup=(wrap(fam.kernel_image_sup)
                       if fam.kernel_image_sup is not None else None))

    def family_bank(self):
        bank = [self._wrap_family(f, Left) for f in self.left.family_bank()]
        bank += [self._wrap_family(f, Right) for f in self.right.family_bank()]
        return bank

    def sample_elements(self, rng, count):
        lefts = self.left.sample_elements(rng, (count + 1) // 2)
        rights = self.right.sample_elements(rng, count // 2)
        out = []
        for i in range(count):
            if i % 2 == 0 and lefts:
                out.append(Left(lefts.pop()))
            elif rights:
                out.append(Right(rights.pop()))
            elif lefts:
                out.append(Left(lefts.pop()))
        return out

    def interesting_elements(self):
        return ([Left(e) for e in self.left.interesting_elements()]
                + [Right(e) for e in self.right.interesting_elements()])

    def interpolation_witness(self, x, y):
        comp, xv, wrap = self._side(x)
        z = comp.interpolation_witness(xv, y.value)
        return wrap(z) if z is not None else None

    def continuity_counterexample(self):
        ce = self.left.continuity_counterexample()
        if ce is not None:
            return Left(ce)
        ce = self.right.continuity_counterexample()
        return Right(ce) if ce is not None else None

    def format_element(self, x) -> str:
        comp, xv, _ = self._side(x)
        side = "left" if isinstance(x, Left) else "right"
        return f"{side}:{comp.format_element(xv)}"

    def parse_element(self, literal):
        if isinstance(literal, dict) and set(literal) == {"left"}:
            return Left(self.left.parse_element(literal["left"]))
        if isinstance(literal, dict) and set(literal) == {"right"}:
            return Right(self.right.parse_element(literal["right"]))
        raise ValidationError(
            "sum element literal is {\"left\": ...} or {\"right\": ...}")


# ---------------------------------------------------------------------------
# Named and random finite posets


def _chain(k):
    names = [str(i) for i in range(k)]
    return names, [(str(i), str(i + 1)) for i in range(k - 1)]


def _antichain(k):
    return [f"a{i}" for i in range(k)], []


def _boolean_3():
    atoms = "xyz"
    names = []
    for mask in range(8):
        label = "".join(atoms[i] for i in range(3) if (mask >> i) & 1)
        names.append(label or "0")
    covers = []
    for mask in range(8):
        for i in range(3):
            if not (mask >> i) & 1:
                covers.append((names[mask], names[mask | (1 << i)]))
    return names, covers


_FIXED_NAMED = {
    "diamond": (["a", "b", "c", "d"],
                [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]),
    "m3": (["0", "a", "b", "c", "1"],
           [("0", "a"), ("0", "b"), ("0", "c"),
            ("a", "1"), ("b", "1"), ("c", "1")]),
    "n5": (["0", "a", "b", "c", "1"],
           [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]),
    "fence_4": (["a", "b", "c", "d"], [("a", "b"), ("c", "b"), ("c", "d")]),
}


def named_finite_poset(name: str) -> FinitePoset:
    """Fixture posets: chain_k, antichain_k, diamond, m3, n5, boolean_3,
    fence_4."""
    if name in _FIXED_NAMED:
        names, covers = _FIXED_NAMED[name]
    elif name == "boolean_3":
        names, covers = _boolean_3()
    elif m := re.fullmatch(r"chain_(\d+)", name):
        k = int(m.group(1))
        if not 1 <= k <= MAX_FINITE_SIZE:
            raise SizeLimit(f"chain size must be 1..{MAX_FINITE_SIZE}")
        names, covers = _chain(k)
    elif m := re.fullmatch(r"antichain_(\d+)", name):
        k = int(m.group(1))
        if not 1 <= k <= MAX_FINITE_SIZE:
            raise SizeLimit(f"antichain size must be 1..{MAX_FINITE_SIZE}")
        names, covers = _antichain(k)
    else:
        raise UnknownName(f"no catalog poset named {name!r}")
    return build_finite_poset(names, covers)


def random_finite_poset(n: int, edge_prob: float, seed: int) -> FinitePoset:
    """Random order: a DAG by edge probability on a topological order,
    closed reflexively and transitively."""
    if not 1 <= n <= MAX_FINITE_SIZE:
        raise SizeLimit(f"random poset size must be 1..{MAX_FINITE_SIZE}")
    rng = random.Random(seed)
    names = [f"x{i}" for i in range(n)]
    covers = [(names[i], names[j])
              for i in range(n) for j in range(i + 1, n)
              if rng.random() < edge_prob]
    return build_finite_poset(names, covers)


# ---------------------------------------------------------------------------
# Specs and the catalog constructor


@dataclass(frozen=True)
class CatalogSpec:
    """Serializable description of a catalog presentation."""

    kind: str
    name: str | None = None
    n: int = 0
    edge_prob: float = 0.3
    seed: int = 0
    elements: tuple = ()
    covers: tuple = ()
    inner: "CatalogSpec | None" = None
    left: "CatalogSpec | None" = None
    right: "CatalogSpec | None" = None


def finite_named(name: str) -> CatalogSpec:
    return CatalogSpec("finite_named", name=name)


def finite_random(n: int, edge_prob: float = 0.3, seed: int = 0) -> CatalogSpec:
    return CatalogSpec("finite_random", n=n, edge_prob=edge_prob, seed=seed)


def finite_explicit(elements, covers) -> CatalogSpec:
    return CatalogSpec("finite_explicit", elements=tuple(elements),
                       covers=tuple((a, b) for a, b in covers))


def omega_plus_one() -> CatalogSpec:
    return CatalogSpec("omega_plus_one")


def closed_sets() -> CatalogSpec:
    return CatalogSpec("closed_sets")


def punctured_closed_sets() -> CatalogSpec:
    return CatalogSpec("punctured_closed_sets")


def lift(inner: CatalogSpec) -> CatalogSpec:
    return CatalogSpec("lift", inner=inner)


def disjoint_sum(left: CatalogSpec, right: CatalogSpec) -> CatalogSpec:
    return CatalogSpec("disjoint_sum", left=left, right=right)


def make_catalog(spec: CatalogSpec) -> PosetPresentation:
    """Build the presentation described by the spec."""
    if spec.kind == "finite_named":
        return FinitePosetPresentation(named_finite_poset(spec.name),
                                       name=spec.name)
    if spec.kind == "finite_random":
        fp = random_finite_poset(spec.n, spec.edge_prob, spec.seed)
        return FinitePosetPresentation(
            fp, name=f"random(n={spec.n},seed={spec.seed})")
    if spec.kind == "finite_explicit":
        fp = build_finite_poset(spec.elements, spec.covers)
        return FinitePosetPresentation(fp, name="finite")
    if spec.kind == "omega_plus_one":
        return OmegaPlusOnePresentation()
    if spec.kind == "closed_sets":
        return ClosedSetsPresentation(punctured=False)
    if spec.kind == "punctured_closed_sets":
        return ClosedSetsPresentation(punctured=True)
    if spec.kind == "lift":
        return LiftPresentation(make_catalog(spec.inner))
    if spec.kind == "disjoint_sum":
        return DisjointSumPresentation(make_catalog(spec.left),
                                       make_catalog(spec.right))
    raise UnknownName(f"unknown catalog kind {spec.kind!r}")


NAMED_FINITE_ROSTER = ("chain_2", "chain_3", "chain_4", "diamond", "m3", "n5",
                       "boolean_3", "fence_4", "antichain_2", "antichain_3")


def standard_roster() -> list:
    """The curated catalog the acceptance checks run over."""
    specs = [finite_named(name) for name in NAMED_FINITE_ROSTER]
    specs += [
        omega_plus_one(),
        closed_sets(),
        punctured_closed_sets(),
        lift(punctured_closed_sets()),
        disjoint_sum(finite_named("chain_2"), finite_named("chain_2")),
        disjoint_sum(omega_plus_one(), closed_sets()),
    ]
    return [make_catalog(s) for s in specs]
