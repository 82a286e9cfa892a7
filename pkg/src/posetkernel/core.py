"""Poset presentations, finite posets, and checkers for the order axioms.

A *presentation* packages a carrier with a decidable order, partial finite
suprema/infima, a way-below decision certified per kind, per-element
approximant families, and a bank of directed families with known suprema.
Symbolic carriers (the infinite catalog kinds) answer way-below queries by a
closed-form rule documented with the kind; the oracle module can refute such
rules against the family bank but never confirm them, which is why sampled
checks report Unrefuted rather than Verified.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .errors import (CycleDetected, DuplicateLabel, EmptyFamily,
                     ForeignElement, PosetError, ScopeUnsupported, SizeLimit,
                     ValidationError)
from .families import ChainFamily, ExplicitFamily, Family
from .reports import (EXHAUSTIVE, CheckReport, Scope, refuted, sampled,
                      unknown, unrefuted, verified)

# ---------------------------------------------------------------------------
# Outcome sentinels for partial suprema / infima


class _Outcome:
    __slots__ = ("_name",)

    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name


NO_SUPREMUM = _Outcome("NoSupremum")
NO_INFIMUM = _Outcome("NoInfimum")
NOT_REPRESENTABLE = _Outcome("NotRepresentable")


def is_element(value) -> bool:
    """False for the NoSupremum / NoInfimum / NotRepresentable outcomes."""
    return not isinstance(value, _Outcome)


# ---------------------------------------------------------------------------
# Element payloads for the symbolic kinds


class _Top:
    """The point ω above all naturals in the ω+1 chain."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "omega"


OMEGA = _Top()


class _LiftBottom:
    """The fresh least element added by the lift combinator."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "bottom"


BOTTOM = _LiftBottom()


@dataclass(frozen=True)
class Inner:
    """A non-bottom element of a lifted poset."""

    value: object


@dataclass(frozen=True)
class Left:
    value: object


@dataclass(frozen=True)
class Right:
    value: object


# ---------------------------------------------------------------------------
# Finite posets


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """An explicit finite order, stored as bitmask rows of the relation.

    ``up[i]`` has bit j set iff element i is below element j.  The relation
    is validated to be reflexive, antisymmetric and transitive at
    construction time.
    """

    __slots__ = ("n", "names", "up", "down", "__dict__")

    def __init__(self, names, up):
        names = tuple(names)
        up = tuple(up)
        n = len(names)
        if len(set(names)) != n:
            raise DuplicateLabel("element labels must be distinct")
        if len(up) != n:
            raise ValidationError("relation rows must match the label count")
        full = (1 << n) - 1
        for i in range(n):
            if up[i] & ~full:
                raise ValidationError("relation row mentions unknown elements")
            if not (up[i] >> i) & 1:
                raise ValidationError("order must be reflexive")
        for i in range(n):
            for j in _bits(up[i]):
                if i != j and (up[j] >> i) & 1:
                    raise CycleDetected(
                        f"{names[i]!r} and {names[j]!r} are mutually below "
                        "each other")
                if up[j] & ~up[i]:
                    raise ValidationError("order must be transitive")
        self.n = n
        self.names = names
        self.up = up
        down = [0] * n
        for i in range(n):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        self.down = tuple(down)

    def leq(self, i, j) -> bool:
        return bool((self.up[i] >> j) & 1)

    def index_of(self, name) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ForeignElement(f"unknown element label {name!r}") from None

    def lub_of_mask(self, mask):
        """Least upper bound of the elements in ``mask``, or None."""
        ubs = (1 << self.n) - 1
        for i in _bits(mask):
            ubs &= self.up[i]
        for u in _bits(ubs):
            if ubs & ~self.up[u] == 0:
                return u
        return None

    def glb_of_mask(self, mask):
        lbs = (1 << self.n) - 1
        for i in _bits(mask):
            lbs &= self.down[i]
        for v in _bits(lbs):
            if lbs & ~self.down[v] == 0:
                return v
        return None

    @cached_property
    def directed_subset_masks(self):
        """All directed subsets as (mask, max_element) pairs.

        Every finite directed set contains its own maximum, which is
        therefore its supremum; the maximum is computed and checked here
        rather than assumed.
        """
        if self.n > 16:
            raise SizeLimit(f"directed-subset enumeration capped at 16 "
                            f"elements, poset has {self.n}")
        out = []
        up = self.up
        for mask in range(1, 1 << self.n):
            members = list(_bits(mask))
            if all(mask & up[i] & up[j] for i in members for j in members):
                top = next(i for i in members if mask & ~self.down[i] == 0)
                out.append((mask, top))
        return out

    def hasse_edges(self):
        """Cover pairs (i, j): the transitive reduction of the strict order."""
        edges = []
        for i in range(self.n):
            strict = self.up[i] & ~(1 << i)
            for j in _bits(strict):
                between = strict & self.down[j] & ~(1 << j)
                if between == 0:
                    edges.append((i, j))
        return edges


def build_finite_poset(names, covers) -> FinitePoset:
    """Finite poset from labels and cover pairs; order is the
    reflexive-transitive closure of the covers."""
    names = tuple(names)
    if len(set(names)) != len(names):
        raise DuplicateLabel("element labels must be distinct")
    index = {a: i for i, a in enumerate(names)}
    n = len(names)
    up = [1 << i for i in range(n)]
    for a, b in covers:
        if a not in index or b not in index:
            raise ForeignElement(f"cover ({a!r}, {b!r}) mentions an unknown label")
        if a == b:
            raise CycleDetected(f"cover ({a!r}, {b!r}) asserts {a!r} < {a!r}")
        up[index[a]] |= 1 << index[b]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in _bits(acc):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    for i in range(n):
        for j in _bits(up[i]):
            if i != j and (up[j] >> i) & 1:
                raise CycleDetected(
                    f"covers induce a cycle through {names[i]!r} and {names[j]!r}")
    return FinitePoset(names, up)


# ---------------------------------------------------------------------------
# Presentation interface


class PosetPresentation:
    """Capability bundle for one poset carrier.

    Subclasses fix a kind tag, the decidable order, partial suprema and
    infima on finite element sets, the certified way-below rule, per-element
    approximant families, and a curated family bank.  All presentations are
    immutable after construction and every operation is pure.
    """

    kind = "abstract"
    name = "poset"
    is_finite_kind = False
    certified_conditionally_complete = False
    certified_interpolating = False
    certified_continuous = None  # True, False, or None when unknown

    # -- carrier -------------------------------------------------------

    def contains(self, x) -> bool:
        raise NotImplementedError

    def require(self, x):
        if not self.contains(x):
            raise ForeignElement(
                f"{self.format_element_safe(x)} is not an element of {self.name}")
        return x

    def elements(self) -> list:
        raise ScopeUnsupported(f"{self.name} has no element enumeration")

    # -- order ---------------------------------------------------------

    def leq(self, x, y) -> bool:
        raise NotImplementedError

    def finite_sup(self, xs):
        raise NotImplementedError

    def finite_inf(self, xs):
        raise NotImplementedError

    def lower_bound_exists(self, xs):
        """True/False when decidable for the kind, else None."""
        return None

    def chain_sup(self, chain: ChainFamily):
        """The declared supremum of a symbolic chain, after probing that it
        dominates the sampled members."""
        for m in chain.sample_members():
            if not self.leq(m, chain.supremum):
                raise PosetError(
                    f"declared supremum of chain {chain.label!r} does not "
                    f"dominate a sampled member")
        return chain.supremum

    # -- way-below -----------------------------------------------------

    def waybelow(self, x, y) -> bool:
        raise NotImplementedError

    def waybelow_family(self, x) -> Family | None:
        """A directed family cofinal in the approximants of x, with its
        supremum declared; None exactly when x has no approximants."""
        raise NotImplementedError

    def family_bank(self) -> list:
        return []

    # -- sampling and presentation-specific extras ----------------------

    def sample_elements(self, rng, count) -> list:
        raise ScopeUnsupported(f"{self.name} cannot sample elements")

    def interesting_elements(self) -> list:
        return []

    def interpolation_witness(self, x, y):
        """An element z with x << z << y, when the kind has a closed form."""
        return None

    def continuity_counterexample(self):
        """A certified witness that the poset is not continuous, if any."""
        return None

    def format_element(self, x) -> str:
        return repr(x)

    def format_element_safe(self, x) -> str:
        try:
            return self.format_element(x)
        except Exception:
            return repr(x)

    def parse_element(self, literal):
        raise ValidationError(f"{self.name} has no element literal syntax")


class FinitePosetPresentation(PosetPresentation):
    """Presentation of an explicit finite poset; elements are indices.

    On a finite carrier every directed set contains its maximum, so the
    way-below relation coincides with the order.  That closed form is used
    here; the oracle module recomputes way-below definitionally and the test
    suite holds the two against each other.
    """

    kind = "finite"
    is_finite_kind = True
    certified_interpolating = True
    certified_continuous = True

    def __init__(self, poset: FinitePoset, name="finite"):
        self.poset = poset
        self.name = name

    def contains(self, x) -> bool:
        return type(x) is int and 0 <= x < self.poset.n

    def elements(self):
        return list(range(self.poset.n))

    def leq(self, x, y) -> bool:
        return self.poset.leq(x, y)

    def _mask(self, xs) -> int:
        mask = 0
        for x in xs:
            mask |= 1 << x
        return mask

    def finite_sup(self, xs):
        u = self.poset.lub_of_mask(self._mask(xs))
        return NO_SUPREMUM if u is None else u

    def finite_inf(self, xs):
        v = self.poset.glb_of_mask(self._mask(xs))
        return NO_INFIMUM if v is None else v

    def lower_bound_exists(self, xs):
        lbs = (1 << self.poset.n) - 1
        for x in xs:
            lbs &= self.poset.down[x]
        return lbs != 0

    def waybelow(self, x, y) -> bool:
        return self.poset.leq(x, y)

    def waybelow_family(self, x):
        members = tuple(i for i in range(self.poset.n) if self.poset.leq(i, x))
        return ExplicitFamily(members, x,
                              label=f"down-set({self.poset.names[x]})")

    @cached_property
    def _bank(self):
        n = self.poset.n
        if n <= 10:
            masks = self.poset.directed_subset_masks
        else:
            rng = random.Random(0xD1CE)
            seen = {}
            for mask, top in self.poset.directed_subset_masks:
                seen[mask] = top
            picks = rng.sample(sorted(seen), min(len(seen), 2048))
            masks = [(m, seen[m]) for m in picks]
        return [ExplicitFamily(tuple(_bits(mask)), top)
                for mask, top in masks]

    def family_bank(self):
        return self._bank

    @cached_property
    def certified_conditionally_complete(self):
        n = self.poset.n
        if n > 16:
            return False
        for mask in range(1, 1 << n):
            ubs = (1 << n) - 1
            for i in _bits(mask):
                ubs &= self.poset.up[i]
            if ubs and self.poset.lub_of_mask(mask) is None:
                return False
        return True

    def sample_elements(self, rng, count):
        return [rng.randrange(self.poset.n) for _ in range(count)]

    def interesting_elements(self):
        return list(range(self.poset.n))

    def interpolation_witness(self, x, y):
        return x

    def format_element(self, x) -> str:
        return str(self.poset.names[x])

    def parse_element(self, literal):
        if not isinstance(literal, str):
            raise ValidationError(f"finite element literals are labels, "
                                  f"got {literal!r}")
        try:
            return self.poset.index_of(literal)
        except ForeignElement as exc:
            raise ValidationError(str(exc)) from None


class SubsetView(PosetPresentation):
    """A subset of a parent poset with order and way-below inherited.

    Whether the inherited way-below really is the way-below of the subset is
    exactly the subposet law; ``check_axiom`` tests it rather than assuming
    it.  Suprema are taken in the parent; when the parent supremum falls
    outside the subset the view reports NotRepresentable instead of
    searching (finite parents fall back to an exhaustive scan).
    """

    kind = "subset_view"

    def __init__(self, parent: PosetPresentation, member, name=None):
        self.parent = parent
        self._member = member
        self.name = name or f"subset({parent.name})"
        self.is_finite_kind = parent.is_finite_kind

    def contains(self, x) -> bool:
        return self.parent.contains(x) and self._member(x)

    def elements(self):
        return [e for e in self.parent.elements() if self._member(e)]

    def leq(self, x, y) -> bool:
        return self.parent.leq(x, y)

    def finite_sup(self, xs):
        s = self.parent.finite_sup(xs)
        if not is_element(s) or self._member(s):
            return s
        if self.is_finite_kind:
            ubs = [u for u in self.elements()
                   if all(self.parent.leq(x, u) for x in xs)]
            for u in ubs:
                if all(self.parent.leq(u, v) for v in ubs):
                    return u
            return NO_SUPREMUM
        return NOT_REPRESENTABLE

    def finite_inf(self, xs):
        g = self.parent.finite_inf(xs)
        if not is_element(g) or self._member(g):
            return g
        if self.is_finite_kind:
            lbs = [u for u in self.elements()
                   if all(self.parent.leq(u, x) for x in xs)]
            for u in lbs:
                if all(self.parent.leq(v, u) for v in lbs):
                    return u
            return NO_INFIMUM
        return NOT_REPRESENTABLE

    def waybelow(self, x, y) -> bool:
        return self.parent.waybelow(x, y)

    def waybelow_family(self, x):
        fam = self.parent.waybelow_family(x)
        if fam is None:
            return None
        if isinstance(fam, ExplicitFamily):
            members = tuple(m for m in fam.members if self._member(m))
            if not members:
                return None
            return ExplicitFamily(members, fam.supremum, label=fam.label)
        return fam

    def family_bank(self):
        kept = []
        for fam in self.parent.family_bank():
            if not self._member(fam.supremum):
                continue
            if all(self._member(m) for m in fam.sample_members()):
                kept.append(fam)
        return kept

    def sample_elements(self, rng, count):
        out = []
        budget = count * 8
        while len(out) < count and budget:
            budget -= 1
            for e in self.parent.sample_elements(rng, 1):
                if self._member(e):
                    out.append(e)
        return out

    def interesting_elements(self):
        return [e for e in self.parent.interesting_elements()
                if self._member(e)]

    def interpolation_witness(self, x, y):
        z = self.parent.interpolation_witness(x, y)
        if z is not None and self._member(z):
            return z
        return None

    def format_element(self, x) -> str:
        return self.parent.format_element(x)

    def parse_element(self, literal):
        return self.parent.parse_element(literal)


# ---------------------------------------------------------------------------
# Core operations


def leq(P: PosetPresentation, x, y) -> bool:
    """Decide the order of the presentation."""
    P.require(x)
    P.require(y)
    return P.leq(x, y)


def least_upper_bound(P: PosetPresentation, elems):
    """Supremum of a nonempty finite element set, when it exists and is
    representable; NO_SUPREMUM / NOT_REPRESENTABLE otherwise."""
    elems = tuple(elems)
    if not elems:
        raise EmptyFamily("least_upper_bound needs a nonempty set")
    for e in elems:
        P.require(e)
    return P.finite_sup(elems)


def greatest_lower_bound(P: PosetPresentation, elems):
    elems = tuple(elems)
    if not elems:
        raise EmptyFamily("greatest_lower_bound needs a nonempty set")
    for e in elems:
        P.require(e)
    return P.finite_inf(elems)


def is_directed(P: PosetPresentation, family) -> bool:
    """Whether every pair of members has an upper bound inside the set.

    Accepts an ExplicitFamily or any iterable of elements.
    """
    members = list(family.members) if isinstance(family, ExplicitFamily) \
        else list(family)
    if not members:
        raise EmptyFamily("directedness is defined for nonempty sets")
    for m in members:
        P.require(m)
    return all(any(P.leq(a, c) and P.leq(b, c) for c in members)
               for a in members for b in members)


def waybelow(P: PosetPresentation, x, y) -> bool:
    """The certified way-below decision of the presentation kind."""
    P.require(x)
    P.require(y)
    return P.waybelow(x, y)


def is_approximable(P: PosetPresentation, x) -> bool:
    """Whether something is way-below x (x has a nonempty approximant set)."""
    P.require(x)
    return P.waybelow_family(x) is not None


def approximants_family(P: PosetPresentation, x):
    """The kind's cofinal directed family inside the approximants of x."""
    P.require(x)
    return P.waybelow_family(x)


def family_dominates(P: PosetPresentation, fam, x):
    """Does some member of the family dominate x?  True / False / None.

    Explicit families are decided exactly.  For chains, a sampled member
    dominating x settles True; otherwise the chain's domination certificate
    decides, or ``x`` not being below the declared supremum certifies False.
    Without any of these the question is left open (None) - a scan to the
    horizon must not masquerade as a negative answer.
    """
    if isinstance(fam, ExplicitFamily):
        return any(P.leq(x, m) for m in fam.members)
    if any(P.leq(x, m) for m in fam.sample_members()):
        return True
    if fam.member_dominates is not None:
        return bool(fam.member_dominates(x))
    if not P.leq(x, fam.supremum):
        return False
    return None


# ---------------------------------------------------------------------------
# Axiom checks

LAW_ALIASES = {
    "cc": "conditionally_complete",
    "conditionally_complete": "conditionally_complete",
    "interpolation": "interpolating",
    "interpolating": "interpolating",
    "continuity": "continuous",
    "continuous": "continuous",
    "subposet": "subposet",
}


def sample_pool(P: PosetPresentation, rng, count) -> list:
    """Deterministic element pool: the kind's interesting elements first,
    then random samples, de-duplicated."""
    pool = list(P.interesting_elements())
    pool.extend(P.sample_elements(rng, count))
    return list(dict.fromkeys(pool))


def default_scope(P: PosetPresentation) -> Scope:
    return EXHAUSTIVE if P.is_finite_kind else sampled()


def check_axiom(P: PosetPresentation, law: str, scope: Scope | None = None,
                view: PosetPresentation | None = None) -> CheckReport:
    """Check one of the order axioms on the presentation.

    ``law`` is one of conditionally_complete, interpolating, continuous, or
    subposet (the latter needs ``view``, the subset whose way-below must
    agree with the ambient one).
    """
    try:
        law = LAW_ALIASES[law]
    except KeyError:
        raise ValidationError(f"unknown law {law!r}") from None
    if scope is None:
        scope = default_scope(P)
    if scope.kind == "exhaustive" and not P.is_finite_kind:
        raise ScopeUnsupported("exhaustive scope needs a finite carrier")
    if law == "conditionally_complete":
        return (_cc_exhaustive(P, scope) if scope.kind == "exhaustive"
                else _cc_sampled(P, scope))
    if law == "interpolating":
        return (_interp_exhaustive(P, scope) if scope.kind == "exhaustive"
                else _interp_sampled(P, scope))
    if law == "continuous":
        return (_cont_exhaustive(P, scope) if scope.kind == "exhaustive"
                else _cont_sampled(P, scope))
    if view is None:
        raise ScopeUnsupported("the subposet law needs the subset view")
    return (_subposet_exhaustive(P, scope, view) if scope.kind == "exhaustive"
            else _subposet_sampled(P, scope, view))


def _cc_exhaustive(P, scope):
    law = "conditionally_complete"
    elems = P.elements()
    n = len(elems)
    if n > 16:
        raise SizeLimit("exhaustive subset scan capped at 16 elements")
    for mask in range(1, 1 << n):
        members = [elems[i] for i in _bits(mask)]
        ubs = [u for u in elems if all(P.leq(m, u) for m in members)]
        if not ubs:
            continue
        if not any(all(P.leq(u, v) for v in ubs) for u in ubs):
            return refuted(law, tuple(members),
                           "bounded-above subset without a least upper bound",
                           scope)
    return verified(law, scope, reason="all nonempty bounded subsets scanned")


def _cc_sampled(P, scope):
    from .reports import DEFAULT_SUBSET_SAMPLES

    law = "conditionally_complete"
    rng = random.Random(scope.seed)
    pool = sample_pool(P, rng, scope.count)
    checked = 0
    for _ in range(min(scope.count, DEFAULT_SUBSET_SAMPLES)):
        size = rng.randint(2, 4)
        if len(pool) < size:
            break
        subset = rng.sample(pool, size)
        s = P.finite_sup(tuple(subset))
        if is_element(s):
            if not all(P.leq(a, s) for a in subset):
                return refuted(law, tuple(subset),
                               "reported supremum is not an upper bound",
                               scope, samples=checked)
            for u in pool:
                if all(P.leq(a, u) for a in subset) and not P.leq(s, u):
                    return refuted(
                        law, tuple(subset),
                        f"supremum not least: {P.format_element(u)} is a "
                        "smaller-incomparable upper bound", scope,
                        samples=checked)
        checked += 1
    for fam in P.family_bank():
        members = fam.sample_members()
        if not all(P.leq(m, fam.supremum) for m in members):
            return refuted(law, fam.label or fam,
                           "declared supremum does not dominate a member",
                           scope, samples=checked)
        if isinstance(fam, ExplicitFamily):
            for u in sample_pool(P, rng, 64):
                if all(P.leq(m, u) for m in members) and not P.leq(fam.supremum, u):
                    return refuted(law, fam.label or fam,
                                   "declared supremum is not least", scope,
                                   samples=checked)
        checked += 1
    if P.certified_conditionally_complete:
        return verified(law, scope,
                        reason="certified for the kind; probes consistent",
                        samples=checked)
    return unrefuted(law, checked, scope)


def _interp_exhaustive(P, scope):
    law = "interpolating"
    elems = P.elements()
    for x in elems:
        for y in elems:
            if P.waybelow(x, y):
                if not any(P.waybelow(x, z) and P.waybelow(z, y)
                           for z in elems):
                    return refuted(law, (x, y), "no interpolant", scope)
    return verified(law, scope)


def _interp_sampled(P, scope):
    law = "interpolating"
    rng = random.Random(scope.seed)
    pool = sample_pool(P, rng, scope.count)
    checked = 0
    for _ in range(scope.count):
        x, y = rng.choice(pool), rng.choice(pool)
        if not P.waybelow(x, y):
            continue
        z = P.interpolation_witness(x, y)
        good = z is not None and P.waybelow(x, z) and P.waybelow(z, y)
        if not good:
            good = any(P.waybelow(x, z) and P.waybelow(z, y) for z in pool)
        if not good:
            return refuted(law, (x, y), "no interpolant found in scope",
                           scope, samples=checked)
        checked += 1
    if P.certified_interpolating:
        return verified(law, scope,
                        reason="certified closed-form witness; spot-checked",
                        samples=checked)
    return unrefuted(law, checked, scope)


def _continuity_failure(P, x):
    """Reason string if x is not the supremum of its approximants."""
    fam = P.waybelow_family(x)
    if fam is None:
        return "no approximants"
    k = fam.supremum
    if k != x:
        return (f"sup of approximants = {P.format_element(k)} != "
                f"{P.format_element(x)}")
    return None


def _cont_exhaustive(P, scope):
    law = "continuous"
    for x in P.elements():
        why = _continuity_failure(P, x)
        if why:
            return refuted(law, x, why, scope)
    return verified(law, scope)


def _cont_sampled(P, scope):
    law = "continuous"
    rng = random.Random(scope.seed)
    pool = []
    ce = P.continuity_counterexample()
    if ce is not None:
        pool.append(ce)
    pool.extend(sample_pool(P, rng, scope.count))
    pool = list(dict.fromkeys(pool))[:scope.count]
    for x in pool:
        why = _continuity_failure(P, x)
        if why:
            return refuted(law, x, why, scope, samples=len(pool))
    if P.certified_continuous is True:
        return verified(law, scope, reason="certified for the kind",
                        samples=len(pool))
    if P.certified_continuous is False:
        return unknown(law, "kind is certified non-continuous but no witness "
                       "fell inside the scope", scope)
    return unrefuted(law, len(pool), scope)


def _subposet_exhaustive(P, scope, view):
    from .oracle import waybelow_bruteforce  # cycle: oracle builds on core

    law = "subposet"
    elems = view.elements()
    names = [P.format_element(e) for e in elems]
    up = []
    for x in elems:
        row = 0
        for j, y in enumerate(elems):
            if P.leq(x, y):
                row |= 1 << j
        up.append(row)
    induced = FinitePoset(names, up)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            inside = waybelow_bruteforce(induced, i, j)
            ambient = P.waybelow(x, y)
            if inside != ambient:
                return refuted(law, (x, y),
                               f"way-below inside the subset = {inside}, "
                               f"ambient = {ambient}", scope)
    return verified(law, scope)


def _subposet_sampled(P, scope, view):
    law = "subposet"
    rng = random.Random(scope.seed)
    pool = sample_pool(view, rng, scope.count)
    bank = view.family_bank()
    confirmed = 0
    for _ in range(scope.count):
        if not pool:
            break
        x, y = rng.choice(pool), rng.choice(pool)
        ambient = P.waybelow(x, y)
        for fam in bank:
            if not P.leq(y, fam.supremum):
                continue
            dom = family_dominates(P, fam, x)
            if dom is False and ambient:
                return refuted(
                    law, (x, y),
                    f"family {fam.label!r} inside the subset refutes an "
                    "ambient way-below pair", scope, samples=confirmed)
            if dom is False and not ambient:
                confirmed += 1
                break
        else:
            if ambient:
                confirmed += 1
    return unrefuted(law, confirmed, scope)
