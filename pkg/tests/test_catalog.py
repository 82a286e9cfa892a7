"""Catalog presentations: fixtures, banks, combinators, and the standing
invariant that no certified way-below rule is ever refuted by its bank."""

import random

import pytest

from posetkernel import (BOTTOM, NO_SUPREMUM, OMEGA, Inner, Left, Right,
                         closed_set, least_upper_bound, make_catalog)
from posetkernel.catalog import (disjoint_sum, finite_named, lift,
                                 named_finite_poset, punctured_closed_sets,
                                 random_finite_poset, standard_roster)
from posetkernel.closedsets import EMPTY, EVENS, FULL, INF_POINT
from posetkernel.errors import SizeLimit, UnknownName
from posetkernel.families import ChainFamily, ExplicitFamily
from posetkernel.kernel import is_approximable
from posetkernel.oracle import bank_refute_waybelow
from posetkernel.reports import Status


class TestNamedPosets:
    def test_diamond_shape(self):
        fp = named_finite_poset("diamond")
        assert fp.n == 4
        bottom = [i for i in range(4)
                  if all(fp.leq(i, j) for j in range(4))]
        assert bottom == [fp.index_of("a")]

    def test_sizes(self):
        assert named_finite_poset("boolean_3").n == 8
        assert named_finite_poset("m3").n == 5
        assert named_finite_poset("n5").n == 5
        assert named_finite_poset("fence_4").n == 4
        assert named_finite_poset("chain_5").n == 5
        assert named_finite_poset("antichain_4").n == 4

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            named_finite_poset("dodecahedron")

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            named_finite_poset("chain_99")
        with pytest.raises(SizeLimit):
            random_finite_poset(40, 0.2, 0)

    def test_random_poset_deterministic(self):
        one = random_finite_poset(7, 0.35, 13)
        two = random_finite_poset(7, 0.35, 13)
        assert one.up == two.up


class TestCombinators:
    def test_lift_makes_everything_approximable(self):
        P = make_catalog(lift(punctured_closed_sets()))
        rng = random.Random(0)
        for x in [BOTTOM, Inner(INF_POINT)] + P.sample_elements(rng, 40):
            assert is_approximable(P, x)

    def test_lift_bottom_waybelow_everything(self):
        P = make_catalog(lift(punctured_closed_sets()))
        rng = random.Random(1)
        for x in P.sample_elements(rng, 40):
            assert P.waybelow(BOTTOM, x)

    def test_disjoint_sum_cross_pairs(self):
        P = make_catalog(disjoint_sum(finite_named("chain_2"),
                                      finite_named("chain_2")))
        assert len(P.elements()) == 4
        cross = (Left(0), Right(1))
        assert not P.leq(*cross)
        assert not P.waybelow(*cross)
        assert least_upper_bound(P, cross) is NO_SUPREMUM

    def test_sum_no_cross_relations_sampled(self):
        P = make_catalog(disjoint_sum(finite_named("chain_2"),
                                      finite_named("chain_2")))
        for x in P.elements():
            for y in P.elements():
                if type(x) is not type(y):
                    assert not P.leq(x, y)
                    assert not P.waybelow(x, y)

    def test_lift_infimum_falls_to_bottom(self):
        P = make_catalog(lift(punctured_closed_sets()))
        got = P.finite_inf((Inner(closed_set({0})), Inner(closed_set({1}))))
        assert got is BOTTOM

    def test_sum_of_symbolic_kinds(self):
        from posetkernel.catalog import closed_sets, omega_plus_one

        P = make_catalog(disjoint_sum(omega_plus_one(), closed_sets()))
        assert P.leq(Left(2), Left(OMEGA))
        assert P.waybelow(Right(EMPTY), Right(INF_POINT))
        assert not P.waybelow(Left(OMEGA), Left(OMEGA))


class TestFamilyBanks:
    @pytest.mark.parametrize("P", standard_roster(), ids=lambda P: P.name)
    def test_families_are_directed_with_dominating_sups(self, P):
        for fam in P.family_bank():
            members = fam.sample_members()
            assert members
            if isinstance(fam, ExplicitFamily):
                for a in members:
                    for b in members:
                        assert any(P.leq(a, c) and P.leq(b, c)
                                   for c in members), fam.label
            else:
                for a, b in zip(members, members[1:]):
                    assert P.leq(a, b), fam.label
            for m in members:
                assert P.leq(m, fam.supremum), fam.label

    @pytest.mark.parametrize("P", standard_roster(), ids=lambda P: P.name)
    def test_sup_minimality_probe(self, P):
        rng = random.Random(0xBEEF)
        candidates = P.interesting_elements() + P.sample_elements(rng, 64)
        for fam in P.family_bank():
            members = fam.sample_members()
            for z in candidates:
                if P.leq(z, fam.supremum) and z != fam.supremum:
                    assert not all(P.leq(m, z) for m in members), \
                        f"{fam.label}: {P.format_element(z)} undercuts the sup"

    @pytest.mark.parametrize(
        "P", [p for p in standard_roster() if not p.is_finite_kind],
        ids=lambda P: P.name)
    def test_certified_waybelow_never_refuted_by_bank(self, P):
        rng = random.Random(0xC0FFEE)
        pool = P.interesting_elements() + P.sample_elements(rng, 80)
        for _ in range(500):
            x, y = rng.choice(pool), rng.choice(pool)
            if P.waybelow(x, y):
                report = bank_refute_waybelow(P, x, y)
                assert report.status is not Status.REFUTED, \
                    report.describe(P.format_element)

    def test_closed_sets_bank_contents(self, closed):
        labels = {fam.label for fam in closed.family_bank()}
        assert "initial-segments" in labels
        assert "even-initial-segments" in labels
        chains = {fam.label: fam for fam in closed.family_bank()
                  if isinstance(fam, ChainFamily)}
        initial = chains["initial-segments"]
        assert initial.supremum == FULL
        assert initial.generator(2) == closed_set({0, 1, 2})
        evens = chains["even-initial-segments"]
        assert evens.supremum == EVENS
        assert evens.generator(2) == closed_set({0, 2, 4})
        # the initial-segment chain witnesses non-continuity at {inf}
        assert closed.leq(INF_POINT, initial.supremum)
        assert initial.member_dominates(INF_POINT) is False

    def test_omega_bank_has_the_naturals_chain(self, omega):
        chains = [fam for fam in omega.family_bank()
                  if isinstance(fam, ChainFamily)]
        assert len(chains) == 1
        chain = chains[0]
        assert chain.supremum is OMEGA
        assert chain.generator(5) == 5

    def test_finite_bank_is_all_directed_subsets(self, diamond):
        from posetkernel.core import is_directed

        bank = diamond.family_bank()
        masks = {frozenset(fam.members) for fam in bank}
        expected = set()
        for mask in range(1, 1 << 4):
            members = [i for i in range(4) if (mask >> i) & 1]
            if all(any(diamond.leq(a, c) and diamond.leq(b, c)
                       for c in members)
                   for a in members for b in members):
                expected.add(frozenset(members))
        assert masks == expected
        for fam in bank:
            assert fam.supremum in fam.members  # finite sup is the maximum
            assert is_directed(diamond, fam)


class TestSampling:
    @pytest.mark.parametrize("P", standard_roster(), ids=lambda P: P.name)
    def test_samples_are_carrier_elements(self, P):
        rng = random.Random(17)
        for x in P.sample_elements(rng, 60):
            assert P.contains(x)
        for x in P.interesting_elements():
            assert P.contains(x)

    def test_punctured_never_samples_empty(self, punctured):
        rng = random.Random(23)
        for x in punctured.sample_elements(rng, 200):
            assert punctured.contains(x)
            assert x != EMPTY

    @pytest.mark.parametrize("P", standard_roster(), ids=lambda P: P.name)
    def test_sampling_is_deterministic(self, P):
        one = P.sample_elements(random.Random(9), 30)
        two = P.sample_elements(random.Random(9), 30)
        assert one == two
