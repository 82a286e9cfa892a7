"""Closed-set representation algebra, checked against plain set arithmetic
on sound comparison windows."""

import random

import pytest
from hypothesis import given

from posetkernel import ClosedSetRep, closed_set, periodic_set
from posetkernel.closedsets import (EMPTY, EVENS, FULL, INF_POINT, ODDS,
                                    closedset_join, closedset_leq,
                                    closedset_meet, closedset_normalize,
                                    finite_naturals, format_closed_set,
                                    is_empty, min_natural, natural_closure,
                                    natural_part_is_finite)
from posetkernel.errors import ClosednessViolation, ValidationError

from conftest import closed_reps, compare_window


class TestNormalization:
    def test_full_residues_collapse_to_period_one(self):
        rep = ClosedSetRep(frozenset(), 0, 2, frozenset({0, 1}), True)
        assert rep.period == 1
        assert rep.residues == frozenset({0})
        assert rep == FULL

    def test_empty_tail_gives_finite_form(self):
        rep = ClosedSetRep(frozenset({4}), 5, 3, frozenset(), False)
        assert rep == closed_set({4})
        assert rep.period == 1 and rep.threshold == 5

    def test_closedness_violation(self):
        with pytest.raises(ClosednessViolation):
            ClosedSetRep(frozenset(), 0, 2, frozenset({0}), False)

    def test_structural_validation(self):
        with pytest.raises(ValidationError):
            ClosedSetRep(frozenset({3}), 2, 1, frozenset(), False)
        with pytest.raises(ValidationError):
            ClosedSetRep(frozenset(), 0, 0, frozenset(), False)
        with pytest.raises(ValidationError):
            ClosedSetRep(frozenset(), 0, 2, frozenset({5}), True)

    def test_threshold_absorbed_into_tail(self):
        rep = ClosedSetRep(frozenset({0}), 1, 1, frozenset({0}), True)
        assert rep == FULL
        assert rep.threshold == 0 and not rep.prefix

    @given(closed_reps())
    def test_normalize_idempotent(self, rep):
        again = closedset_normalize(rep)
        assert again == rep
        assert (again.prefix, again.threshold, again.period, again.residues,
                again.infinity) == (rep.prefix, rep.threshold, rep.period,
                                    rep.residues, rep.infinity)

    @given(closed_reps())
    def test_normalization_preserves_denotation(self, rep):
        raw_prefix = rep.prefix
        raw = ClosedSetRep(rep.prefix, rep.threshold, rep.period,
                           rep.residues, rep.infinity)
        for n in range(compare_window(rep)):
            assert (n in raw) == (n in rep)
        assert raw.infinity == rep.infinity
        assert raw_prefix <= set(range(max(rep.threshold, 1)))

    def test_semantic_equality_across_presentations(self):
        assert periodic_set({0, 1}, 2) == FULL
        assert ClosedSetRep(frozenset({1}), 2, 2, frozenset({1}), True) == ODDS
        assert closed_set({2, 4}) == ClosedSetRep(frozenset({2, 4}), 5, 3,
                                                  frozenset(), False)


class TestAlgebra:
    def test_join_examples(self):
        assert closedset_join(closed_set({1}), closed_set({2}, True)) == \
            closed_set({1, 2}, True)
        assert closedset_join(EVENS, ODDS) == FULL
        assert closedset_join(EMPTY, EVENS) == EVENS

    def test_meet_examples(self):
        assert closedset_meet(EVENS, ODDS) == INF_POINT
        assert closedset_meet(closed_set({0, 2}), closed_set({0, 4})) == \
            closed_set({0})
        assert closedset_meet(EVENS, EVENS) == EVENS

    def test_leq_examples(self):
        assert closedset_leq(closed_set({1, 3}), closed_set({1, 3}, True))
        assert closedset_leq(EVENS, FULL)
        assert not closedset_leq(INF_POINT, closed_set({5}))

    @given(closed_reps(), closed_reps())
    def test_join_is_union(self, a, b):
        j = closedset_join(a, b)
        for n in range(compare_window(a, b, j)):
            assert (n in j) == ((n in a) or (n in b))
        assert j.infinity == (a.infinity or b.infinity)

    @given(closed_reps(), closed_reps())
    def test_meet_is_intersection(self, a, b):
        m = closedset_meet(a, b)
        for n in range(compare_window(a, b, m)):
            assert (n in m) == ((n in a) and (n in b))
        assert m.infinity == (a.infinity and b.infinity)

    @given(closed_reps(), closed_reps())
    def test_leq_is_inclusion(self, a, b):
        expected = (not a.infinity or b.infinity) and all(
            (n not in a) or (n in b) for n in range(compare_window(a, b)))
        assert closedset_leq(a, b) == expected

    def test_lattice_laws_on_seeded_triples(self):
        rng = random.Random(0xC0FFEE)
        reps = _seeded_reps(rng, 80)
        for _ in range(500):
            a, b, c = (rng.choice(reps) for _ in range(3))
            assert closedset_join(a, b) == closedset_join(b, a)
            assert closedset_meet(a, b) == closedset_meet(b, a)
            assert closedset_join(a, closedset_join(b, c)) == \
                closedset_join(closedset_join(a, b), c)
            assert closedset_meet(a, closedset_meet(b, c)) == \
                closedset_meet(closedset_meet(a, b), c)
            assert closedset_join(a, a) == a
            assert closedset_meet(a, a) == a
            assert closedset_join(a, closedset_meet(a, b)) == a
            assert closedset_meet(a, closedset_join(a, b)) == a
            assert closedset_leq(a, b) == (closedset_join(a, b) == b)


class TestHelpers:
    def test_finite_part_helpers(self):
        rep = closed_set({1, 3}, infinity=True)
        assert natural_part_is_finite(rep)
        assert finite_naturals(rep) == (1, 3)
        assert min_natural(rep) == 1
        assert min_natural(INF_POINT) is None
        assert min_natural(periodic_set({2}, 3, prefix={0}, threshold=1)) == 0
        assert min_natural(periodic_set({2}, 3)) == 2
        assert is_empty(EMPTY) and not is_empty(INF_POINT)
        with pytest.raises(ValidationError):
            finite_naturals(EVENS)

    def test_natural_closure(self):
        assert natural_closure(closed_set({1, 3}, True)) == closed_set({1, 3})
        assert natural_closure(EVENS) == EVENS
        assert natural_closure(INF_POINT) == EMPTY

    def test_format(self):
        assert format_closed_set(EMPTY) == "{}"
        assert format_closed_set(INF_POINT) == "{inf}"
        assert format_closed_set(closed_set({1, 3})) == "{1,3}"
        assert format_closed_set(EVENS) == "{mod 2: [0] from 0, inf}"


def _seeded_reps(rng, count):
    reps = [EMPTY, INF_POINT, FULL, EVENS, ODDS]
    for _ in range(count):
        if rng.random() < 0.5:
            reps.append(closed_set(
                frozenset(rng.randrange(10) for _ in range(rng.randint(0, 4))),
                infinity=rng.random() < 0.4))
        else:
            p = rng.randint(1, 5)
            rs = frozenset(q for q in range(p) if rng.random() < 0.5)
            if not rs:
                rs = frozenset({0})
            reps.append(periodic_set(rs, p,
                                     prefix=frozenset(
                                         m for m in range(2)
                                         if rng.random() < 0.3),
                                     threshold=2))
    return reps
