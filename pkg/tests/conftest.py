import math

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from posetkernel import ClosedSetRep, make_catalog
from posetkernel.catalog import (closed_sets, finite_named, finite_random,
                                 lift, omega_plus_one, punctured_closed_sets)

settings.register_profile(
    "ci", derandomize=True, max_examples=100,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")


@st.composite
def closed_reps(draw):
    threshold = draw(st.integers(0, 8))
    if threshold:
        prefix = draw(st.frozensets(st.integers(0, threshold - 1),
                                    max_size=threshold))
    else:
        prefix = frozenset()
    period = draw(st.integers(1, 6))
    residues = draw(st.frozensets(st.integers(0, period - 1),
                                  max_size=period))
    infinity = draw(st.booleans()) or bool(residues)
    return ClosedSetRep(prefix, threshold, period, residues, infinity)


def compare_window(*reps):
    """A window on which two eventually periodic sets with these parameters
    are equal iff they agree pointwise."""
    threshold = max(r.threshold for r in reps)
    span = math.lcm(*(r.period for r in reps))
    return threshold + 2 * span


@pytest.fixture(scope="session")
def diamond():
    return make_catalog(finite_named("diamond"))


@pytest.fixture(scope="session")
def closed():
    return make_catalog(closed_sets())


@pytest.fixture(scope="session")
def punctured():
    return make_catalog(punctured_closed_sets())


@pytest.fixture(scope="session")
def omega():
    return make_catalog(omega_plus_one())


@pytest.fixture(scope="session")
def lifted_punctured():
    return make_catalog(lift(punctured_closed_sets()))


def random_presentation(seed, n=None):
    return make_catalog(finite_random((seed % 8) + 1 if n is None else n,
                                      0.35, seed))
