import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from kea.discretize import Discretization, apply_discretization, fit_discretization
from oracles import brute_force_mdl, level_of

TABLE2_TFIDF = (0.0031, 0.0045, 0.013, 0.033)
TABLE2_DISTANCE = (0.0014, 0.017, 0.081)


def test_single_class_has_no_cuts():
    assert fit_discretization([1, 2, 3, 4], [True] * 4) == []


def test_empty_input():
    assert fit_discretization([], []) == []


def test_clean_two_cluster_split():
    cuts = fit_discretization([1, 2, 3, 10, 11, 12], [False, False, False, True, True, True])
    assert cuts == [6.5]


def test_two_cluster_per_class_matches_exhaustive_search():
    rng = random.Random(30)
    values, labels = [], []
    for center, label in [(0.0, False), (5.0, True), (10.0, False), (15.0, True)]:
        for _ in range(7 if center < 10 else 8):
            values.append(center + rng.uniform(-1, 1))
            labels.append(label)
    assert len(values) == 30
    cuts = fit_discretization(values, labels)
    assert cuts == brute_force_mdl(values, labels)
    assert cuts


def test_ties_are_never_split():
    # equal values with mixed labels stay together
    cuts = fit_discretization([1, 1, 1, 1, 5, 5, 5, 5], [True, False, True, False, True, True, True, True])
    for c in cuts:
        assert c not in (1, 5)


def test_length_mismatch():
    with pytest.raises(ValueError):
        fit_discretization([1.0], [])


def test_table2_levels():
    assert apply_discretization(TABLE2_TFIDF, 0.0189) == 4
    assert apply_discretization(TABLE2_DISTANCE, 0.0254) == 3
    assert apply_discretization(TABLE2_TFIDF, 0.0) == 1
    assert apply_discretization(TABLE2_TFIDF, 1.0) == 5


def test_boundaries_belong_to_upper_level():
    assert apply_discretization(TABLE2_TFIDF, 0.0031) == 2
    assert apply_discretization(TABLE2_TFIDF, 0.033) == 5
    assert apply_discretization((), -1e300) == 1


def test_nan_rejected():
    with pytest.raises(ValueError):
        apply_discretization(TABLE2_TFIDF, math.nan)
    with pytest.raises(ValueError):
        fit_discretization([math.nan], [True])


def test_discretization_object():
    d = Discretization(TABLE2_TFIDF)
    assert d.num_levels == 5
    assert d.level(0.02) == 4
    with pytest.raises(ValueError):
        Discretization((0.2, 0.1))


def random_dataset(rng):
    n = rng.randint(1, 50)
    kind = rng.randrange(3)
    if kind == 0:
        values = [rng.random() for _ in range(n)]
        labels = [rng.random() < 0.3 for _ in range(n)]
    elif kind == 1:
        values = [float(rng.randint(0, 5)) for _ in range(n)]
        labels = [(v > 2) != (rng.random() < 0.2) for v in values]
    else:
        values = [rng.gauss(3.0 * (i % 2), 1.0) for i in range(n)]
        labels = [i % 2 == 1 for i in range(n)]
    return values, labels


def test_oracle_equivalence_random():
    rng = random.Random(2024)
    for _ in range(300):
        values, labels = random_dataset(rng)
        assert fit_discretization(values, labels) == brute_force_mdl(values, labels)


@settings(max_examples=100)
@given(st.lists(st.tuples(st.floats(-100, 100), st.booleans()), max_size=50), st.randoms(use_true_random=False))
def test_permutation_invariant(pairs, rnd):
    values = [v for v, _ in pairs]
    labels = [y for _, y in pairs]
    shuffled = list(pairs)
    rnd.shuffle(shuffled)
    assert fit_discretization(values, labels) == fit_discretization([v for v, _ in shuffled], [y for _, y in shuffled])


@given(st.lists(st.floats(-10, 10), min_size=1, max_size=8, unique=True), st.floats(-20, 20), st.floats(-20, 20))
def test_apply_monotone_and_total(cuts, a, b):
    cuts = sorted(cuts)
    lo, hi = min(a, b), max(a, b)
    assert 1 <= apply_discretization(cuts, lo) <= apply_discretization(cuts, hi) <= len(cuts) + 1
    assert apply_discretization(cuts, a) == level_of(cuts, a)
