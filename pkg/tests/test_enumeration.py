import numpy as np
import pytest

from ringlab.config import LabConfig
from ringlab.errors import OrderTooLarge
from ringlab.rings import (
    EnumerationTask,
    canonical_form,
    enumerate_order,
    enumerate_rings,
    is_commutative,
    is_isomorphic,
    oracle_classes,
)
from ringlab.rings.groups import abelian_group_shapes, automorphisms

# number of rings of order n, up to isomorphism (OEIS A027623)
RING_COUNTS = {1: 1, 2: 2, 3: 2, 4: 11, 5: 2, 6: 4, 7: 2}

# order 8 split by additive group
ORDER_EIGHT_BY_GROUP = {"Z8": 4, "Z2xZ4": 20, "Z2xZ2xZ2": 28}


@pytest.mark.parametrize(("order", "expected"), sorted(RING_COUNTS.items()))
def test_class_counts(order, expected, config):
    assert len(enumerate_order(order, config=config)) == expected


@pytest.mark.slow
def test_order_eight(config):
    rings = enumerate_order(8, config=config)
    assert len(rings) == 52
    groups = [R.label.split(".")[1] for R in rings]
    assert {name: groups.count(name) for name in ORDER_EIGHT_BY_GROUP} == ORDER_EIGHT_BY_GROUP


def test_classes_are_pairwise_non_isomorphic(config):
    rings = enumerate_order(4, config=config)
    for i, A in enumerate(rings):
        for B in rings[i + 1 :]:
            assert not is_isomorphic(A, B)


def test_order_four_contains_both_triangular_rings(T2, T2op, config):
    rings = enumerate_order(4, config=config)
    assert any(is_isomorphic(R, T2) for R in rings)
    assert any(is_isomorphic(R, T2op) for R in rings)
    assert sum(not is_commutative(R) for R in rings) == 2


def test_labels_and_grouping(config):
    rings = enumerate_order(4, config=config)
    assert rings[0].label == "ring4.Z4.1"
    assert [R.label.split(".")[1] for R in rings].count("Z4") == 3
    assert rings[-1].label == "ring4.Z2xZ2.8"


def test_raw_output_covers_every_class(config):
    classes = enumerate_order(4, config=config)
    task = EnumerationTask(order=4, dedup=False)
    raw = list(enumerate_rings(task, config))
    assert len(raw) >= len(classes)
    assert task.stats.structures == len(raw)
    keys = {canonical_form(R)[1].tobytes() for R in raw}
    assert keys == {canonical_form(R)[1].tobytes() for R in classes}


def test_single_shape(config):
    shape = abelian_group_shapes(4)[0]
    task = EnumerationTask(order=4, shape=shape)
    rings = list(enumerate_rings(task, config))
    assert len(rings) == 3
    assert task.stats.classes == 3


def test_stats_are_filled(config):
    task = EnumerationTask(order=6)
    list(enumerate_rings(task, config))
    assert task.stats.classes == 4
    assert task.stats.shards >= 1
    assert task.stats.nodes >= task.stats.structures >= 4


def test_output_is_deterministic(config):
    first = enumerate_order(6, config=config)
    second = enumerate_order(6, config=config)
    assert [R.label for R in first] == [R.label for R in second]
    assert all(np.array_equal(a.mul, b.mul) for a, b in zip(first, second))


def test_sharded_run_matches_sequential(config):
    sharded = LabConfig(progress=False, shards=2)
    a = enumerate_order(4, config=config)
    b = enumerate_order(4, config=sharded)
    assert a == b


def test_order_cap():
    with pytest.raises(OrderTooLarge):
        enumerate_order(9, config=LabConfig(progress=False))
    with pytest.raises(OrderTooLarge):
        enumerate_order(0, config=LabConfig(progress=False))
    with pytest.raises(OrderTooLarge):
        enumerate_order(17, config=LabConfig(progress=False, allow_large_enumeration=True))


def _stabiliser_size(mul: np.ndarray, perms: np.ndarray) -> int:
    count = 0
    for perm in perms:
        moved = np.empty_like(mul)
        moved[np.ix_(perm, perm)] = perm[mul]
        count += bool(np.array_equal(moved, mul))
    return count


@pytest.mark.parametrize("order", [4, pytest.param(8, marks=pytest.mark.slow)])
def test_class_orbits_add_up_to_raw_structures(order, config):
    # every raw table is in exactly one orbit of Aut(R, +); a merged class would
    # leave the orbit sizes short of the raw count
    for shape in abelian_group_shapes(order):
        raw = list(enumerate_rings(EnumerationTask(order, shape=shape, dedup=False), config))
        classes = list(enumerate_rings(EnumerationTask(order, shape=shape), config))
        perms = automorphisms(shape)
        orbits = [len(perms) // _stabiliser_size(R.mul, perms) for R in classes]
        assert sum(orbits) == len(raw), shape.name


@pytest.mark.parametrize("order", [4, 5])
def test_oracle_agrees(order, config):
    found = enumerate_order(order, config=config)
    oracle = oracle_classes(order)
    assert len(oracle) == len(found)
    for R in oracle:
        assert sum(is_isomorphic(R, S) for S in found) == 1


@pytest.mark.slow
def test_oracle_agrees_at_order_six(config):
    assert len(oracle_classes(6)) == len(enumerate_order(6, config=config)) == 4


def test_oracle_limit():
    with pytest.raises(OrderTooLarge):
        oracle_classes(7)
