import random

import pytest

from ddc.groupoid_homology import (descriptor_leq, exceptional_basis_arcs, generated_subgroupoid,
                                   homology_class, k0_basis_check, path_in, walk_class,
                                   witness_path)
from ddc.lattice import candidate_arcs
from ddc.objects import Arc, CategoryParams, MarkedPoint, arc_of


def test_homology_class_of_an_arc(p230):
    cls = homology_class(Arc.parse("x1:y1:-1"), p230)
    assert cls.wind == -1 and sum(cls.delta) == 0
    assert (cls + -cls).wind == 0


def test_winding_of_a_tall_loop(obj):
    params = CategoryParams(1, 2, 0)
    from ddc.objects import make_object
    arc = arc_of(make_object(params, "X", 0, 1, 2))
    assert str(arc) == "x1:x1:2"
    assert homology_class(arc, params).wind == 2


def test_single_mixed_block(p230):
    d = generated_subgroupoid(list(Arc.parse(t) for t in ("x1:y1:0", "x2:y1:0", "x1:x1:1")), p230)
    assert len(d.blocks) == 1 and d.periods == (1,)
    assert d.contains(Arc.parse("x2:x1:5"))


def test_containment_and_order(p230):
    small = generated_subgroupoid([Arc.parse("x1:y1:0")], p230)
    large = generated_subgroupoid([Arc.parse("x1:y1:0"), Arc.parse("x1:x1:1")], p230)
    assert descriptor_leq(small, large) and not descriptor_leq(large, small)
    assert path_in(large, MarkedPoint.parse("x1"), MarkedPoint.parse("y1"), 7)
    assert not path_in(small, MarkedPoint.parse("x1"), MarkedPoint.parse("y1"), 1)


def test_witness_paths_realise_members():
    params = CategoryParams(2, 4, 1)
    pool = candidate_arcs(params, 1)
    rng = random.Random(2)
    for _ in range(200):
        gens = rng.sample(pool, 3)
        target = rng.choice(pool)
        walk = witness_path(gens, target, params)
        assert (walk is not None) == generated_subgroupoid(gens, params).contains(target)
        if walk is not None:
            assert walk_class(gens, walk, target.start) == (target.end, target.w)


def test_walk_must_be_connected(p230):
    gens = [Arc.parse("x1:y1:0"), Arc.parse("x2:x2:1")]
    with pytest.raises(ValueError):
        walk_class(gens, [(0, 1), (1, 1)], MarkedPoint.parse("x1"))


@pytest.mark.parametrize("triple", [(1, 2, 0), (2, 3, 0), (2, 3, 1), (3, 4, 1)])
def test_k0_basis(triple):
    params = CategoryParams(*triple)
    report = k0_basis_check(params)
    assert report["ok"] and report["rank"] == params.n + params.m
    assert len(exceptional_basis_arcs(params)) == params.n + params.m
