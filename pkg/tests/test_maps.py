"""Base-category helpers: canonical block maps, tangent, block tiling."""

from fractions import Fraction

import pytest

from dseq.errors import DimensionMismatch, TagMismatch
from dseq.maps import (canonical_map, compose, identity, map_class,
                       pfunctor_apply, proj, tangent_map, zero_map)
from dseq.parser import parse_map
from dseq.poly import Poly, PolyMap


def ev(m, *xs):
    return m.eval([Fraction(x) for x in xs])


def test_zpair_appends_zero_block():
    z = canonical_map("zpair", 2)
    assert (z.dom, z.cod) == (2, 4)
    assert ev(z, 1, 2) == (1, 2, 0, 0)


def test_sumv_adds_last_two_blocks():
    s = canonical_map("sumv", 1)
    assert (s.dom, s.cod) == (3, 2)
    assert ev(s, 5, 7, 11) == (5, 18)


def test_sum_projections():
    p0 = canonical_map("sumproj0", 1)
    p1 = canonical_map("sumproj1", 1)
    assert ev(p0, 5, 7, 11) == (5, 7)
    assert ev(p1, 5, 7, 11) == (5, 11)


def test_lift_embeds_with_zero_middle():
    l = canonical_map("lift", 1)
    assert (l.dom, l.cod) == (2, 4)
    assert ev(l, 3, 4) == (3, 0, 0, 4)


def test_flip_swaps_middle_blocks():
    f = canonical_map("flip", 2)
    assert (f.dom, f.cod) == (8, 8)
    assert ev(f, 1, 2, 3, 4, 5, 6, 7, 8) == (1, 2, 5, 6, 3, 4, 7, 8)


def test_canonical_maps_unknown_kind():
    with pytest.raises(ValueError):
        canonical_map("nope", 1)


def test_pfunctor_tiles_blocks():
    # one doubling of the first projection over (1,1): keep blocks 0 and 2
    h = proj(1, 1, 0)
    tiled = pfunctor_apply(h, 1)
    assert (tiled.dom, tiled.cod) == (4, 2)
    assert ev(tiled, 9, 8, 7, 6) == (9, 7)


def test_pfunctor_zero_doublings_is_identity_functor():
    h = proj(1, 1, 0)
    assert pfunctor_apply(h, 0) == h


def test_tangent_map_pairs_value_and_derivative():
    f = parse_map(["x0^2"], 1, 1, "poly")
    tf = tangent_map(f)
    assert (tf.dom, tf.cod) == (2, 2)
    assert ev(tf, 3, 5) == (9, 30)


def test_compose_direction():
    f = parse_map(["x0 + 1"], 1, 1, "poly")
    g = parse_map(["x0^2"], 1, 1, "poly")
    assert ev(compose(f, g), 2) == (9,)
    assert ev(compose(g, f), 2) == (5,)


def test_identity_and_zero():
    assert ev(identity(3), 1, 2, 3) == (1, 2, 3)
    assert ev(zero_map(2, 2), 5, 6) == (0, 0)


def test_proj_slices_blocks():
    p = proj(2, 3, 1)
    assert (p.dom, p.cod) == (5, 3)
    assert ev(p, 1, 2, 3, 4, 5) == (3, 4, 5)


def test_elem_canonical_maps_match_poly_semantics():
    z = canonical_map("zpair", 1, "elementary")
    assert z.eval([2.0]) == pytest.approx((2.0, 0.0))
    fl = canonical_map("flip", 1, "elementary")
    assert fl.eval([1.0, 2.0, 3.0, 4.0]) == pytest.approx((1.0, 3.0, 2.0, 4.0))


def test_map_class_rejects_unknown_tag():
    with pytest.raises(TagMismatch):
        map_class("banach")


def test_mixed_bases_cannot_compose():
    f = parse_map(["x0"], 1, 1, "poly")
    g = parse_map(["sin(x0)"], 1, 1, "elementary")
    with pytest.raises(TagMismatch):
        compose(f, g)


def test_pair_dimension_check():
    f = PolyMap.identity(2)
    g = PolyMap.identity(3)
    with pytest.raises(DimensionMismatch):
        f.pair(g)


def test_differential_is_linear_in_direction():
    # joint derivative evaluated at twice the direction doubles the value
    f = parse_map(["x0^3 + x0*x1"], 2, 1, "poly")
    df = f.differential()
    base = ev(df, 2, 3, 1, 5)
    twice = ev(df, 2, 3, 2, 10)
    assert tuple(2 * v for v in base) == twice
