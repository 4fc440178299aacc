"""Base-agnostic morphism operations shared by both map kinds.

Every space is a finite coordinate space identified by its dimension.  The
doubling functor sends a map to block-diagonal copies of itself; its n-th
power acts on 2^n stacked blocks, indexed so that bit 0 of a block index is
the innermost doubling.
"""

from functools import lru_cache

from .errors import DimensionMismatch, TagMismatch
from .expr import ElemMap
from .poly import PolyMap

MAP_CLASSES = {"poly": PolyMap, "elementary": ElemMap}

CANONICAL_KINDS = ("zpair", "sumv", "sumproj0", "sumproj1", "lift", "flip")


def map_class(base):
    try:
        return MAP_CLASSES[base]
    except KeyError:
        raise TagMismatch(f"unknown base tag {base!r}") from None


def base_of(f):
    return f.base


def identity(dim, base="poly"):
    return map_class(base).identity(dim)


def zero_map(dom, cod, base="poly"):
    return map_class(base).zero_map(dom, cod)


def proj(a, b, j, base="poly"):
    return map_class(base).proj(a, b, j)


def coord_slice(total, start, size, base="poly"):
    return map_class(base).coord_slice(total, start, size)


def terminal(dim, base="poly"):
    return map_class(base).zero_map(dim, 0)


def compose(f, g):
    """Diagrammatic composite: f first, then g."""
    return f.then(g)


def pair(f, g):
    return f.pair(g)


def add(f, g):
    return f + g


def differential(f):
    return f.differential()


def tangent_map(f):
    """Pair of (f at the base point, derivative of f in the direction)."""
    d = f.dom
    return compose(proj(d, d, 0, f.base), f).pair(f.differential())


def pfunctor_apply(h, k):
    """k-fold doubling: 2^k block-diagonal copies of h."""
    assert k >= 0
    return h.tile(1 << k)


@lru_cache(maxsize=None)
def canonical_map(kind, dim, base="poly"):
    """Structural block maps used by the axiom checkers, built at block size dim.

    zpair:    X -> X^2          x |-> (x, 0)
    sumv:     X^3 -> X^2        (a, b, c) |-> (a, b + c)
    sumproj0: X^3 -> X^2        (a, b, c) |-> (a, b)
    sumproj1: X^3 -> X^2        (a, b, c) |-> (a, c)
    lift:     X^2 -> X^4        (a, b) |-> (a, 0, 0, b)
    flip:     X^4 -> X^4        (a, b, c, d) |-> (a, c, b, d)
    """
    cls = map_class(base)
    d = dim
    if kind == "zpair":
        return cls.identity(d).pair(cls.zero_map(d, d))
    if kind == "sumv":
        second = cls.coord_slice(3 * d, d, d) + cls.coord_slice(3 * d, 2 * d, d)
        return cls.coord_slice(3 * d, 0, d).pair(second)
    if kind == "sumproj0":
        return cls.coord_slice(3 * d, 0, 2 * d)
    if kind == "sumproj1":
        return cls.coord_slice(3 * d, 0, d).pair(cls.coord_slice(3 * d, 2 * d, d))
    if kind == "lift":
        top = cls.coord_slice(2 * d, 0, d).pair(cls.zero_map(2 * d, d))
        bottom = cls.zero_map(2 * d, d).pair(cls.coord_slice(2 * d, d, d))
        return top.pair(bottom)
    if kind == "flip":
        blocks = [cls.coord_slice(4 * d, i * d, d) for i in (0, 2, 1, 3)]
        out = blocks[0]
        for b in blocks[1:]:
            out = out.pair(b)
        return out
    raise ValueError(f"unknown canonical map kind {kind!r}")


def maps_equal(f, g, tol=None):
    return f.equal(g, tol)


def compare_maps(f, g, tol=None):
    """(equal?, witness): a difference map for polynomials, a failing sample
    point for elementary maps, None when equal."""
    if isinstance(f, PolyMap):
        if f.equal(g):
            return True, None
        return False, f - g
    ok, point = f.equal_witness(g, tol)
    return ok, None if ok else point
