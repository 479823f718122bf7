"""Graded slices, Hilbert sequences, the character oracle, class products."""

import pytest

from helpers import cyclic_invariant_count, invariant_dim_by_projector
from mckaykit.errors import (
    DegreeCapExceeded,
    EndpointMismatch,
    UnsupportedSeries,
    VertexNotInCorner,
)
from mckaykit.gamma_data import build_group
from mckaykit.graded_algebra import (
    AlgebraContext,
    class_from_path,
    corner_generation_bound,
    factor_through_bound,
    graded_slice,
    hilbert_sequence,
    molien_sequence,
    multiply_classes,
    slice_class_basis,
    unit_class,
)


@pytest.fixture(scope="module")
def a1():
    return build_group("A1")


@pytest.fixture(scope="module")
def a1_bullet(a1):
    return AlgebraContext(a1, "pibullet")


def test_slice_examples(a1, a1_bullet):
    assert a1_bullet.slice_dim(0, 0, 0) == 1  # the vertex idempotent
    cornered = AlgebraContext(a1, "pibullet", corner={0})
    # degree-two invariants of the sign action with a fixed variable:
    # x^2, xy, y^2, z^2
    assert cornered.slice_dim(0, 0, 2) == 4
    plain = AlgebraContext(a1, "pi")
    assert plain.slice_dim(0, 0, 1) == 0  # no length-one loops


def test_slice_pathspace_invariant(a1, a1_bullet):
    for (i, j, k) in [(0, 0, 0), (0, 1, 1), (0, 0, 2), (1, 0, 3), (1, 1, 4)]:
        sl = graded_slice(a1_bullet, i, j, k)
        span = sl.relation_span
        if sl.path_basis:
            ncols = len(span[0]) if span else 0
            assert sl.relation_rank == ncols
        assert sl.dim == len(sl.path_basis) - sl.relation_rank
        for p in sl.path_basis:
            assert len(p) == k


def test_hilbert_examples(a1):
    cornered = AlgebraContext(a1, "pibullet", corner={0})
    assert hilbert_sequence(cornered, 4) == (1, 1, 4, 4, 9)
    for label in ["A1", "A3", "D4"]:
        g = build_group(label)
        ctx = AlgebraContext(g, "pibullet")
        assert hilbert_sequence(ctx, 0) == (g.num_irreps,)
    # cornered dims bounded by uncornered degreewise
    full = AlgebraContext(a1, "pibullet")
    hs_c = hilbert_sequence(cornered, 6)
    hs_f = hilbert_sequence(full, 6)
    assert all(c <= f for c, f in zip(hs_c, hs_f))


def test_corner_requires_member_vertices(a1):
    ctx = AlgebraContext(a1, "pibullet", corner={0})
    with pytest.raises(VertexNotInCorner):
        ctx.slice_dim(1, 0, 2)
    with pytest.raises(VertexNotInCorner):
        AlgebraContext(a1, "pibullet", corner={7})


def test_degree_cap(a1):
    ctx = AlgebraContext(a1, "pibullet", degree_cap=5)
    with pytest.raises(DegreeCapExceeded):
        ctx.slice_dim(0, 0, 6)
    with pytest.raises(DegreeCapExceeded):
        hilbert_sequence(ctx, 6)


def test_molien_examples(a1):
    assert molien_sequence(a1, 0, 0, True, 4) == (1, 1, 4, 4, 9)
    for label in ["A2", "D4"]:
        g = build_group(label)
        assert molien_sequence(g, 0, 0, False, 0) == (1,)
    assert molien_sequence(a1, 0, 1, False, 1)[1] == 2
    with pytest.raises(UnsupportedSeries):
        molien_sequence(build_group("E6"), 0, 0, True, 2)


@pytest.mark.parametrize("label", ["A1", "A2", "D4"])
def test_oracle_agreement_small(label):
    g = build_group(label)
    n = g.num_irreps
    for flavor, with_z in [("pi", False), ("pibullet", True)]:
        ctx = AlgebraContext(g, flavor)
        for i in range(n):
            for j in range(n):
                mol = molien_sequence(g, i, j, with_z, 6)
                assert mol == tuple(ctx.slice_dim(i, j, k) for k in range(7))


def test_cornered_invariant_ring_identity(a1):
    cornered = AlgebraContext(a1, "pibullet", corner={0})
    hs = hilbert_sequence(cornered, 6)
    for k in range(7):
        assert hs[k] == cyclic_invariant_count(2, k, with_z=True)
        assert hs[k] == invariant_dim_by_projector(a1, k, with_z=True)


def test_factor_through_bound_values():
    assert factor_through_bound(build_group("A1"), {0, 1}) == 0
    # golden values recorded from the first verified run
    assert factor_through_bound(build_group("A1"), {0}) == 0
    assert factor_through_bound(build_group("A2"), {0}) == 1
    assert factor_through_bound(build_group("A3"), {0}) == 2


def test_factor_bound_stable_under_larger_window():
    for label, corner in [("A1", {0}), ("A3", {0}), ("D4", {0})]:
        g = build_group(label)
        assert factor_through_bound(g, corner) == factor_through_bound(
            g, corner, safety=6
        )


def test_factor_bound_not_found_below_cap():
    from mckaykit.errors import BoundNotFound

    with pytest.raises(BoundNotFound):
        factor_through_bound(build_group("A3"), {0}, degree_cap=1)


def test_class_multiplication(a1_bullet):
    e0 = unit_class(a1_bullet, 0)
    assert multiply_classes(e0, e0).coeffs == e0.coeffs
    u = slice_class_basis(a1_bullet, 0, 1, 1)[0]
    e1 = unit_class(a1_bullet, 1)
    assert multiply_classes(u, e1).coeffs == u.coeffs
    assert multiply_classes(e0, u).coeffs == u.coeffs
    with pytest.raises(EndpointMismatch):
        multiply_classes(u, u)


def test_relation_class_reduces_to_zero(a1):
    """The signed vertex sum of two-step loops is zero in the algebra."""
    ctx = AlgebraContext(a1, "pi")
    quiver = ctx.quiver
    for v in quiver.vertices:
        total = None
        for a in quiver.arrows_with_tail(v):
            cls = class_from_path(ctx, (a.id, quiver.bar[a.id]), v, v)
            cls = cls.scaled(quiver.sign(a.id))
            total = cls if total is None else total.plus(cls)
        assert total is not None and total.is_zero()


def test_associativity_sample(a1_bullet):
    u = slice_class_basis(a1_bullet, 0, 1, 1)[0]
    v = slice_class_basis(a1_bullet, 1, 0, 1)[1]
    w = slice_class_basis(a1_bullet, 0, 1, 3)[2]
    left = multiply_classes(multiply_classes(u, v), w)
    right = multiply_classes(u, multiply_classes(v, w))
    assert left.coeffs == right.coeffs


def test_generation_bound_examples():
    a1 = build_group("A1")
    assert corner_generation_bound(AlgebraContext(a1, "pi"), {0}) == 2
    a3 = build_group("A3")
    assert corner_generation_bound(AlgebraContext(a3, "pi"), {0}) == 4


def test_framed_flavor_slices():
    g = build_group("A1")
    from mckaykit.quiver_core import INFINITY

    ctx = AlgebraContext(g, "piw", w={0: 1})
    assert ctx.slice_dim(INFINITY, INFINITY, 0) == 1
    assert ctx.slice_dim(0, INFINITY, 1) == 1
    assert hilbert_sequence(ctx, 0) == (3,)
