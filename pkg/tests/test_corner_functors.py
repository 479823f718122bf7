"""Corner restriction/extension and truncated graded module operations."""

from fractions import Fraction

import pytest

from helpers import flat_reps
from mckaykit.errors import RepresentativeDependence
from mckaykit.gamma_data import build_group
from mckaykit.graded_algebra import AlgebraContext
from mckaykit.linalg import QQ, rank
from mckaykit.quiver_core import DimVector, mckay_quiver, triple_quiver
from mckaykit.rep_theory import QuiverRep, vertex_simple
from mckaykit.corner_functors import (
    CorneredModule,
    c_star,
    cornered_isomorphic,
    cornered_quotient,
    cornered_submodule_is_closed,
    cornered_vertex_simple,
    free_column_tgm,
    generation_degree,
    is_z_torsion_free,
    j_shriek,
    j_shriek_on_hom,
    j_shriek_with_data,
    j_star,
    z_torsion,
)


@pytest.fixture(scope="module")
def a1():
    return build_group("A1")


@pytest.fixture(scope="module")
def a1_tripled(a1):
    return triple_quiver(mckay_quiver(a1))


def test_j_star_full_corner_is_identity(a1, a1_tripled):
    dims = DimVector(components={0: 2, 1: 1})
    (_, rep), = flat_reps(a1_tripled, dims, 1)
    cm = j_star(rep, {0, 1})
    assert cm.dims == {0: 2, 1: 1}
    # degree-one corner classes are exactly the arrows; actions must match
    ctx = AlgebraContext(a1, "pi")
    for idx, path in enumerate(ctx.slice_basis_paths(0, 1, 1)):
        assert cm.actions[(1, 0, 1)][idx] == rep.matrix(path[0])
    for v, lid in a1_tripled.loops.items():
        assert cm.z_mats[v] == rep.matrix(lid)


def test_j_star_kills_off_corner_simple(a1_tripled):
    simple = vertex_simple(a1_tripled, 1)
    cm = j_star(simple, {0})
    assert cm.total_dim() == 0


def test_j_star_dims_are_corner_components(a1, a1_tripled):
    dims = DimVector(components={0: 2, 1: 2})
    (_, rep), = flat_reps(a1_tripled, dims, 1)
    cm = j_star(rep, {0})
    assert cm.dims == {0: 2}


def test_j_star_rejects_relation_violation(a1, a1_tripled):
    dims = DimVector(components={0: 1, 1: 1})
    maps = {a.id: ((Fraction(1),),) for a in a1_tripled.arrows}
    rep = QuiverRep(quiver=a1_tripled, dims=dims, maps=maps, field=QQ)
    with pytest.raises(RepresentativeDependence):
        j_star(rep, {0})


def test_j_shriek_of_full_corner_simple(a1):
    cm = cornered_vertex_simple(a1, {0, 1}, 0)
    ext = j_shriek(cm)
    assert ext.dims.as_dict() == {0: 1, 1: 0}
    # all maps vanish: it is the vertex simple
    assert all(
        all(x == 0 for row in ext.matrix(a.id) for x in row)
        for a in ext.quiver.arrows
    )


@pytest.mark.parametrize("label,corner,comps", [
    ("A1", {0}, {0: 2, 1: 1}),
    ("A1", {0, 1}, {0: 1, 1: 2}),
    ("A2", {0}, {0: 1, 1: 1, 2: 1}),
    ("A2", {0, 1}, {0: 1, 1: 1, 2: 2}),
])
def test_round_trip_seeded(label, corner, comps):
    g = build_group(label)
    quiver = triple_quiver(mckay_quiver(g))
    dims = DimVector(components=comps)
    for _, rep in flat_reps(quiver, dims, 5):
        cm = j_star(rep, corner)
        ext = j_shriek(cm)
        back = j_star(ext, corner)
        assert cornered_isomorphic(back, cm)
        for i in corner:
            assert ext.dims.get(i) >= cm.dim(i)


def test_round_trip_nilpotent_z(a1):
    """Hand-built module: nilpotent loop action, higher classes acting zero."""
    corner = frozenset({0})
    gen_deg = generation_degree(a1, corner)
    ctx = AlgebraContext(a1, "pi")
    z = ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0)))
    actions = {}
    for d in range(1, gen_deg + 1):
        n = ctx.slice_dim(0, 0, d)
        actions[(d, 0, 0)] = [
            tuple(tuple(Fraction(0) for _ in range(2)) for _ in range(2))
            for _ in range(n)
        ]
    cm = CorneredModule(group=a1, corner=corner, dims={0: 2}, z_mats={0: z},
                        actions=actions, gen_degree=gen_deg, field=QQ)
    ext = j_shriek(cm)
    back = j_star(ext, corner)
    assert cornered_isomorphic(back, cm)


def test_j_star_exact_on_components(a1, a1_tripled):
    """Restriction is plain vector-space restriction, hence exact: the
    corner dimensions of a submodule and its quotient add up."""
    from mckaykit.rep_theory import (
        generated_submodule,
        quotient_rep,
        restrict_rep,
    )

    dims = DimVector(components={0: 2, 1: 2})
    for _, rep in flat_reps(a1_tripled, dims, 4):
        seeds = {0: [(Fraction(1), Fraction(0))]}
        w = generated_submodule(rep, seeds)
        if w.total() in (0, rep.total_dim()):
            continue
        sub = restrict_rep(rep, w)
        quo = quotient_rep(rep, w)
        for corner in ({0}, {0, 1}):
            a = j_star(sub, corner)
            b = j_star(rep, corner)
            d = j_star(quo, corner)
            for i in corner:
                assert a.dim(i) + d.dim(i) == b.dim(i)


def test_j_shriek_right_exact(a1, a1_tripled):
    """A cornered surjection induces a surjection of extensions."""
    dims = DimVector(components={0: 2, 1: 1})
    corner = frozenset({0})
    checked = 0
    for _, rep in flat_reps(a1_tripled, dims, 6):
        cm = j_star(rep, corner)
        # quotient by the submodule spanned by a closed vector, if any
        spaces = {0: ((Fraction(1), Fraction(0)),)}
        if not cornered_submodule_is_closed(cm, spaces):
            continue
        quo, proj = cornered_quotient(cm, spaces, with_projection=True)
        data_m = j_shriek_with_data(cm)
        data_n = j_shriek_with_data(quo, force_degree=data_m.k_max)
        data_m = j_shriek_with_data(cm, force_degree=data_n.k_max)
        blocks = j_shriek_on_hom(data_m, data_n, proj)
        for v in data_n.rep.quiver.vertices:
            n = data_n.rep.dims.get(v)
            if n:
                assert rank(QQ, list(blocks[v])) == n
        checked += 1
    assert checked >= 2


def test_free_column_torsion_free():
    for label in ["A1", "A2"]:
        g = build_group(label)
        ctx = AlgebraContext(g, "pibullet", corner={0})
        tgm = free_column_tgm(ctx, 0, (0, 5))
        assert is_z_torsion_free(tgm)


def test_z_torsion_of_zero_action(a1):
    ctx = AlgebraContext(a1, "pibullet", corner={0})
    tgm = free_column_tgm(ctx, 0, (0, 3))
    # kill the z action: torsion becomes everything
    tgm.actions = {gid: {k: tuple(tuple(Fraction(0) for _ in row) for row in mat)
                         for k, mat in acts.items()}
                   for gid, acts in tgm.actions.items()}
    torsion = z_torsion(tgm)
    for (k, v), kern in torsion.items():
        assert len(kern) == tgm.dim(k, v)


def test_c_star_examples(a1):
    ctx = AlgebraContext(a1, "pibullet", corner={0})
    tgm = free_column_tgm(ctx, 0, (0, 5))
    out = c_star(tgm)
    # rank-nullity: each degree drops by the rank of the incoming z map
    for k in range(1, 6):
        z = tgm.actions["z0"].get(k - 1)
        zrank = rank(QQ, list(z)) if z else 0
        assert out.dim(k, 0) == tgm.dim(k, 0) - zrank
    # the result matches the plain flavor column (the z = 0 quotient)
    plain = AlgebraContext(a1, "pi")
    expected = tuple(plain.slice_dim(0, 0, k) for k in range(1, 6))
    assert tuple(out.dim(k, 0) for k in range(1, 6)) == expected
    # z acts as zero afterwards
    for k in range(out.window[0], out.window[1]):
        mat = out.actions["z0"].get(k)
        if mat:
            assert all(x == 0 for row in mat for x in row)


def test_c_star_zero_when_z_invertible(a1):
    """A module where z acts as the identity degreewise collapses."""
    dims = {(k, 0): 2 for k in range(4)}
    ident = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    from mckaykit.corner_functors import TruncatedGradedModule

    tgm = TruncatedGradedModule(
        kind_label="cornered",
        window=(0, 3),
        vertices=(0,),
        dims=dims,
        gens={"z0": (0, 0, True)},
        actions={"z0": {k: ident for k in range(3)}},
        field=QQ,
    )
    out = c_star(tgm)
    assert all(out.dim(k, 0) == 0 for k in range(1, 4))
    tors = z_torsion(tgm)
    assert all(len(v) == 0 for v in tors.values())
