"""Framed representations: relations, submodules, stability, decomposition."""

from fractions import Fraction

import pytest

from helpers import conjugated_copy, flat_reps
from mckaykit.errors import (
    BadPrime,
    DimensionTooLarge,
    NotSemistable,
    ShapeMismatch,
    UnsupportedTheta,
)
from mckaykit.gamma_data import build_group
from mckaykit.linalg import QQ
from mckaykit.quiver_core import (
    INFINITY,
    DimVector,
    frame_quiver,
    mckay_quiver,
    theta_I,
)
from mckaykit.rep_theory import (
    QuiverRep,
    are_isomorphic,
    brute_force_stability,
    check_relations,
    direct_sum,
    generated_submodule,
    is_flat,
    is_semistable,
    is_stable,
    make_rep,
    max_submodule_avoiding,
    polystable_decomposition,
    reduce_mod_p,
    s_equivalent,
    stability_verdict,
    vertex_simple,
    zero_rep,
)


@pytest.fixture(scope="module")
def a1_framed():
    g = build_group("A1")
    return frame_quiver(mckay_quiver(g), {0: 1})


@pytest.fixture(scope="module")
def dims11():
    return DimVector(components={0: 1, 1: 1}, at_infinity=1)


def test_zero_maps_flat(a1_framed, dims11):
    rep = zero_rep(a1_framed, dims11)
    assert is_flat(rep)
    assert all(
        all(x == 0 for row in mat for x in row)
        for mat in check_relations(rep).values()
    )


def test_generic_scalars_violate_relations(a1_framed, dims11):
    maps = {}
    for a in a1_framed.arrows:
        if a.tail == INFINITY or a.head == INFINITY:
            maps[a.id] = ((Fraction(0),),)
        else:
            maps[a.id] = ((Fraction(1),),)
    rep = make_rep(a1_framed, dims11, maps)
    assert not is_flat(rep)


def test_shape_mismatch(a1_framed, dims11):
    maps = {a1_framed.arrows[0].id: ((Fraction(1), Fraction(0)),)}
    with pytest.raises(ShapeMismatch):
        make_rep(a1_framed, dims11, maps)


def test_generated_submodule_trivial_cases(a1_framed, dims11):
    from mckaykit.rep_theory import witness_is_closed

    rep = zero_rep(a1_framed, dims11)
    empty = generated_submodule(rep, {})
    assert empty.total() == 0
    seeds = {INFINITY: [(Fraction(1),)]}
    w = generated_submodule(rep, seeds)
    assert w.dims_dict() == {0: 0, 1: 0, INFINITY: 1}
    assert witness_is_closed(rep, w)
    for _, rnd in flat_reps(a1_framed, dims11, 3):
        witness = generated_submodule(rnd, seeds)
        assert witness_is_closed(rnd, witness)
    full = generated_submodule(
        rep,
        {
            v: [
                tuple(
                    Fraction(1) if i == j else Fraction(0)
                    for j in range(rep.dims.get(v))
                )
                for i in range(rep.dims.get(v))
            ]
            for v in rep.quiver.vertices
        },
    )
    assert full.total() == rep.total_dim()


def test_max_submodule_avoiding(a1_framed, dims11):
    rep = zero_rep(a1_framed, dims11)
    assert max_submodule_avoiding(rep, set(rep.quiver.vertices)).total() == 0
    assert max_submodule_avoiding(rep, set()).total() == rep.total_dim()
    w = max_submodule_avoiding(rep, {INFINITY})
    assert w.dims_dict() == {0: 1, 1: 1, INFINITY: 0}


def test_infinity_only_module_stable(a1_framed):
    dims = DimVector(components={0: 0, 1: 0}, at_infinity=1)
    rep = zero_rep(a1_framed, dims)
    theta = theta_I({0}, dims)
    assert is_semistable(rep, theta)
    assert is_stable(rep, theta)


def test_zero_maps_not_semistable(a1_framed, dims11):
    rep = zero_rep(a1_framed, dims11)
    theta = theta_I({0, 1}, dims11)
    semis, stable, witness = stability_verdict(rep, theta)
    assert (semis, stable) == (False, False)
    # brute-force agreement on the reduced module
    reduced = reduce_mod_p(rep, 2)
    bs, bst, violations = brute_force_stability(reduced, theta)
    assert (bs, bst) == (False, False)
    assert violations


def test_unsupported_theta(a1_framed, dims11):
    from mckaykit.quiver_core import StabilityParam

    rep = zero_rep(a1_framed, dims11)
    bad = StabilityParam(values={0: Fraction(2), 1: Fraction(0),
                                 INFINITY: Fraction(-2)})
    with pytest.raises(UnsupportedTheta):
        is_semistable(rep, bad)


def test_brute_force_guards(a1_framed):
    dims = DimVector(components={0: 5, 1: 4}, at_infinity=1)
    rep = zero_rep(a1_framed, dims)
    theta = theta_I({0}, dims)
    with pytest.raises(BadPrime):
        brute_force_stability(rep, theta)  # not reduced
    reduced = reduce_mod_p(rep, 2)
    with pytest.raises(DimensionTooLarge):
        brute_force_stability(reduced, theta)


def test_brute_force_vacuous_stability(a1_framed):
    dims = DimVector(components={0: 0, 1: 0}, at_infinity=1)
    rep = reduce_mod_p(zero_rep(a1_framed, dims), 2)
    theta = theta_I({0}, dims)
    semis, stable, violations = brute_force_stability(rep, theta)
    assert semis and stable
    assert violations == []


def test_vertex_simple_summand_blocks_stability(a1_framed, dims11):
    theta = theta_I({0}, dims11)
    reps = flat_reps(a1_framed, DimVector(components={0: 1, 1: 0},
                                          at_infinity=1), 6)
    for _, rep in reps:
        if not is_stable(rep, theta_I({0}, rep.dims)):
            continue
        big = direct_sum(rep, vertex_simple(a1_framed, 1))
        th = theta_I({0}, big.dims)
        assert is_semistable(big, th)
        assert not is_stable(big, th)
        return
    pytest.fail("no stable seed found")


def test_specialized_vs_brute_force_sample(a1_framed, dims11):
    theta = theta_I({0, 1}, dims11)
    count = 0
    for seed, rep in flat_reps(a1_framed, dims11, 25):
        for p in (2, 3):
            try:
                reduced = reduce_mod_p(rep, p)
            except BadPrime:
                continue
            got = stability_verdict(reduced, theta)[:2]
            want = brute_force_stability(reduced, theta)[:2]
            assert got == want, (seed, p)
            count += 1
    assert count >= 25


def test_cyclicity_criterion_for_full_corner(a1_framed, dims11):
    """For the full corner, stability collapses to the generation check."""
    theta = theta_I({0, 1}, dims11)
    for _, rep in flat_reps(a1_framed, dims11, 15):
        field = rep.field
        seeds = {INFINITY: [(field.one,)]}
        gen = generated_submodule(rep, seeds)
        cyclic = gen.total() == rep.total_dim()
        assert is_stable(rep, theta) == cyclic


def test_polystable_decomposition(a1_framed, dims11):
    theta0 = theta_I({0}, dims11)
    stable_rep = None
    for _, rep in flat_reps(a1_framed, dims11, 30):
        if is_stable(rep, theta0):
            stable_rep = rep
            break
    assert stable_rep is not None
    # already stable: single summand isomorphic to the input
    summands = polystable_decomposition(stable_rep, {0})
    assert len(summands) == 1
    assert are_isomorphic(summands[0], stable_rep)
    # direct sum with a vertex simple off the corner
    simple = vertex_simple(a1_framed, 1)
    big = direct_sum(stable_rep, simple)
    parts = polystable_decomposition(big, {0})
    assert len(parts) == 2
    totals = {}
    for m in parts:
        for v, d in m.dims.as_dict().items():
            totals[v] = totals.get(v, 0) + d
    assert totals == big.dims.as_dict()
    assert is_stable(parts[0], theta_I({0}, parts[0].dims))
    assert any(are_isomorphic(m, simple) for m in parts[1:])


def test_polystable_requires_semistable(a1_framed, dims11):
    rep = zero_rep(a1_framed, dims11)
    with pytest.raises(NotSemistable):
        polystable_decomposition(rep, {0, 1})


def test_s_equivalence_reflexive_symmetric(a1_framed, dims11):
    for _, rep in flat_reps(a1_framed, dims11, 5):
        if not is_semistable(rep, theta_I({0}, dims11)):
            continue
        parts = polystable_decomposition(rep, {0})
        assert s_equivalent(parts, parts)
        assert s_equivalent(list(reversed(parts)), parts)


def test_are_isomorphic(a1_framed, dims11):
    reps = flat_reps(a1_framed, dims11, 4)
    _, a = reps[0]
    assert are_isomorphic(a, a)
    # different dimension vectors
    other = zero_rep(a1_framed, DimVector(components={0: 2, 1: 1}, at_infinity=1))
    assert not are_isomorphic(a, other)
    # base change round trip
    twisted = conjugated_copy(a, seed=5)
    assert is_flat(twisted)
    assert are_isomorphic(a, twisted)


def test_reduce_mod_p_bad_prime(a1_framed, dims11):
    maps = {}
    for arr in a1_framed.arrows:
        r, c = dims11.get(arr.tail), dims11.get(arr.head)
        maps[arr.id] = tuple(tuple(Fraction(0) for _ in range(c)) for _ in range(r))
    first = a1_framed.arrows[0]
    maps[first.id] = ((Fraction(1, 2),),)
    rep = QuiverRep(quiver=a1_framed, dims=dims11, maps=maps, field=QQ)
    with pytest.raises(BadPrime):
        reduce_mod_p(rep, 2)
    reduce_mod_p(rep, 3)  # fine
