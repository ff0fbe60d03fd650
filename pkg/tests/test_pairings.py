"""Intersection pairings, duality solves and their exact invariances."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trihodge.diagram import builtin, random_diagram
from trihodge.lattice import det, intmat
from trihodge.pairings import (
    CycleConditionError,
    H2DualRep,
    OneOneCocycle,
    cocycle_from_dual_rep,
    dual_rep_basis,
    evaluate_on_surface_class,
    h1_basis,
    h2_basis_cocycles,
    h3_h1_gram,
    h3_representatives,
    intersection_form,
    intersection_pairing,
    pairing_h3_h1,
    poincare_dual_rep,
    random_coboundary,
    random_cocycle,
    random_cycle_rep,
    triple_intersection,
)

CP2 = builtin("CP2")
S1XS3 = builtin("S1xS3")


def pairing_all_ways(d, x, y):
    lat = d.lattice
    return (
        lat.intersection_number(x.b1, y.b2),
        lat.intersection_number(x.b2, y.b3),
        lat.intersection_number(x.b3, y.b1),
    )


class TestOneOneCocycle:
    def test_component_outside_lagrangian_rejected(self):
        with pytest.raises(ValueError, match="Lagrangian 1"):
            OneOneCocycle(CP2, (0, 1), (0, -1), (0, 0))

    def test_nonzero_sum_rejected(self):
        with pytest.raises(ValueError, match="sum to zero"):
            OneOneCocycle(CP2, (1, 0), (0, 1), (1, 1))

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            OneOneCocycle(CP2, (1, 0, 0), (0, 1), (-1, -1))

    def test_coordinate_round_trip(self):
        x = h2_basis_cocycles(CP2)[0]
        back = OneOneCocycle.from_lagrangian_coordinates(CP2, x.lagrangian_coordinates())
        assert back == x

    def test_algebra(self):
        x = h2_basis_cocycles(CP2)[0]
        assert (x + (-x)).is_zero
        assert x.scale(3).b1 == (3, 0)
        assert (x - x) == OneOneCocycle.zero(CP2)

    def test_cross_diagram_addition_rejected(self):
        x = h2_basis_cocycles(CP2)[0]
        with pytest.raises(ValueError, match="different diagrams"):
            x + OneOneCocycle.zero(builtin("CP2bar"))


class TestBasisCocycles:
    def test_projective_plane_generator(self):
        basis = h2_basis_cocycles(CP2)
        assert len(basis) == 1
        assert basis[0].blocks == ((1, 0), (0, 1), (-1, -1))

    def test_rank_zero_cases(self):
        assert h2_basis_cocycles(S1XS3) == ()
        assert h2_basis_cocycles(builtin("S4")) == ()

    def test_connected_sum_basis_is_blockwise(self):
        basis = h2_basis_cocycles(builtin("CP2#CP2bar"))
        assert len(basis) == 2
        assert basis[0].blocks == ((1, 0, 0, 0), (0, 1, 0, 0), (-1, -1, 0, 0))


class TestIntersectionForm:
    def test_projective_plane(self):
        form = intersection_form(CP2)
        assert form.gram == ((1,),)
        assert form.signature == (1, 0)
        assert form.parity == "odd"
        assert form.unimodular
        assert form.rank == 1

    def test_reversed_projective_plane(self):
        form = intersection_form(builtin("CP2bar"))
        assert form.gram == ((-1,),)
        assert form.signature == (0, 1)

    def test_mixed_connected_sum(self):
        form = intersection_form(builtin("CP2#CP2bar"))
        assert form.gram == ((1, 0), (0, -1))
        assert form.signature == (1, 1)
        assert form.parity == "odd"
        assert form.unimodular

    def test_twisted_candidate_is_odd_definite(self):
        form = intersection_form(builtin("S2xS2_candidate"))
        assert form.gram == ((1, 0), (0, 1))
        assert form.signature == (2, 0)
        assert form.parity == "odd"

    def test_hyperbolic_form_is_even(self):
        form = intersection_form(builtin("S2xS2"))
        assert form.gram == ((0, 1), (1, 0))
        assert form.signature == (1, 1)
        assert form.parity == "even"
        assert form.unimodular

    def test_empty_form(self):
        form = intersection_form(S1XS3)
        assert form.gram == ()
        assert form.signature == (0, 0)
        assert form.unimodular

    def test_pairing_with_zero_cocycle(self):
        x = h2_basis_cocycles(CP2)[0]
        assert intersection_pairing(CP2, x, OneOneCocycle.zero(CP2)) == 0

    def test_pairing_rejects_foreign_cocycle(self):
        x = h2_basis_cocycles(CP2)[0]
        z = OneOneCocycle.zero(builtin("CP2bar"))
        with pytest.raises(ValueError, match="different diagram"):
            intersection_pairing(CP2, x, z)

    def test_three_expressions_on_generator(self):
        x = h2_basis_cocycles(CP2)[0]
        assert pairing_all_ways(CP2, x, x) == (1, 1, 1)


@settings(max_examples=50, deadline=None)
@given(
    genus=st.integers(min_value=1, max_value=3),
    seed=st.integers(0, 10**6),
    draw_seed=st.integers(0, 10**6),
)
def test_pairing_identities_fuzz(genus, seed, draw_seed):
    d = random_diagram(genus, seed)
    rng = random.Random(draw_seed)
    x = random_cocycle(d, rng)
    y = random_cocycle(d, rng)
    values = pairing_all_ways(d, x, y)
    assert values[0] == values[1] == values[2]
    assert intersection_pairing(d, x, y) == intersection_pairing(d, y, x)
    db = random_coboundary(d, rng)
    assert intersection_pairing(d, x + db, y) == intersection_pairing(d, x, y)
    assert intersection_pairing(d, x, y + db) == intersection_pairing(d, x, y)


@settings(max_examples=40, deadline=None)
@given(
    genus=st.integers(min_value=1, max_value=3),
    seed=st.integers(0, 10**6),
    draw_seed=st.integers(0, 10**6),
)
def test_evaluation_invariances_fuzz(genus, seed, draw_seed):
    d = random_diagram(genus, seed)
    rng = random.Random(draw_seed)
    x = random_cocycle(d, rng)
    rep = random_cycle_rep(d, rng)
    base = evaluate_on_surface_class(d, x, rep)
    db = random_coboundary(d, rng)
    assert evaluate_on_surface_class(d, x + db, rep) == base
    # shift each lift by a Lagrangian vector: same class, same value
    shifted = tuple(
        tuple(
            v + w
            for v, w in zip(
                rep.lifts[lam - 1],
                d.lagrangian_subgroup(lam).member_from_coordinates(
                    [rng.randint(-3, 3) for _ in range(genus)]
                ),
            )
        )
        for lam in (1, 2, 3)
    )
    other = H2DualRep(d, rep.coords, shifted)
    assert evaluate_on_surface_class(d, x, other) == base


@settings(max_examples=40, deadline=None)
@given(genus=st.integers(min_value=0, max_value=3), seed=st.integers(0, 10**6))
def test_unimodularity_on_random_diagrams(genus, seed):
    d = random_diagram(genus, seed)
    assert intersection_form(d).unimodular


class TestDualReps:
    def test_from_lifts_round_trip(self):
        rep = H2DualRep.from_lifts(CP2, ((0, 1), (0, 0), (0, 0)))
        assert rep.lifts == ((0, 1), (0, 0), (0, 0))
        again = H2DualRep.from_coords(CP2, rep.coords)
        assert again.coords == rep.coords

    def test_cycle_condition_violation_named(self):
        with pytest.raises(CycleConditionError, match="a1 - a2"):
            H2DualRep.from_lifts(S1XS3, ((1, 0), (0, 0), (0, 0)))

    def test_projection_mismatch_rejected(self):
        with pytest.raises(ValueError, match="does not project"):
            H2DualRep(CP2, ((5,), (0,), (0,)), ((0, 0), (0, 0), (0, 0)))

    def test_evaluation_example(self):
        x = h2_basis_cocycles(CP2)[0]
        rep = H2DualRep.from_lifts(CP2, ((0, 1), (0, 0), (0, 0)))
        assert evaluate_on_surface_class(CP2, x, rep) == 1

    def test_basis_rank_matches_cocycle_basis(self):
        for name in ("S4", "CP2", "S1xS3", "S2xS2", "CP2#CP2bar"):
            d = builtin(name)
            assert len(dual_rep_basis(d)) == len(h2_basis_cocycles(d))


class TestPoincareDuality:
    def test_generator_round_trip(self):
        x = h2_basis_cocycles(CP2)[0]
        K = poincare_dual_rep(CP2, x)
        assert evaluate_on_surface_class(CP2, x, K) == 1

    def test_zero_class_gives_zero_rep(self):
        assert poincare_dual_rep(CP2, OneOneCocycle.zero(CP2)).is_zero

    def test_gram_reproduced_through_duality(self):
        d = builtin("CP2#CP2bar")
        basis = h2_basis_cocycles(d)
        form = intersection_form(d)
        for j, y in enumerate(basis):
            K = poincare_dual_rep(d, y)
            for i, x in enumerate(basis):
                assert evaluate_on_surface_class(d, x, K) == form.gram[i][j]

    def test_inverse_solve_recovers_pairings(self):
        d = builtin("S2xS2")
        basis = h2_basis_cocycles(d)
        rng = random.Random(7)
        rep = random_cycle_rep(d, rng)
        c = cocycle_from_dual_rep(d, rep)
        for x in basis:
            assert intersection_pairing(d, x, c) == evaluate_on_surface_class(d, x, rep)


class TestH3H1Pairing:
    def test_s1_x_s3_value(self):
        assert pairing_h3_h1(S1XS3, (1, 0), (0, 1)) == 1

    def test_representative_shift_invariance(self):
        assert pairing_h3_h1(S1XS3, (1, 1), (0, 1)) == pairing_h3_h1(S1XS3, (1, 0), (0, 1))

    def test_membership_enforced(self):
        with pytest.raises(ValueError, match="all three Lagrangians"):
            pairing_h3_h1(S1XS3, (1, 0), (1, 0))

    def test_projective_plane_vacuous(self):
        assert triple_intersection(CP2).rank == 0
        assert h1_basis(CP2) == ()
        assert h3_representatives(CP2) == ()
        assert pairing_h3_h1(CP2, (1, 0), (0, 0)) == 0

    def test_perfect_on_s1_x_s3(self):
        gram = h3_h1_gram(S1XS3)
        assert abs(det(gram)) == 1

    def test_perfect_whenever_first_betti_positive(self):
        found = 0
        for seed in range(40):
            d = random_diagram(2, seed)
            gram = h3_h1_gram(d)
            if gram.shape[0]:
                found += 1
                assert abs(det(gram)) == 1
        tripled = builtin("S1xS3#S1xS3")
        gram = h3_h1_gram(tripled)
        assert gram.shape == (2, 2)
        assert abs(det(gram)) == 1
        assert found >= 0


def test_random_cocycles_satisfy_invariants():
    rng = random.Random(11)
    d = builtin("S2xS2_candidate")
    for _ in range(25):
        x = random_cocycle(d, rng)
        for lam, b in enumerate(x.blocks, start=1):
            assert d.lagrangian_subgroup(lam).contains(b)
    rep = random_cycle_rep(d, rng)
    assert rep.diagram == d
