import pytest
from hypothesis import given
from hypothesis import strategies as st

from singlet_fusion import catalog, triplet
from singlet_fusion.catalog import FormalSum, UnsupportedOperation
from singlet_fusion.fusion_closed import UnsupportedFusion
from singlet_fusion.labels import Params, rbar, weight

P2 = Params(2)
P3 = Params(3)

params_st = st.integers(min_value=2, max_value=6).map(Params)
r_st = st.integers(min_value=-4, max_value=4)


# --- labels ---------------------------------------------------------------------


def test_lattice_aliasing_at_s_p():
    assert triplet.lattice_v(P3, 1, 3) == triplet.simple_w(P3, 1, 3)
    assert triplet.lattice_v(P3, 2, 2).kind == triplet.LATTICE_V


def test_projective_r_range():
    assert triplet.projective_r(P3, 1, 2).s == 2
    with pytest.raises(ValueError):
        triplet.projective_r(P3, 1, 3)
    with pytest.raises(ValueError):
        triplet.simple_w(P3, 3, 1)


def test_extrapolated_flag():
    assert not triplet.is_extrapolated(P3, triplet.projective_r(P3, 1, 2))
    assert triplet.is_extrapolated(Params(4), triplet.projective_r(Params(4), 1, 1))
    assert not triplet.is_extrapolated(P3, triplet.simple_w(P3, 1, 1))


# --- induction ------------------------------------------------------------------


def test_induce_examples():
    assert triplet.induce(P3, catalog.simple(P3, 3, 2)) == triplet.simple_w(P3, 1, 2)
    assert triplet.induce(P3, catalog.projective(P3, 0, 2)) == triplet.projective_r(
        P3, 2, 2
    )
    assert triplet.induce(P3, catalog.fock(P3, 1, 1)) == triplet.lattice_v(P3, 1, 1)
    # s = p Fock labels normalize to simples before inducing
    assert triplet.induce(P2, catalog.fock(P2, 4, 2)) == triplet.simple_w(P2, 2, 2)


def test_induce_rejects_jordan():
    with pytest.raises(UnsupportedOperation):
        triplet.induce(P2, catalog.jordan_fock(P2, 1, 2))


@given(params_st, r_st, st.data())
def test_induce_collapses_parity_only(params, r, data):
    s = data.draw(st.integers(min_value=1, max_value=params.p))
    got = triplet.induce(params, catalog.simple(params, r, s))
    assert got == triplet.simple_w(params, rbar(r), s)
    shifted = triplet.induce(params, catalog.simple(params, r + 2, s))
    assert got == shifted


def test_induce_sum_termwise():
    assert triplet.induce_sum(P3, FormalSum.zero()) == FormalSum.zero()
    xs = FormalSum.of(catalog.simple(P3, 1, 2), catalog.simple(P3, 2, 2))
    assert triplet.induce_sum(P3, xs) == FormalSum.of(
        triplet.simple_w(P3, 1, 2), triplet.simple_w(P3, 2, 2)
    )
    ps = FormalSum([(catalog.projective(P3, 1, 2), 2)])
    assert triplet.induce_sum(P3, ps) == FormalSum(
        [(triplet.projective_r(P3, 1, 2), 2)]
    )


# --- generator rules ---------------------------------------------------------------


def test_triplet_generator_examples():
    w21 = triplet.simple_w(P3, 2, 1)
    w12 = triplet.simple_w(P3, 1, 2)
    assert triplet.triplet_fuse_generator(P3, w21, triplet.simple_w(P3, 2, 3)) == (
        FormalSum.of(triplet.simple_w(P3, 1, 3))
    )
    assert triplet.triplet_fuse_generator(P3, w12, triplet.simple_w(P3, 1, 3)) == (
        FormalSum.of(triplet.projective_r(P3, 1, 2))
    )
    assert triplet.triplet_fuse_generator(P3, w12, w21) == FormalSum.of(
        triplet.simple_w(P3, 2, 2)
    )


def test_triplet_generator_rejections():
    with pytest.raises(UnsupportedFusion):
        triplet.triplet_fuse_generator(
            P3, triplet.simple_w(P3, 2, 2), triplet.simple_w(P3, 1, 1)
        )
    with pytest.raises(UnsupportedFusion):
        triplet.triplet_fuse_generator(
            P3, triplet.simple_w(P3, 1, 2), triplet.lattice_v(P3, 1, 1)
        )


# --- derived fusion ------------------------------------------------------------------


def test_derived_fusion_examples():
    assert triplet.derived_triplet_fuse(
        P3, triplet.simple_w(P3, 1, 2), triplet.simple_w(P3, 1, 3)
    ) == FormalSum.of(triplet.projective_r(P3, 1, 2))
    assert triplet.derived_triplet_fuse(
        P3, triplet.simple_w(P3, 2, 1), triplet.simple_w(P3, 2, 1)
    ) == FormalSum.of(triplet.simple_w(P3, 1, 1))
    assert triplet.derived_triplet_fuse(
        P2, triplet.simple_w(P2, 1, 2), triplet.simple_w(P2, 1, 2)
    ) == FormalSum.of(triplet.projective_r(P2, 1, 1))


def test_derived_fusion_with_projective_arguments():
    # the self-dual current flips the parity of a projective label
    assert triplet.derived_triplet_fuse(
        P3, triplet.simple_w(P3, 2, 1), triplet.projective_r(P3, 1, 2)
    ) == FormalSum.of(triplet.projective_r(P3, 2, 2))
    # fusing the degenerate generator into the projective cover walks one
    # column down, landing on an extrapolated R label for p >= 3
    got = triplet.derived_triplet_fuse(
        P3, triplet.simple_w(P3, 1, 2), triplet.projective_r(P3, 1, 2)
    )
    extended = triplet.projective_r(P3, 1, 1)
    assert got == FormalSum([(extended, 1), (triplet.simple_w(P3, 1, 3), 2)])
    assert triplet.is_extrapolated(P3, extended)
    # at p = 2 everything collapses onto the s = 2 simples
    got = triplet.derived_triplet_fuse(
        P2, triplet.simple_w(P2, 1, 2), triplet.projective_r(P2, 1, 1)
    )
    assert got == FormalSum(
        [(triplet.simple_w(P2, 1, 2), 2), (triplet.simple_w(P2, 2, 2), 2)]
    )


@given(params_st, st.data())
def test_generator_agreement(params, data):
    rb = data.draw(st.sampled_from((1, 2)))
    s = data.draw(st.integers(min_value=1, max_value=params.p))
    x = triplet.simple_w(params, rb, s)
    for g in (triplet.simple_w(params, 2, 1), triplet.simple_w(params, 1, 2)):
        assert triplet.derived_triplet_fuse(
            params, g, x
        ) == triplet.triplet_fuse_generator(params, g, x)


@given(params_st, st.data())
def test_preimage_independence(params, data):
    def draw_label():
        if data.draw(st.booleans()):
            return triplet.simple_w(
                params,
                data.draw(st.sampled_from((1, 2))),
                data.draw(st.integers(min_value=1, max_value=params.p)),
            )
        return triplet.projective_r(
            params, data.draw(st.sampled_from((1, 2))), params.p - 1
        )

    a, b = draw_label(), draw_label()
    base = triplet.derived_triplet_fuse(params, a, b)
    for sa in (-2, 0, 2):
        for sb in (-2, 0, 2):
            assert triplet.derived_triplet_fuse(params, a, b, sa, sb) == base


def test_preimage_shift_must_be_even():
    with pytest.raises(ValueError):
        triplet.preimage(P3, triplet.simple_w(P3, 1, 1), r_shift=1)


def test_derived_fusion_rejects_lattice():
    with pytest.raises(UnsupportedFusion):
        triplet.derived_triplet_fuse(
            P3, triplet.lattice_v(P3, 1, 1), triplet.simple_w(P3, 1, 1)
        )


# --- structural data -------------------------------------------------------------------


@given(params_st, r_st)
def test_exactness_bookkeeping(params, r):
    # inducing the composition factors of P_{r,p-1} reproduces the factors
    # of R_{rbar,p-1} read off its Loewy diagram
    induced = triplet.induce_sum(
        params,
        catalog.composition_factors(
            params, catalog.projective(params, r, params.p - 1)
        ),
    )
    diagram = triplet.loewy(params, triplet.projective_r(params, rbar(r), params.p - 1))
    assert induced == diagram.factors()


def test_lattice_composition_factors():
    assert triplet.composition_factors(P3, triplet.lattice_v(P3, 1, 1)) == FormalSum.of(
        triplet.simple_w(P3, 1, 1), triplet.simple_w(P3, 2, 2)
    )
    with pytest.raises(UnsupportedOperation):
        triplet.composition_factors(Params(4), triplet.projective_r(Params(4), 1, 1))


def test_triplet_virasoro_decomposition():
    # multiplicities grow as 2n + rbar; the lowest space is rbar-dimensional
    got = triplet.virasoro_decomposition(P2, triplet.simple_w(P2, 2, 1), 1)
    assert got == [(weight(P2, 2, 1), 2), (weight(P2, 4, 1), 4)]
    got = triplet.virasoro_decomposition(P2, triplet.simple_w(P2, 1, 1), 2)
    assert [m for _, m in got] == [1, 3, 5]
    with pytest.raises(UnsupportedOperation):
        triplet.virasoro_decomposition(P3, triplet.lattice_v(P3, 1, 1), 1)
