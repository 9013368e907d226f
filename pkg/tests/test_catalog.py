from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singlet_fusion import catalog
from singlet_fusion.catalog import (
    FormalSum,
    Indecomposable,
    UnsupportedOperation,
    composition_factors,
    dual,
    fock,
    jordan_fock,
    jordan_fock_matrices,
    loewy,
    loewy_maximal_submodule,
    normalize,
    projective,
    simple,
    virasoro_decomposition,
)
from singlet_fusion.labels import Params

P2 = Params(2)
P3 = Params(3)

params_st = st.integers(min_value=2, max_value=6).map(Params)
r_st = st.integers(min_value=-4, max_value=4)


# --- labels and normalization ------------------------------------------------


def test_aliasing_at_s_p():
    assert projective(P2, 3, 2) == simple(P2, 3, 2)
    assert fock(P2, 3, 2) == simple(P2, 3, 2)
    assert jordan_fock(P3, 0, 1) == simple(P3, 0, 3)
    assert projective(P3, 1, 2).kind == catalog.PROJECTIVE


@given(params_st, r_st, st.data())
def test_normalize_idempotent(params, r, data):
    s = data.draw(st.integers(min_value=1, max_value=params.p))
    for x in (
        simple(params, r, s),
        projective(params, r, s),
        fock(params, r, s),
        jordan_fock(params, r, data.draw(st.integers(min_value=1, max_value=4))),
    ):
        assert normalize(params, x) == x


def test_label_validation():
    with pytest.raises(ValueError):
        simple(P2, 1, 3)
    with pytest.raises(ValueError):
        projective(P2, 1, 0)
    with pytest.raises(ValueError):
        jordan_fock(P2, 1, 0)
    with pytest.raises(ValueError):
        normalize(P3, Indecomposable(catalog.JORDAN_FOCK, 1, 2, 2))


def test_label_string_forms():
    assert str(simple(P2, -1, 2)) == "M:-1,2"
    assert str(jordan_fock(P2, 1, 3)) == "FJ:1,2,3"


# --- formal sums --------------------------------------------------------------


def test_formal_sum_basics():
    a, b = simple(P2, 1, 1), simple(P2, 0, 1)
    s = FormalSum.of(a, b, a)
    assert s.multiplicity(a) == 2 and s.multiplicity(b) == 1
    assert s.total() == 3 and len(s) == 2
    assert s + FormalSum.zero() == s
    assert 2 * s == FormalSum([(a, 4), (b, 2)])
    assert not FormalSum.zero()
    assert str(FormalSum.zero()) == "0"
    assert str(s) == "M:0,1 + 2*M:1,1"


def test_formal_sum_rejects_negative():
    with pytest.raises(ValueError):
        FormalSum([(simple(P2, 1, 1), -1)])
    with pytest.raises(ValueError):
        FormalSum.of(simple(P2, 1, 1)) * (-2)


def test_formal_sum_hashable():
    a = FormalSum.of(simple(P2, 1, 1))
    assert hash(a) == hash(FormalSum.of(simple(P2, 1, 1)))
    assert len({a, FormalSum.of(simple(P2, 1, 1))}) == 1


# --- composition factors and Loewy data ---------------------------------------


def test_composition_factors_examples():
    assert composition_factors(P3, simple(P3, 1, 2)) == FormalSum.of(simple(P3, 1, 2))
    assert composition_factors(P2, projective(P2, 0, 1)) == FormalSum(
        [(simple(P2, 0, 1), 2), (simple(P2, -1, 1), 1), (simple(P2, 1, 1), 1)]
    )
    assert composition_factors(P3, fock(P3, 1, 1)) == FormalSum.of(
        simple(P3, 1, 1), simple(P3, 2, 2)
    )
    assert composition_factors(P2, jordan_fock(P2, 1, 3)) == FormalSum(
        [(simple(P2, 1, 2), 3)]
    )


@given(params_st, r_st, st.data())
def test_projective_length_four(params, r, data):
    s = data.draw(st.integers(min_value=1, max_value=params.p))
    total = composition_factors(params, projective(params, r, s)).total()
    assert total == (4 if s < params.p else 1)


def test_loewy_shapes():
    d = loewy(P2, projective(P2, 1, 1))
    assert [layer.terms for layer in d.layers] == [
        FormalSum.of(simple(P2, 1, 1)).terms,
        FormalSum.of(simple(P2, 0, 1), simple(P2, 2, 1)).terms,
        FormalSum.of(simple(P2, 1, 1)).terms,
    ]
    assert len(d.edges) == 4
    assert loewy(P3, simple(P3, 3, 2)).layers == (FormalSum.of(simple(P3, 3, 2)),)
    f = loewy(P2, fock(P2, 0, 1))
    assert f.layers == (
        FormalSum.of(simple(P2, 1, 1)),
        FormalSum.of(simple(P2, 0, 1)),
    )


def test_loewy_rejects_jordan():
    with pytest.raises(UnsupportedOperation):
        loewy(P2, jordan_fock(P2, 1, 2))


@given(params_st, r_st, st.data())
def test_loewy_flattens_to_composition_factors(params, r, data):
    s = data.draw(st.integers(min_value=1, max_value=params.p))
    for x in (simple(params, r, s), projective(params, r, s), fock(params, r, s)):
        assert loewy(params, x).factors() == composition_factors(params, x)


def test_maximal_submodule_diagram():
    z = loewy_maximal_submodule(P3, 0, 2)
    assert z.layers == (
        FormalSum.of(simple(P3, -1, 1), simple(P3, 1, 1)),
        FormalSum.of(simple(P3, 0, 2)),
    )
    with pytest.raises(ValueError):
        loewy_maximal_submodule(P3, 0, 3)


# --- duals ---------------------------------------------------------------------


def test_dual_examples():
    assert dual(P3, simple(P3, 1, 2)) == simple(P3, 1, 2)
    assert dual(P3, simple(P3, 3, 2)) == simple(P3, -1, 2)
    assert dual(P3, projective(P3, 0, 1)) == projective(P3, 2, 1)
    with pytest.raises(UnsupportedOperation):
        dual(P3, fock(P3, 1, 1))
    with pytest.raises(UnsupportedOperation):
        dual(P2, jordan_fock(P2, 1, 2))


@given(params_st, r_st, st.data())
def test_dual_involution_and_fixed_points(params, r, data):
    s = data.draw(st.integers(min_value=1, max_value=params.p))
    for x in (simple(params, r, s), projective(params, r, s)):
        d = dual(params, x)
        assert dual(params, d) == x
        assert d.kind == x.kind and d.s == x.s
        assert (d == x) == (x.r == 1)


# --- Virasoro decompositions ---------------------------------------------------


def test_virasoro_decomposition_positive_r():
    # h_{2n+1,1} = n((n+1)p - 1): 0, 3, 10 at p = 2
    got = virasoro_decomposition(P2, simple(P2, 1, 1), 2)
    assert got == [(0, 1), (3, 1), (10, 1)]


def test_virasoro_decomposition_negative_r():
    got = virasoro_decomposition(P2, simple(P2, 0, 1), 1)
    assert got == [(Fraction(1), 1), (Fraction(6), 1)]
    from singlet_fusion.labels import lowest_weight_of_simple

    assert got[0][0] == lowest_weight_of_simple(P2, 0, 1)


@given(params_st, r_st, st.data())
def test_virasoro_truncation_starts_at_lowest_weight(params, r, data):
    from singlet_fusion.labels import lowest_weight_of_simple

    s = data.draw(st.integers(min_value=1, max_value=params.p))
    got = virasoro_decomposition(params, simple(params, r, s), 0)
    assert got == [(lowest_weight_of_simple(params, r, s), 1)]


def test_virasoro_rejects_non_simple():
    with pytest.raises(UnsupportedOperation):
        virasoro_decomposition(P3, projective(P3, 1, 1), 2)


# --- Jordan Fock matrices -------------------------------------------------------


def _is_scalar(m):
    n = len(m)
    return all(m[i][j] == (m[0][0] if i == j else 0) for i in range(n) for j in range(n))


def _is_zero(m):
    return all(e == 0 for row in m for e in row)


def _is_nilpotent(m):
    power = m
    for _ in range(len(m)):
        if _is_zero(power):
            return True
        power = catalog._mul(power, m)
    return _is_zero(power)


def test_jordan_matrices_p2_witnesses():
    a, l0, h0 = jordan_fock_matrices(P2, 1, 2)
    assert a == ((Fraction(1), Fraction(2)), (Fraction(0), Fraction(1)))
    assert l0 == ((Fraction(-1, 8), 0), (0, Fraction(-1, 8)))
    assert h0 == ((0, Fraction(-1, 3)), (0, 0))


def test_jordan_matrices_r2_not_scalar():
    _, l0, _ = jordan_fock_matrices(P2, 2, 2)
    assert not _is_scalar(l0)
    assert l0[0][1] != 0


def test_jordan_matrices_need_n_at_least_2():
    with pytest.raises(ValueError):
        jordan_fock_matrices(P2, 1, 1)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("r", [-1, 0, 1, 2])
@pytest.mark.parametrize("n", [2, 3])
def test_jordan_matrices_structure(p, r, n):
    params = Params(p)
    _, l0, h0 = jordan_fock_matrices(params, r, n)
    assert catalog._mul(l0, h0) == catalog._mul(h0, l0)
    if r != 1:
        # the Jordan block survives in L0: a full-rank nilpotent part
        assert not _is_scalar(l0)
        off = catalog._add(l0, catalog._scale(-l0[0][0], catalog._identity(n)))
        assert all(off[i][i + 1] != 0 for i in range(n - 1))
    else:
        assert _is_nilpotent(h0) and not _is_zero(h0)
        if n == 2:
            assert _is_scalar(l0)
        else:
            # at the critical point the linear term vanishes but the
            # quadratic one does not: L0 - h*(Id) = N^2/p for r = 1, so the
            # action stops being scalar as soon as n >= 3
            assert not _is_scalar(l0)


def test_jordan_scalar_part_is_the_module_weight():
    from singlet_fusion.labels import lowest_weight_of_simple, weight

    for p in (2, 3):
        params = Params(p)
        for r in (-1, 0, 1, 2):
            _, l0, _ = jordan_fock_matrices(params, r, 2)
            # the diagonal is h_{r,p}, which at s = p is also the module's
            # lowest weight for either sign of r
            assert l0[0][0] == weight(params, r, params.p)
            assert l0[0][0] == lowest_weight_of_simple(params, r, params.p)
