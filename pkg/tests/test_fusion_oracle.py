import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singlet_fusion import fusion_closed
from singlet_fusion.catalog import FormalSum, projective, simple
from singlet_fusion.fusion_closed import UnsupportedFusion
from singlet_fusion.fusion_oracle import (
    NegativeMultiplicityError,
    ks_subtract,
    oracle_fuse_mm,
    oracle_fuse_p,
    oracle_fuse_with_column,
)
from singlet_fusion.labels import Params

P2 = Params(2)
P3 = Params(3)

params_st = st.integers(min_value=2, max_value=6).map(Params)
r_st = st.integers(min_value=-3, max_value=3)


# --- Krull-Schmidt subtraction ------------------------------------------------


def test_ks_subtract_examples():
    a = FormalSum([(simple(P3, 1, 1), 1), (simple(P3, 1, 3), 2)])
    b = FormalSum.of(simple(P3, 1, 3))
    assert ks_subtract(a, b) == FormalSum.of(simple(P3, 1, 1), simple(P3, 1, 3))
    assert ks_subtract(a, a) == FormalSum.zero()


def test_ks_subtract_raises_and_reports():
    a = FormalSum.of(simple(P3, 1, 1))
    b = FormalSum.of(simple(P3, 2, 1))
    with pytest.raises(NegativeMultiplicityError) as err:
        ks_subtract(a, b)
    assert err.value.ledger.minuend == a
    assert err.value.ledger.subtrahend == b
    assert err.value.label == simple(P3, 2, 1)


@given(params_st, st.data())
def test_ks_subtract_roundtrip(params, data):
    labels = st.tuples(r_st, st.integers(min_value=1, max_value=params.p)).map(
        lambda t: simple(params, *t)
    )
    a = FormalSum(data.draw(st.lists(st.tuples(labels, st.integers(1, 3)), max_size=5)))
    b = FormalSum(data.draw(st.lists(st.tuples(labels, st.integers(1, 3)), max_size=5)))
    assert ks_subtract(a + b, b) == a


# --- column recursion ------------------------------------------------------------


@given(params_st, st.data())
def test_column_on_unit_gives_the_column(params, data):
    s = data.draw(st.integers(min_value=1, max_value=params.p))
    got = oracle_fuse_with_column(params, FormalSum.of(simple(params, 1, 1)), s)
    assert got == FormalSum.of(simple(params, 1, s))


def test_column_examples():
    got = oracle_fuse_with_column(P3, FormalSum.of(simple(P3, 1, 2)), 3)
    assert got == fusion_closed.fuse_mm(P3, simple(P3, 1, 2), simple(P3, 1, 3))
    assert got == FormalSum.of(projective(P3, 1, 2))
    got = oracle_fuse_with_column(P2, FormalSum.of(projective(P2, 1, 1)), 2)
    assert got == fusion_closed.fuse_pm(P2, projective(P2, 1, 1), simple(P2, 1, 2))


def test_column_validates_inputs():
    with pytest.raises(ValueError):
        oracle_fuse_with_column(P2, FormalSum.of(simple(P2, 1, 1)), 3)
    from singlet_fusion.catalog import fock

    with pytest.raises(UnsupportedFusion):
        oracle_fuse_with_column(P3, FormalSum.of(fock(P3, 1, 1)), 2)


# --- oracle vs closed forms -------------------------------------------------------


def test_oracle_mm_examples():
    assert oracle_fuse_mm(P3, simple(P3, 2, 1), simple(P3, 0, 1)) == FormalSum.of(
        simple(P3, 1, 1)
    )
    assert oracle_fuse_mm(P2, simple(P2, 1, 2), simple(P2, 1, 2)) == FormalSum.of(
        projective(P2, 1, 1)
    )


def test_oracle_p_examples():
    assert oracle_fuse_p(P2, projective(P2, 1, 1), projective(P2, 1, 1)) == FormalSum(
        [
            (projective(P2, 1, 1), 2),
            (projective(P2, 2, 1), 1),
            (projective(P2, 0, 1), 1),
        ]
    )
    assert oracle_fuse_p(P3, projective(P3, 1, 1), simple(P3, 1, 1)) == FormalSum.of(
        projective(P3, 1, 1)
    )
    assert oracle_fuse_p(P3, projective(P3, 1, 2), simple(P3, 0, 2)) == (
        fusion_closed.fuse_pm(P3, projective(P3, 1, 2), simple(P3, 0, 2))
    )


def test_oracle_p_requires_projective():
    with pytest.raises(UnsupportedFusion):
        oracle_fuse_p(P3, simple(P3, 1, 1), simple(P3, 1, 1))


@given(params_st, st.data())
@settings(max_examples=120)
def test_oracle_equivalence_sampled(params, data):
    ra, rb = data.draw(r_st), data.draw(r_st)
    sa = data.draw(st.integers(min_value=1, max_value=params.p))
    sb = data.draw(st.integers(min_value=1, max_value=params.p))
    a, b = simple(params, ra, sa), simple(params, rb, sb)
    assert oracle_fuse_mm(params, a, b) == fusion_closed.fuse_mm(params, a, b)
    if sa <= params.p - 1:
        pa = projective(params, ra, sa)
        assert oracle_fuse_p(params, pa, b) == fusion_closed.fuse_pm(params, pa, b)
        if sb <= params.p - 1:
            pb = projective(params, rb, sb)
            assert oracle_fuse_p(params, pa, pb) == fusion_closed.fuse_pp(
                params, pa, pb
            )


def test_oracle_never_touches_closed_forms(monkeypatch):
    # the recursion must stay independent of the formulas it validates;
    # patch the closed forms on both modules so direct imports would trip too
    def boom(*args, **kwargs):
        raise AssertionError("oracle called a closed-form product")

    import singlet_fusion.fusion_oracle as oracle_mod

    oracle_mod._column.cache_clear()
    for name in ("fuse_mm", "fuse_pm", "fuse_pp", "fuse"):
        monkeypatch.setattr(fusion_closed, name, boom)
        monkeypatch.setattr(oracle_mod, name, boom, raising=False)
    got = oracle_fuse_p(P3, projective(P3, 1, 2), projective(P3, 2, 1))
    assert got.total() > 0
    got_mm = oracle_fuse_mm(P2, simple(P2, 1, 2), simple(P2, 1, 2))
    assert got_mm == FormalSum.of(projective(P2, 1, 1))
    oracle_mod._column.cache_clear()


def test_concurrent_calls_match_serial_results():
    from concurrent.futures import ThreadPoolExecutor

    import singlet_fusion.fusion_oracle as oracle_mod

    params = Params(5)
    pairs = [
        (simple(params, ra, sa), simple(params, rb, sb))
        for ra in (-1, 0, 2)
        for rb in (-2, 1)
        for sa in range(1, 6)
        for sb in range(1, 6)
    ]
    oracle_mod._column.cache_clear()
    serial = [oracle_fuse_mm(params, a, b) for a, b in pairs]
    oracle_mod._column.cache_clear()
    with ThreadPoolExecutor(max_workers=8) as pool:
        parallel = list(pool.map(lambda ab: oracle_fuse_mm(params, *ab), pairs))
    assert serial == parallel


def test_memo_consistency_between_orders():
    import singlet_fusion.fusion_oracle as oracle_mod

    oracle_mod._column.cache_clear()
    first = oracle_fuse_mm(P3, simple(P3, 1, 3), simple(P3, 1, 3))
    again = oracle_fuse_mm(P3, simple(P3, 1, 3), simple(P3, 1, 3))
    oracle_mod._column.cache_clear()
    cold = oracle_fuse_mm(P3, simple(P3, 1, 3), simple(P3, 1, 3))
    assert first == again == cold
