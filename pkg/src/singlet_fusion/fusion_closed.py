"""Closed-form fusion products of singlet indecomposables.

The three general product formulas (simple x simple, projective x simple,
projective x projective) are transcribed directly; every sum is over an
integer window with a parity constraint, and is empty whenever its lower
bound exceeds its upper bound.  ``P(r, p)`` normalizes to ``M(r, p)`` inside
every sum, so the formulas compose without case splits.

:func:`fuse_generators` is the separate transcription of the generator
rules (fusion with the simple currents ``M_{2n+1,1}`` and ``M_{2,1}``, and
with ``M_{1,2}``); the recursion oracle in :mod:`.fusion_oracle` is built
on those rules alone and never touches the closed forms, which is what
makes the two routes independent.
"""

from __future__ import annotations

from typing import Union

from .catalog import (
    FOCK,
    JORDAN_FOCK,
    PROJECTIVE,
    SIMPLE,
    FormalSum,
    Indecomposable,
    composition_factors,
    fock,
    projective,
    simple,
)
from .labels import Params

__all__ = [
    "UnsupportedFusion",
    "fuse_mm",
    "fuse_pm",
    "fuse_pp",
    "fuse_generators",
    "fuse",
    "flatten",
    "grothendieck_product",
]


class UnsupportedFusion(ValueError):
    """Raised for products the catalog does not define (e.g. ``F x F``)."""


def _require(x: Indecomposable, kind: str, what: str) -> None:
    if x.kind != kind:
        raise UnsupportedFusion(f"{what} expected a {kind} label, got {x}")


def _require_proj(params: Params, x: Indecomposable, what: str) -> None:
    _require(x, PROJECTIVE, what)
    if not 1 <= x.s <= params.p - 1:
        # P(r, p) aliases M(r, p); a stored P label outside 1..p-1 was
        # built around the normalizing constructors
        raise UnsupportedFusion(f"{what} got an unnormalized projective {x}")


def fuse_mm(params: Params, a: Indecomposable, b: Indecomposable) -> FormalSum:
    """Fusion ``M_{r,s} x M_{r',s'}``.

    Simple part: ``M_{r+r'-1, l}`` for ``l = |s-s'|+1 .. min(s+s'-1, 2p-1-s-s')``;
    projective part: ``P_{r+r'-1, l}`` for ``l = 2p+1-s-s' .. p``; both with
    ``l + s + s'`` odd.
    """
    _require(a, SIMPLE, "fuse_mm")
    _require(b, SIMPLE, "fuse_mm")
    p = params.p
    r = a.r + b.r - 1
    s, t = a.s, b.s
    out = []
    for ell in range(abs(s - t) + 1, min(s + t - 1, 2 * p - 1 - s - t) + 1):
        if (ell + s + t) % 2 == 1:
            out.append(simple(params, r, ell))
    for ell in range(2 * p + 1 - s - t, p + 1):
        if (ell + s + t) % 2 == 1:
            out.append(projective(params, r, ell))
    return FormalSum.of(*out)


def fuse_pm(params: Params, a: Indecomposable, b: Indecomposable) -> FormalSum:
    """Fusion ``P_{r,s} x M_{r',s'}`` with ``1 <= s <= p-1``.

    Three windows, all projective (modulo ``P(., p) = M(., p)``):
    ``P_{r+r'-1, l}`` for ``l = |s-s'|+1 .. min(s+s'-1, p)`` and for
    ``l = 2p+1-s-s' .. p`` (both with ``l+s+s'`` odd), plus
    ``P_{r+r', l} + P_{r+r'-2, l}`` for ``l = p+s-s'+1 .. p`` with
    ``l+p+s+s'`` odd.
    """
    _require_proj(params, a, "fuse_pm")
    _require(b, SIMPLE, "fuse_pm")
    p = params.p
    r = a.r + b.r - 1
    s, t = a.s, b.s
    out = []
    for ell in range(abs(s - t) + 1, min(s + t - 1, p) + 1):
        if (ell + s + t) % 2 == 1:
            out.append(projective(params, r, ell))
    for ell in range(2 * p + 1 - s - t, p + 1):
        if (ell + s + t) % 2 == 1:
            out.append(projective(params, r, ell))
    for ell in range(p + s - t + 1, p + 1):
        if (ell + p + s + t) % 2 == 1:
            out.append(projective(params, a.r + b.r, ell))
            out.append(projective(params, a.r + b.r - 2, ell))
    return FormalSum.of(*out)


def fuse_pp(params: Params, a: Indecomposable, b: Indecomposable) -> FormalSum:
    """Fusion ``P_{r,s} x P_{r',s'}`` with ``1 <= s, s' <= p-1``.

    Six windows: twice the three windows of :func:`fuse_pm`, plus the three
    extra windows

    * ``P_{r+r', l} + P_{r+r'-2, l}`` for ``l = |s+s'-p|+1 .. min(s-s'+p-1, p)``,
    * ``P_{r+r', l} + P_{r+r'-2, l}`` for ``l = p-s+s'+1 .. p``
      (both with ``l+p+s+s'`` odd),
    * ``P_{r+r'+1, l} + 2 P_{r+r'-1, l} + P_{r+r'-3, l}`` for
      ``l = s+s'+1 .. p`` with ``l+s+s'`` odd.

    Symmetric under swapping the two factors.
    """
    _require_proj(params, a, "fuse_pp")
    _require_proj(params, b, "fuse_pp")
    p = params.p
    rr = a.r + b.r
    s, t = a.s, b.s
    pairs = []  # (label, multiplicity)
    for ell in range(abs(s - t) + 1, min(s + t - 1, p) + 1):
        if (ell + s + t) % 2 == 1:
            pairs.append((projective(params, rr - 1, ell), 2))
    for ell in range(2 * p + 1 - s - t, p + 1):
        if (ell + s + t) % 2 == 1:
            pairs.append((projective(params, rr - 1, ell), 2))
    for ell in range(p + s - t + 1, p + 1):
        if (ell + p + s + t) % 2 == 1:
            pairs.append((projective(params, rr, ell), 2))
            pairs.append((projective(params, rr - 2, ell), 2))
    for ell in range(abs(s + t - p) + 1, min(s - t + p - 1, p) + 1):
        if (ell + p + s + t) % 2 == 1:
            pairs.append((projective(params, rr, ell), 1))
            pairs.append((projective(params, rr - 2, ell), 1))
    for ell in range(p - s + t + 1, p + 1):
        if (ell + p + s + t) % 2 == 1:
            pairs.append((projective(params, rr, ell), 1))
            pairs.append((projective(params, rr - 2, ell), 1))
    for ell in range(s + t + 1, p + 1):
        if (ell + s + t) % 2 == 1:
            pairs.append((projective(params, rr + 1, ell), 1))
            pairs.append((projective(params, rr - 1, ell), 2))
            pairs.append((projective(params, rr - 3, ell), 1))
    return FormalSum(pairs)


def fuse_generators(
    params: Params, g: Indecomposable, x: Indecomposable
) -> FormalSum:
    """Fusion with one of the generators ``M_{2n+1,1}``, ``M_{2,1}``, ``M_{1,2}``.

    The rules, by generator:

    * ``M_{2n+1,1}`` (odd simple currents): shift ``r`` by ``2n`` on simples,
      projectives, and Fock modules alike.
    * ``M_{2,1}`` (simple current): shift ``r`` by one on simples and
      projectives; not defined on Fock modules.
    * ``M_{1,2}``: on ``M_{r,s}`` gives ``M_{r,2}`` (s = 1),
      ``M_{r,s-1} + M_{r,s+1}`` (1 < s < p), ``P_{r,p-1}`` (s = p).  On
      ``P_{r,s}`` gives, for p >= 3: ``P_{r,2} + M_{r+1,p} + M_{r-1,p}``
      (s = 1), ``P_{r,s-1} + P_{r,s+1}`` (1 < s < p-1),
      ``P_{r,p-2} + 2 M_{r,p}`` (s = p-1); for p = 2:
      ``M_{r+1,2} + 2 M_{r,2} + M_{r-1,2}``.

    Anything else raises :class:`UnsupportedFusion`.
    """
    p = params.p
    if g.kind != SIMPLE:
        raise UnsupportedFusion(f"unsupported generator {g}")
    if x.kind == JORDAN_FOCK:
        raise UnsupportedFusion(f"no fusion data for Jordan Fock labels ({x})")

    if g.s == 1 and g.r % 2 == 1:
        shift = g.r - 1
        if x.kind == SIMPLE:
            return FormalSum.of(simple(params, x.r + shift, x.s))
        if x.kind == PROJECTIVE:
            return FormalSum.of(projective(params, x.r + shift, x.s))
        if x.kind == FOCK:
            return FormalSum.of(fock(params, x.r + shift, x.s))

    if (g.r, g.s) == (2, 1):
        if x.kind == SIMPLE:
            return FormalSum.of(simple(params, x.r + 1, x.s))
        if x.kind == PROJECTIVE:
            return FormalSum.of(projective(params, x.r + 1, x.s))
        raise UnsupportedFusion(f"M:2,1 fusion is not defined on {x}")

    if (g.r, g.s) == (1, 2):
        if x.kind == SIMPLE:
            if x.s == p:
                return FormalSum.of(projective(params, x.r, p - 1))
            if x.s == 1:
                return FormalSum.of(simple(params, x.r, 2))
            return FormalSum.of(simple(params, x.r, x.s - 1), simple(params, x.r, x.s + 1))
        if x.kind == PROJECTIVE:  # stored projectives always have s <= p-1
            if p == 2:
                return FormalSum.of(
                    projective(params, x.r + 1, 2),
                    projective(params, x.r, 2),
                    projective(params, x.r, 2),
                    projective(params, x.r - 1, 2),
                )
            if x.s == 1:
                return FormalSum.of(
                    projective(params, x.r, 2),
                    projective(params, x.r + 1, p),
                    projective(params, x.r - 1, p),
                )
            if x.s == p - 1:
                return FormalSum.of(
                    projective(params, x.r, p - 2),
                    projective(params, x.r, p),
                    projective(params, x.r, p),
                )
            return FormalSum.of(
                projective(params, x.r, x.s - 1), projective(params, x.r, x.s + 1)
            )
        raise UnsupportedFusion(f"M:1,2 fusion is not defined on {x}")

    raise UnsupportedFusion(f"unsupported generator {g}")


_SumLike = Union[FormalSum, Indecomposable]


def _as_sum(x: _SumLike) -> FormalSum:
    if isinstance(x, Indecomposable):
        return FormalSum.of(x)
    return x


def _fuse_pair(params: Params, x: Indecomposable, y: Indecomposable) -> FormalSum:
    kx, ky = x.kind, y.kind
    if kx == SIMPLE and ky == SIMPLE:
        return fuse_mm(params, x, y)
    if kx == PROJECTIVE and ky == SIMPLE:
        return fuse_pm(params, x, y)
    if kx == SIMPLE and ky == PROJECTIVE:
        return fuse_pm(params, y, x)
    if kx == PROJECTIVE and ky == PROJECTIVE:
        return fuse_pp(params, x, y)
    if JORDAN_FOCK in (kx, ky):
        raise UnsupportedFusion(f"no fusion data for Jordan Fock labels ({x} x {y})")
    # exactly one side is a Fock module: only odd simple currents act on it
    g, f = (y, x) if kx == FOCK else (x, y)
    if f.kind == FOCK and g.kind == SIMPLE and g.s == 1 and g.r % 2 == 1:
        return fuse_generators(params, g, f)
    raise UnsupportedFusion(
        f"{x} x {y}: Fock modules fuse only with the odd simple currents M(2n+1, 1)"
    )


def fuse(params: Params, a: _SumLike, b: _SumLike) -> FormalSum:
    """Bilinear extension of the fusion product to formal sums.

    Dispatches each term pair to the appropriate closed form.  Fock modules
    fuse only with odd simple currents; Jordan Fock labels never fuse.
    """
    acc = FormalSum.zero()
    for x, mx in _as_sum(a):
        for y, my in _as_sum(b):
            acc = acc + (mx * my) * _fuse_pair(params, x, y)
    return acc


def flatten(params: Params, a: _SumLike) -> FormalSum:
    """Composition factors of a formal sum, extended linearly."""
    acc = FormalSum.zero()
    for x, m in _as_sum(a):
        acc = acc + m * composition_factors(params, x)
    return acc


def grothendieck_product(params: Params, a: _SumLike, b: _SumLike) -> FormalSum:
    """Product of composition-factor classes in the Grothendieck ring.

    Both inputs are flattened to simples first and multiplied there (via
    :func:`fuse_mm`, then flattened again).  Because fusion is bi-exact,
    this agrees with ``flatten(fuse(a, b))``, which is the consistency check
    the verification suite runs.
    """
    acc = FormalSum.zero()
    for x, mx in flatten(params, a):
        for y, my in flatten(params, b):
            acc = acc + (mx * my) * flatten(params, fuse_mm(params, x, y))
    return acc
