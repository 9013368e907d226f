"""The triplet-algebra side: induction of singlet labels and W(p) fusion.

The triplet algebra W(p) is the simple-current extension of the singlet
algebra; induction ``W(p) x -`` sends a singlet label to a triplet label by
collapsing ``r`` to its parity class ``rbar`` (1 for odd ``r``, 2 for even).
Because induction is an exact monoidal functor, triplet fusion products can
be *derived* by fusing singlet preimages and inducing the result; this file
implements that derivation and the directly transcribed generator rules it
must agree with.

Triplet labels come in three kinds:

====  ==========================  =========================================
code  object                      notes
====  ==========================  =========================================
W     simple module W_{rbar,s}    1 <= s <= p
V     lattice module V_{rbar,s}   reducible; s <= p-1 (V(., p) = W(., p))
R     projective R_{rbar,s}       s = p-1 is the constructed projective
                                  cover; s < p-1 are extrapolated labels
                                  produced by parity collapse only
====  ==========================  =========================================
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from . import catalog
from .catalog import FormalSum, Indecomposable, LoewyDiagram, UnsupportedOperation
from .fusion_closed import UnsupportedFusion, fuse
from .labels import Params, rbar, weight

__all__ = [
    "SIMPLE_W",
    "LATTICE_V",
    "PROJ_R",
    "TripletIndec",
    "simple_w",
    "lattice_v",
    "projective_r",
    "is_extrapolated",
    "induce",
    "induce_sum",
    "preimage",
    "triplet_fuse_generator",
    "derived_triplet_fuse",
    "composition_factors",
    "loewy",
    "virasoro_decomposition",
]

SIMPLE_W = "W"
LATTICE_V = "V"
PROJ_R = "R"


@dataclass(frozen=True, order=True)
class TripletIndec:
    """A triplet module label; ``rbar`` is the parity class (1 or 2)."""

    kind: str
    rbar: int
    s: int

    def __str__(self) -> str:
        return f"{self.kind}:{self.rbar},{self.s}"


def _check(params: Params, rb: int, s: int, s_max: int) -> None:
    if rb not in (1, 2):
        raise ValueError(f"rbar must be 1 or 2, got {rb}")
    if not 1 <= s <= s_max:
        raise ValueError(f"triplet label needs 1 <= s <= {s_max}, got s={s}")


def simple_w(params: Params, rb: int, s: int) -> TripletIndec:
    """The simple triplet module ``W_{rbar,s}``, ``1 <= s <= p``."""
    _check(params, rb, s, params.p)
    return TripletIndec(SIMPLE_W, rb, s)


def lattice_v(params: Params, rb: int, s: int) -> TripletIndec:
    """The lattice module ``V_{alpha_{rbar,s}+L}``; ``V(., p)`` normalizes to ``W(., p)``."""
    _check(params, rb, s, params.p)
    if s == params.p:
        return TripletIndec(SIMPLE_W, rb, s)
    return TripletIndec(LATTICE_V, rb, s)


def projective_r(params: Params, rb: int, s: int) -> TripletIndec:
    """The projective label ``R_{rbar,s}``, ``1 <= s <= p-1``.

    Only ``s = p-1`` is a constructed projective cover; smaller ``s`` are
    extrapolated parity collapses (see :func:`is_extrapolated`).
    """
    _check(params, rb, s, params.p - 1)
    return TripletIndec(PROJ_R, rb, s)


def is_extrapolated(params: Params, t: TripletIndec) -> bool:
    """True for R-labels with ``s < p-1``, which exist only by parity collapse."""
    return t.kind == PROJ_R and t.s < params.p - 1


def induce(params: Params, x: Indecomposable) -> TripletIndec:
    """Induction of a singlet label: collapse ``r`` to its parity class.

    ``M_{r,s} -> W_{rbar,s}``; ``F_{alpha_{r,s}} -> V_{alpha_{rbar,s}+L}``;
    ``P_{r,s} -> R_{rbar,s}``.  Jordan Fock modules induce to non-local
    objects and are rejected.
    """
    x = catalog.normalize(params, x)
    rb = rbar(x.r)
    if x.kind == catalog.SIMPLE:
        return simple_w(params, rb, x.s)
    if x.kind == catalog.FOCK:
        return lattice_v(params, rb, x.s)
    if x.kind == catalog.PROJECTIVE:
        return projective_r(params, rb, x.s)
    raise UnsupportedOperation(f"{x} induces to a non-local module")


def induce_sum(params: Params, xs: FormalSum) -> FormalSum:
    """Termwise induction of a formal sum (induction is exact)."""
    return xs.map_labels(lambda lab: induce(params, lab))


def preimage(params: Params, t: TripletIndec, r_shift: int = 0) -> Indecomposable:
    """A singlet preimage of a triplet label under induction.

    The default preimage has ``r = rbar``; ``r_shift`` must be even and
    moves the choice along the simple-current orbit, which induction
    forgets.
    """
    if r_shift % 2 != 0:
        raise ValueError("preimage shifts must be even to preserve parity")
    r = t.rbar + r_shift
    if t.kind == SIMPLE_W:
        return catalog.simple(params, r, t.s)
    if t.kind == LATTICE_V:
        return catalog.fock(params, r, t.s)
    return catalog.projective(params, r, t.s)


def triplet_fuse_generator(
    params: Params, g: TripletIndec, x: TripletIndec
) -> FormalSum:
    """Fusion with the triplet generators ``W_{2,1}`` and ``W_{1,2}``.

    * ``W_{2,1} x W_{r,s} = W_{3-r,s}`` (self-dual simple current);
    * ``W_{1,2} x W_{r,s}`` is ``W_{r,2}`` for ``s = 1``,
      ``W_{r,s-1} + W_{r,s+1}`` for ``2 <= s <= p-1``, and ``R_{r,p-1}``
      for ``s = p``.

    Defined on simple second factors only.
    """
    if x.kind != SIMPLE_W:
        raise UnsupportedFusion(f"triplet generator rules take simple W labels, got {x}")
    p = params.p
    if (g.kind, g.rbar, g.s) == (SIMPLE_W, 2, 1):
        return FormalSum.of(simple_w(params, 3 - x.rbar, x.s))
    if (g.kind, g.rbar, g.s) == (SIMPLE_W, 1, 2):
        if x.s == 1:
            return FormalSum.of(simple_w(params, x.rbar, 2))
        if x.s == p:
            return FormalSum.of(projective_r(params, x.rbar, p - 1))
        return FormalSum.of(
            simple_w(params, x.rbar, x.s - 1), simple_w(params, x.rbar, x.s + 1)
        )
    raise UnsupportedFusion(f"unsupported triplet generator {g}")


def derived_triplet_fuse(
    params: Params,
    a: TripletIndec,
    b: TripletIndec,
    shift_a: int = 0,
    shift_b: int = 0,
) -> FormalSum:
    """Triplet fusion derived through induction.

    Picks singlet preimages of ``a`` and ``b`` (offset by the even shifts,
    which must not change the answer), fuses them on the singlet side, and
    induces the result termwise.  Defined for simple and projective labels.
    """
    if a.kind == LATTICE_V or b.kind == LATTICE_V:
        raise UnsupportedFusion("lattice modules have no derived fusion here")
    prod = fuse(
        params,
        preimage(params, a, shift_a),
        preimage(params, b, shift_b),
    )
    return induce_sum(params, prod)


def composition_factors(params: Params, t: TripletIndec) -> FormalSum:
    """Simple composition factors of a triplet label.

    ``V_{alpha_{r,s}+L}`` has factors ``W_{r,s} + W_{3-r,p-s}``; the
    projective cover ``R_{r,p-1}`` has ``2 W_{r,p-1} + 2 W_{3-r,1}``.
    Extrapolated R-labels carry no composition data and are rejected.
    """
    if t.kind == SIMPLE_W:
        return FormalSum.of(t)
    if t.kind == LATTICE_V:
        return FormalSum.of(
            simple_w(params, t.rbar, t.s), simple_w(params, 3 - t.rbar, params.p - t.s)
        )
    if t.kind == PROJ_R and t.s == params.p - 1:
        return FormalSum(
            [
                (simple_w(params, t.rbar, t.s), 2),
                (simple_w(params, 3 - t.rbar, 1), 2),
            ]
        )
    raise UnsupportedOperation(f"no composition series data for {t}")


def loewy(params: Params, t: TripletIndec) -> LoewyDiagram:
    """Loewy diagram of a triplet label (W, V, or the constructed R)."""
    p = params.p
    if t.kind == SIMPLE_W:
        return LoewyDiagram((FormalSum.of(t),), ())
    if t.kind == LATTICE_V:
        sub = simple_w(params, t.rbar, t.s)
        quo = simple_w(params, 3 - t.rbar, p - t.s)
        return LoewyDiagram((FormalSum.of(quo), FormalSum.of(sub)), ((0, quo, sub),))
    if t.kind == PROJ_R and t.s == p - 1:
        top = simple_w(params, t.rbar, p - 1)
        mid = simple_w(params, 3 - t.rbar, 1)
        return LoewyDiagram(
            (FormalSum.of(top), FormalSum.of(mid, mid), FormalSum.of(top)),
            ((0, top, mid), (1, mid, top)),
        )
    raise UnsupportedOperation(f"no Loewy data for {t}")


def virasoro_decomposition(
    params: Params, t: TripletIndec, n_max: int
) -> List[Tuple[Fraction, int]]:
    """Leading Virasoro content of a simple triplet module.

    ``W_{rbar,s}`` decomposes with growing multiplicities: the ``n``-th
    entry is ``(h_{rbar+2n, s}, rbar+2n)``.  In particular the lowest weight
    space is ``rbar``-dimensional.
    """
    if t.kind != SIMPLE_W:
        raise UnsupportedOperation(f"Virasoro decomposition only for W labels, got {t}")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return [
        (weight(params, t.rbar + 2 * n, t.s), t.rbar + 2 * n) for n in range(n_max + 1)
    ]
