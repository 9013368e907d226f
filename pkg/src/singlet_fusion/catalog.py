"""Registry of indecomposable singlet modules and their structural data.

Four families of indecomposables are tracked, tagged by a short kind code
that doubles as the CLI label grammar:

====  =============================  =========================================
code  object                         normalization at construction
====  =============================  =========================================
M     simple module M_{r,s}          none
P     projective cover P_{r,s}       P(r, p) -> M(r, p)
F     Fock module F_{alpha_{r,s}}    F(r, p) -> M(r, p)
FJ    Jordan Fock module F^{(n)}     s = p forced; n = 1 -> M(r, p)
====  =============================  =========================================

Two labels are equal exactly when their normal forms are equal, so the
aliases ``P_{r,p} = F_{alpha_{r,p}} = M_{r,p}`` hold on the nose.  Always
build labels through :func:`simple`, :func:`projective`, :func:`fock`,
:func:`jordan_fock` (or :func:`normalize`); the raw dataclass constructor
performs no normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from .labels import Params, alpha_coordinate, weight

__all__ = [
    "SIMPLE",
    "PROJECTIVE",
    "FOCK",
    "JORDAN_FOCK",
    "Indecomposable",
    "FormalSum",
    "LoewyDiagram",
    "UnsupportedOperation",
    "simple",
    "projective",
    "fock",
    "jordan_fock",
    "normalize",
    "composition_factors",
    "loewy",
    "loewy_maximal_submodule",
    "dual",
    "virasoro_decomposition",
    "jordan_fock_matrices",
    "RationalMatrix",
]

SIMPLE = "M"
PROJECTIVE = "P"
FOCK = "F"
JORDAN_FOCK = "FJ"


class UnsupportedOperation(ValueError):
    """Raised when an operation is not defined for a label kind."""


@dataclass(frozen=True, order=True)
class Indecomposable:
    """An indecomposable module label.  ``n`` is the Jordan size (FJ only)."""

    kind: str
    r: int
    s: int
    n: int = 1

    def __str__(self) -> str:
        if self.kind == JORDAN_FOCK:
            return f"{self.kind}:{self.r},{self.s},{self.n}"
        return f"{self.kind}:{self.r},{self.s}"


def simple(params: Params, r: int, s: int) -> Indecomposable:
    """The simple module ``M_{r,s}``, ``1 <= s <= p``."""
    _check_s(params, s)
    return Indecomposable(SIMPLE, r, s)


def projective(params: Params, r: int, s: int) -> Indecomposable:
    """The projective cover ``P_{r,s}``; ``P_{r,p}`` normalizes to ``M_{r,p}``."""
    _check_s(params, s)
    if s == params.p:
        return Indecomposable(SIMPLE, r, s)
    return Indecomposable(PROJECTIVE, r, s)


def fock(params: Params, r: int, s: int) -> Indecomposable:
    """The Fock module ``F_{alpha_{r,s}}``; ``F(r, p)`` normalizes to ``M_{r,p}``."""
    _check_s(params, s)
    if s == params.p:
        return Indecomposable(SIMPLE, r, s)
    return Indecomposable(FOCK, r, s)


def jordan_fock(params: Params, r: int, n: int) -> Indecomposable:
    """The rank-``n`` Jordan Fock module ``F^{(n)}`` at ``s = p``; ``n = 1`` is ``M_{r,p}``."""
    if n < 1:
        raise ValueError(f"Jordan size must be >= 1, got {n}")
    if n == 1:
        return Indecomposable(SIMPLE, r, params.p)
    return Indecomposable(JORDAN_FOCK, r, params.p, n)


def normalize(params: Params, x: Indecomposable) -> Indecomposable:
    """Normal form of an arbitrary label; idempotent."""
    if x.kind == SIMPLE:
        return simple(params, x.r, x.s)
    if x.kind == PROJECTIVE:
        return projective(params, x.r, x.s)
    if x.kind == FOCK:
        return fock(params, x.r, x.s)
    if x.kind == JORDAN_FOCK:
        if x.s != params.p:
            raise ValueError(f"Jordan Fock labels require s = p, got s={x.s}")
        return jordan_fock(params, x.r, x.n)
    raise ValueError(f"unknown label kind {x.kind!r}")


def _check_s(params: Params, s: int) -> None:
    if not 1 <= s <= params.p:
        raise ValueError(f"module label needs 1 <= s <= {params.p}, got s={s}")


# ---------------------------------------------------------------------------
# Formal sums
# ---------------------------------------------------------------------------

_TermsArg = Union[Mapping[object, int], Iterable[Tuple[object, int]]]


class FormalSum:
    """A finite multiset of labels with positive integer multiplicities.

    This is the value type of every fusion product: a Krull-Schmidt
    decomposition recorded as ``label -> multiplicity``.  Sums are immutable,
    hashable, and support ``+`` and integer scaling.  The empty sum is the
    zero object and is falsy.

    Any orderable, hashable label type works; singlet sums hold
    :class:`Indecomposable`, triplet sums hold ``TripletIndec``.
    """

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: _TermsArg = ()) -> None:
        acc: Dict[object, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for label, mult in items:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {label}")
            if mult:
                acc[label] = acc.get(label, 0) + mult
        self._terms: Dict[object, int] = acc
        self._key = tuple(sorted(acc.items()))

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @classmethod
    def of(cls, *labels: object) -> "FormalSum":
        """Sum of the given labels, each with multiplicity one (repeats add)."""
        return cls((lab, 1) for lab in labels)

    @property
    def terms(self) -> Tuple[Tuple[object, int], ...]:
        """Sorted ``(label, multiplicity)`` pairs."""
        return self._key

    def multiplicity(self, label: object) -> int:
        return self._terms.get(label, 0)

    def total(self) -> int:
        """Total multiplicity (number of indecomposable summands)."""
        return sum(self._terms.values())

    def labels(self) -> Tuple[object, ...]:
        return tuple(lab for lab, _ in self._key)

    def map_labels(self, fn: Callable[[object], object]) -> "FormalSum":
        """Relabel every term through ``fn`` (multiplicities accumulate)."""
        return FormalSum((fn(lab), mult) for lab, mult in self._key)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if not isinstance(other, FormalSum):
            return NotImplemented
        return FormalSum(list(self._key) + list(other._key))

    def __mul__(self, k: int) -> "FormalSum":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("multiplicities must stay nonnegative")
        return FormalSum((lab, k * mult) for lab, mult in self._key)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Tuple[object, int]]:
        return iter(self._key)

    def __len__(self) -> int:
        return len(self._key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for lab, mult in self._key:
            parts.append(str(lab) if mult == 1 else f"{mult}*{lab}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FormalSum({self._key!r})"


# ---------------------------------------------------------------------------
# Structural data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LoewyDiagram:
    """Socle filtration of an indecomposable, top layer first.

    ``layers`` are formal sums of simples; their concatenation is the list
    of composition factors and the last layer is the socle.  ``edges`` are
    ``(layer_index, upper_factor, lower_factor)`` adjacencies between a
    factor in ``layers[layer_index]`` and one in ``layers[layer_index + 1]``.
    """

    layers: Tuple[FormalSum, ...]
    edges: Tuple[Tuple[int, Indecomposable, Indecomposable], ...]

    def factors(self) -> FormalSum:
        """All composition factors, layers flattened together."""
        acc = FormalSum.zero()
        for layer in self.layers:
            acc = acc + layer
        return acc


def composition_factors(params: Params, x: Indecomposable) -> FormalSum:
    """Multiset of simple composition factors of a (normalized) label.

    * ``M_{r,s}``: itself.
    * ``F_{alpha_{r,s}}``, ``s <= p-1``: ``M_{r,s} + M_{r+1,p-s}`` from the
      non-split sequence ``0 -> M_{r,s} -> F -> M_{r+1,p-s} -> 0``.
    * ``P_{r,s}``, ``s <= p-1``: ``2 M_{r,s} + M_{r-1,p-s} + M_{r+1,p-s}``.
    * ``F^{(n)}``: ``n`` copies of ``M_{r,p}``, by induction on the
      self-extension ``0 -> F^{(n-1)} -> F^{(n)} -> F -> 0``.
    """
    x = normalize(params, x)
    p = params.p
    if x.kind == SIMPLE:
        return FormalSum.of(x)
    if x.kind == FOCK:
        return FormalSum.of(simple(params, x.r, x.s), simple(params, x.r + 1, p - x.s))
    if x.kind == PROJECTIVE:
        return FormalSum(
            [
                (simple(params, x.r, x.s), 2),
                (simple(params, x.r - 1, p - x.s), 1),
                (simple(params, x.r + 1, p - x.s), 1),
            ]
        )
    if x.kind == JORDAN_FOCK:
        return FormalSum([(simple(params, x.r, p), x.n)])
    raise UnsupportedOperation(f"no composition series data for {x}")


def loewy(params: Params, x: Indecomposable) -> LoewyDiagram:
    """Loewy diagram of ``M``, ``P`` or ``F`` labels.

    * simples: one layer;
    * ``F_{alpha_{r,s}}``: layers ``[M_{r+1,p-s}], [M_{r,s}]``;
    * ``P_{r,s}``: layers ``[M_{r,s}], [M_{r-1,p-s} + M_{r+1,p-s}], [M_{r,s}]``
      with the diamond of edges.

    Jordan Fock labels are rejected: their full socle filtration is not part
    of the catalog.
    """
    x = normalize(params, x)
    p = params.p
    if x.kind == SIMPLE:
        return LoewyDiagram((FormalSum.of(x),), ())
    if x.kind == FOCK:
        sub = simple(params, x.r, x.s)
        quo = simple(params, x.r + 1, p - x.s)
        return LoewyDiagram((FormalSum.of(quo), FormalSum.of(sub)), ((0, quo, sub),))
    if x.kind == PROJECTIVE:
        top = simple(params, x.r, x.s)
        left = simple(params, x.r - 1, p - x.s)
        right = simple(params, x.r + 1, p - x.s)
        return LoewyDiagram(
            (FormalSum.of(top), FormalSum.of(left, right), FormalSum.of(top)),
            ((0, top, left), (0, top, right), (1, left, top), (1, right, top)),
        )
    raise UnsupportedOperation(f"no Loewy data for {x}")


def loewy_maximal_submodule(params: Params, r: int, s: int) -> LoewyDiagram:
    """Loewy diagram of ``Z_{r,s}``, the unique maximal submodule of ``P_{r,s}``.

    Two layers: ``[M_{r-1,p-s} + M_{r+1,p-s}]`` over the socle ``[M_{r,s}]``.
    Defined for ``1 <= s <= p-1``.
    """
    p = params.p
    if not 1 <= s <= p - 1:
        raise ValueError(f"maximal submodules Z_{{r,s}} need 1 <= s <= p-1, got s={s}")
    left = simple(params, r - 1, p - s)
    right = simple(params, r + 1, p - s)
    soc = simple(params, r, s)
    return LoewyDiagram(
        (FormalSum.of(left, right), FormalSum.of(soc)),
        ((0, left, soc), (0, right, soc)),
    )


def dual(params: Params, x: Indecomposable) -> Indecomposable:
    """Contragredient dual: ``M_{r,s} -> M_{2-r,s}`` and ``P_{r,s} -> P_{2-r,s}``.

    An involution that preserves the kind and ``s`` and fixes exactly the
    labels with ``r = 1``.  Duals of Fock and Jordan Fock modules are not in
    the catalog and are rejected.
    """
    x = normalize(params, x)
    if x.kind == SIMPLE:
        return simple(params, 2 - x.r, x.s)
    if x.kind == PROJECTIVE:
        return projective(params, 2 - x.r, x.s)
    raise UnsupportedOperation(f"no dual data for {x}")


def virasoro_decomposition(
    params: Params, x: Indecomposable, n_max: int
) -> List[Tuple[Fraction, int]]:
    """Leading terms of the Virasoro-irreducible decomposition of a simple.

    ``M_{r,s}`` decomposes as an infinite multiplicity-free direct sum of
    irreducibles ``L(c_p, h)``; this returns the weights for ``n = 0..n_max``:

    * ``r >= 1``: weights ``h_{r+2n, s}``;
    * ``r <= 0``: weights ``h_{r-1-2n, p-s}`` (extended labels; the ``n = 0``
      entry equals ``lowest_weight_of_simple``).

    The singlet algebra itself is ``M_{1,1}``.
    """
    x = normalize(params, x)
    if x.kind != SIMPLE:
        raise UnsupportedOperation(f"Virasoro decomposition only for simples, got {x}")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if x.r >= 1:
        return [(weight(params, x.r + 2 * n, x.s), 1) for n in range(n_max + 1)]
    return [
        (weight(params, x.r - 1 - 2 * n, params.p - x.s), 1) for n in range(n_max + 1)
    ]


# ---------------------------------------------------------------------------
# Jordan Fock matrices (exact rational linear algebra)
# ---------------------------------------------------------------------------

RationalMatrix = Tuple[Tuple[Fraction, ...], ...]


def _identity(n: int) -> RationalMatrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def _scale(c: Fraction, a: RationalMatrix) -> RationalMatrix:
    return tuple(tuple(c * e for e in row) for row in a)


def _add(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def _mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def jordan_fock_matrices(
    params: Params, r: int, n: int
) -> Tuple[RationalMatrix, RationalMatrix, RationalMatrix]:
    """Top-level action matrices ``(A, L0, H0)`` on the Jordan Fock module ``F^{(n)}``.

    ``A`` is the zero-mode of the lattice generator on the ``n``-dimensional
    lowest weight space: a single Jordan block with eigenvalue
    ``k = alpha_coordinate(r, p)``.  The block is stored in the basis that
    clears the ``sqrt(2p)`` lattice normalization, which makes every entry
    rational and puts ``2`` on the superdiagonal (``sqrt(2p) * sqrt(2/p) = 2``,
    the spacing of the screening direction).  Then

        ``L0 = A^2/(4p) - (p-1)/(2p) A``       (Virasoro zero-mode)
        ``H0 = binom(A, 2p-1)``                (zero-mode of the weight-(2p-1)
                                                generator)

    are exact rational matrices.  ``L0`` and ``H0`` always commute.  For
    ``r != 1``, ``L0`` has a regular (rank ``n-1``) nilpotent part, so it acts
    indecomposably on its own.  For ``r = 1`` the eigenvalue sits at the
    critical point of the weight function, the linear term drops out, and
    ``L0 - h_{1,p}`` is ``N^2/p`` (zero for ``n = 2``, but nonzero of rank
    ``n-2`` for ``n >= 3``); there ``H0`` is the nilpotent nonzero matrix that
    witnesses indecomposability.

    Requires ``n >= 2``.
    """
    if n < 2:
        raise ValueError(f"Jordan Fock matrices need n >= 2, got {n}")
    p = params.p
    k = alpha_coordinate(params, r, p)
    a = tuple(
        tuple(
            Fraction(k) if i == j else (Fraction(2) if j == i + 1 else Fraction(0))
            for j in range(n)
        )
        for i in range(n)
    )
    l0 = _add(_scale(Fraction(1, 4 * p), _mul(a, a)), _scale(Fraction(-(p - 1), 2 * p), a))
    h0 = _identity(n)
    for j in range(2 * p - 1):
        h0 = _mul(h0, _add(a, _scale(Fraction(-j), _identity(n))))
    h0 = _scale(Fraction(1, math.factorial(2 * p - 1)), h0)
    return a, l0, h0
