"""Frobenius bases and connection coefficients for the degenerate-field ODE.

Four-point functions with an ``h_{1,2}`` insertion satisfy the second-order
Fuchsian equation

    ``p x(1-x) f'' + (1-2x) f' - h/(x(1-x)) f = 0``,   ``h = h_{1,2} = 3/(4p) - 1/2``,

with regular singular points 0, 1, oo.  The substitution
``g = x^{-1/(2p)} (1-x)^{-1/(2p)} f`` turns it into the hypergeometric form

    ``p x(1-x) g'' + 2(1-2x) g' + (1 - 3/p) g = 0``.

This module builds the Frobenius solution bases at 0 and 1 (phi and psi),
evaluates the closed-form change of basis between them, re-derives the same
matrix numerically by matching series on the overlap, and exposes the
non-vanishing coefficient that the rigidity argument needs.  Everything is
series-based: the matching interval lies inside both disks of convergence,
so no integration across singular points is ever attempted.

For ``p >= 3`` the exponents at 0 are ``1/(2p)`` and ``1 - 3/(2p)``:

    ``phi_1 = x^{1/2p} (1-x)^{1/2p} 2F1(1/p, 3/p-1; 2/p; x)``
    ``phi_2 = x^{1-3/2p} (1-x)^{1/2p} 2F1(1-1/p, 1/p; 2-2/p; x)``

and ``psi_i(x) = phi_i`` rebuilt at ``1-x``.  For ``p = 2`` the indicial
roots coincide and the second solution is logarithmic:

    ``phi_2 = phi_1 ln(x/4) + x^{1/4} (1-x)^{1/4} G(x)``,

where ``G`` is the repeated-root Frobenius series with zero constant term.
The ``ln(x/4)`` normalization (rather than bare ``ln x``) is the one that
realizes the standard connection pair ``(ln4/pi, -1/pi)``; shifting the log
solution by multiples of ``phi_1`` is the only freedom, and this choice
pins it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from .labels import Params

__all__ = [
    "IllConditionedMatching",
    "NonConvergentSeries",
    "h12",
    "gauss_2f1",
    "FrobeniusSolution",
    "phi_basis",
    "psi_basis",
    "ode_residual",
    "hypergeometric_residual",
    "ConnectionMatrix",
    "connection_closed",
    "connection_numeric",
    "rigidity_coefficient",
]


class NonConvergentSeries(ValueError):
    """Hypergeometric series parameters outside the convergent regime."""


class IllConditionedMatching(RuntimeError):
    """Basis matching produced an unusable linear system (too few terms?)."""


def h12(params: Params) -> float:
    """The degenerate weight ``h_{1,2} = 3/(4p) - 1/2`` as a float."""
    return 3.0 / (4.0 * params.p) - 0.5


def gauss_2f1(
    a: float, b: float, c: float, x: float, tol: float = 1e-14, max_terms: int = 10000
) -> float:
    """Gauss hypergeometric series ``2F1(a, b; c; x)`` for ``|x| < 1``.

    Adaptive truncation: once the term ratio is bounded below one, the tail
    is dominated by a geometric series and summation stops when that bound
    drops under ``tol`` (absolute).  Terminating cases (``a`` or ``b`` a
    non-positive integer) are exact.
    """
    if c <= 0 and c == int(c):
        raise NonConvergentSeries(f"c = {c} is a non-positive integer")
    if not abs(x) < 1:
        raise NonConvergentSeries(f"need |x| < 1, got x = {x}")
    total = 1.0
    term = 1.0
    settle = int(max(abs(a), abs(b), abs(c))) + 2
    for k in range(max_terms):
        term *= (k + a) * (k + b) / ((k + c) * (k + 1)) * x
        total += term
        if term == 0.0:
            return total
        if k >= settle:
            ratio = abs((k + 1 + a) * (k + 1 + b) / ((k + 1 + c) * (k + 2)) * x)
            if ratio < 1 and abs(term) * ratio / (1 - ratio) < tol:
                return total
    raise NonConvergentSeries(f"2F1({a}, {b}; {c}; {x}) did not converge")


def _hyp_series_coeffs(a: float, b: float, c: float, n_terms: int) -> np.ndarray:
    """First ``n_terms`` Taylor coefficients of ``2F1(a, b; c; x)``."""
    out = np.empty(n_terms)
    out[0] = 1.0
    for k in range(n_terms - 1):
        out[k + 1] = out[k] * (k + a) * (k + b) / ((k + c) * (k + 1))
    return out


def _log_companion_coeffs(base: np.ndarray) -> np.ndarray:
    """Repeated-root Frobenius series ``G`` for the ``p = 2`` log solution.

    With ``L[g] = x(1-x)g'' + (1-2x)g' - g/4`` (the ``p = 2`` hypergeometric
    form, halved) and ``g_2 = F ln x + G``, the series ``G = sum d_n x^n``
    with ``d_0 = 0`` satisfies ``L[G] = F - 2(1-x)F'``, i.e.

        ``d_{n+1} = ((n+1/2)^2 d_n + (2n+1) c_n - 2(n+1) c_{n+1}) / (n+1)^2``.
    """
    n_terms = len(base)
    d = np.zeros(n_terms)
    for n in range(n_terms - 1):
        d[n + 1] = (
            (n + 0.5) ** 2 * d[n] + (2 * n + 1) * base[n] - 2 * (n + 1) * base[n + 1]
        ) / (n + 1) ** 2
    return d


def _poly_eval(c: np.ndarray, u: float) -> float:
    acc = 0.0
    for v in c[::-1]:
        acc = acc * u + v
    return acc


@dataclass(frozen=True, eq=False)
class _Component:
    """One additive piece ``u^{e_near} v^{e_far} S(u) (ln u + k)^m``.

    ``u`` is the local coordinate at the expansion point, ``v = 1 - u`` the
    coordinate at the other singular point; ``m`` is 0 or 1.  ``d1``/``d2``
    hold the coefficient arrays of ``S'(u)`` and ``S''(u)``.
    """

    e_near: float
    e_far: float
    series: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    log_power: int
    log_const: float


def _component(
    e_near: float,
    e_far: float,
    coeffs: np.ndarray,
    log_power: int = 0,
    log_const: float = 0.0,
) -> _Component:
    c = np.asarray(coeffs, dtype=float)
    n = np.arange(len(c), dtype=float)
    d1 = (c * n)[1:]
    d2 = (c * n * (n - 1.0))[2:]
    return _Component(e_near, e_far, c, d1, d2, log_power, log_const)


@dataclass(frozen=True, eq=False)
class FrobeniusSolution:
    """A Frobenius solution of the degenerate-field ODE.

    ``exponent`` is the leading power at the expansion point (0 or 1);
    ``coefficients`` is the truncated power series in the local coordinate
    (for the logarithmic solution, the non-log series ``G``); ``log_flag``
    marks the ``p = 2`` logarithmic companion.  Instances are callable, and
    :meth:`derivatives` supplies exact series derivatives for residual and
    matching work.
    """

    p: int
    expansion_point: int
    exponent: float
    log_flag: bool
    coefficients: np.ndarray
    components: Tuple[_Component, ...]

    def derivatives(self, x: float) -> Tuple[float, float, float]:
        """Value, first and second derivative at ``x`` in ``(0, 1)``."""
        if not 0.0 < x < 1.0:
            raise ValueError(f"solutions are evaluated inside (0, 1), got x={x}")
        if self.expansion_point == 0:
            u, up = x, 1.0
        else:
            u, up = 1.0 - x, -1.0
        v = 1.0 - u
        f = fd1 = fd2 = 0.0
        for comp in self.components:
            w = u**comp.e_near * v**comp.e_far
            wl = up * (comp.e_near / u - comp.e_far / v)
            dwl = -(comp.e_near / u**2 + comp.e_far / v**2)
            s0 = _poly_eval(comp.series, u)
            s1 = up * _poly_eval(comp.d1, u)  # dS/dx
            s2 = _poly_eval(comp.d2, u)  # d2S/dx2 (up^2 = 1)
            val = w * s0
            der = w * (wl * s0 + s1)
            der2 = w * ((wl * wl + dwl) * s0 + 2.0 * wl * s1 + s2)
            if comp.log_power == 0:
                f += val
                fd1 += der
                fd2 += der2
            else:
                lg = math.log(u) + comp.log_const
                lg1 = up / u
                lg2 = -1.0 / u**2
                f += val * lg
                fd1 += der * lg + val * lg1
                fd2 += der2 * lg + 2.0 * der * lg1 + val * lg2
        return f, fd1, fd2

    def __call__(self, x: float) -> float:
        return self.derivatives(x)[0]


def _basis(params: Params, n_terms: int, point: int) -> Tuple[FrobeniusSolution, FrobeniusSolution]:
    p = params.p
    if n_terms < 16:
        raise ValueError(f"need n_terms >= 16, got {n_terms}")
    e = 1.0 / (2.0 * p)
    if p >= 3:
        ca = _hyp_series_coeffs(1.0 / p, 3.0 / p - 1.0, 2.0 / p, n_terms)
        cb = _hyp_series_coeffs(1.0 - 1.0 / p, 1.0 / p, 2.0 - 2.0 / p, n_terms)
        sol1 = FrobeniusSolution(
            p, point, e, False, ca, (_component(e, e, ca),)
        )
        e2 = 1.0 - 3.0 / (2.0 * p)
        sol2 = FrobeniusSolution(
            p, point, e2, False, cb, (_component(e2, e, cb),)
        )
        return sol1, sol2
    ca = _hyp_series_coeffs(0.5, 0.5, 1.0, n_terms)
    cg = _log_companion_coeffs(ca)
    sol1 = FrobeniusSolution(p, point, e, False, ca, (_component(e, e, ca),))
    sol2 = FrobeniusSolution(
        p,
        point,
        e,
        True,
        cg,
        (
            _component(e, e, ca, log_power=1, log_const=-math.log(4.0)),
            _component(e, e, cg),
        ),
    )
    return sol1, sol2


def phi_basis(params: Params, n_terms: int = 200) -> Tuple[FrobeniusSolution, FrobeniusSolution]:
    """Solution basis ``(phi_1, phi_2)`` expanded at ``x = 0``."""
    return _basis(params, n_terms, 0)


def psi_basis(params: Params, n_terms: int = 200) -> Tuple[FrobeniusSolution, FrobeniusSolution]:
    """Solution basis ``(psi_1, psi_2)`` expanded at ``x = 1`` (mirror of phi)."""
    return _basis(params, n_terms, 1)


_FuncLike = Union[FrobeniusSolution, Callable[[float], float]]


def _derivatives(f: _FuncLike, x: float) -> Tuple[float, float, float]:
    if isinstance(f, FrobeniusSolution):
        return f.derivatives(x)
    h = 1e-5
    f0 = f(x)
    fp, fm = f(x + h), f(x - h)
    return f0, (fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)


def ode_residual(params: Params, f: _FuncLike, x: float) -> float:
    """Residual of ``p x(1-x) f'' + (1-2x) f' - h_{1,2}/(x(1-x)) f`` at ``x``.

    ``f`` is either a :class:`FrobeniusSolution` (exact series derivatives)
    or a plain callable (central differences).  Used as the validity check
    on every constructed solution; keep ``x`` at least ``1e-6`` away from
    the singular points.
    """
    if not 1e-6 <= x <= 1 - 1e-6:
        raise ValueError(f"x must stay away from the singular points, got {x}")
    f0, f1, f2 = _derivatives(f, x)
    p = params.p
    return p * x * (1 - x) * f2 + (1 - 2 * x) * f1 - h12(params) / (x * (1 - x)) * f0


def hypergeometric_residual(params: Params, f: _FuncLike, x: float) -> float:
    """Residual of the substituted function in the hypergeometric equation.

    Forms ``g = x^{-1/2p} (1-x)^{-1/2p} f`` (derivatives by product rule) and
    returns ``p x(1-x) g'' + 2(1-2x) g' + (1 - 3/p) g``; small residuals
    witness that the substitution maps ODE solutions to hypergeometric ones.
    """
    if not 1e-6 <= x <= 1 - 1e-6:
        raise ValueError(f"x must stay away from the singular points, got {x}")
    p = params.p
    a = 1.0 / (2.0 * p)
    f0, f1, f2 = _derivatives(f, x)
    w = x ** (-a) * (1 - x) ** (-a)
    wl = -a / x + a / (1 - x)
    dwl = a / x**2 + a / (1 - x) ** 2
    g0 = w * f0
    g1 = w * (wl * f0 + f1)
    g2 = w * ((wl * wl + dwl) * f0 + 2 * wl * f1 + f2)
    return p * x * (1 - x) * g2 + 2 * (1 - 2 * x) * g1 + (1 - 3.0 / p) * g0


@dataclass(frozen=True)
class ConnectionMatrix:
    """Change of basis between the two solution bases.

    ``matrix[i][k]`` is the coefficient of ``psi_{k+1}`` in ``phi_{i+1}``
    (or of ``phi`` in ``psi`` when built in the reverse direction; by the
    ``x -> 1-x`` symmetry the exact matrix is an involution, so the two
    directions coincide).  ``condition`` reports the conditioning of the
    numeric matching system; it is ``None`` for closed-form matrices.
    """

    matrix: Tuple[Tuple[float, float], Tuple[float, float]]
    condition: Optional[float] = None

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=float)


def connection_closed(params: Params) -> ConnectionMatrix:
    """Closed-form connection matrix expressing the phi basis in the psi basis.

    For ``p >= 3``, with ``G`` the Euler gamma function,

        ``phi_1 = a psi_1 + b psi_2``,  ``a = 1/(2 cos(pi/p))``,
        ``b = (3-p)/(2-p) * G(2/p)^2 / (G(1/p) G(3/p))``,
        ``phi_2 = d1 psi_1 - a psi_2``,
        ``d1 = G(2-2/p) G(1-2/p) / (G(1-1/p) G(2-3/p))``

    (at ``p = 3`` the ``b`` coefficient vanishes, so ``phi_1 = psi_1``).
    For ``p = 2`` the first row is ``(ln4/pi, -1/pi)`` and the second row
    follows from the ``x -> 1-x`` symmetry, which forces the matrix to be
    an involution.
    """
    p = params.p
    if p == 2:
        a = math.log(4.0) / math.pi
        b = -1.0 / math.pi
    else:
        a = 1.0 / (2.0 * math.cos(math.pi / p))
        b = (
            (3.0 - p)
            / (2.0 - p)
            * math.gamma(2.0 / p) ** 2
            / (math.gamma(1.0 / p) * math.gamma(3.0 / p))
        )
    if p == 2:
        d1 = (1.0 - a * a) / b
    else:
        d1 = (
            math.gamma(2.0 - 2.0 / p)
            * math.gamma(1.0 - 2.0 / p)
            / (math.gamma(1.0 - 1.0 / p) * math.gamma(2.0 - 3.0 / p))
        )
    return ConnectionMatrix(((a, b), (d1, -a)))


def connection_numeric(
    params: Params,
    n_terms: int = 200,
    points: Sequence[float] = (0.6, 0.7),
    reverse: bool = False,
    max_condition: float = 1e9,
) -> ConnectionMatrix:
    """Connection matrix recovered by matching the bases on the overlap.

    Evaluates values and first derivatives of both bases at the given
    points (all inside ``(0.55, 0.75)`` by default, where both series
    converge fast) and solves the resulting least-squares system for each
    row.  Raises :class:`IllConditionedMatching` when the matching system's
    condition number exceeds ``max_condition`` (the usual symptom of
    too few series terms).

    With ``reverse=True`` the roles are swapped and the psi basis is
    expressed in the phi basis.
    """
    for x in points:
        if not 0.5 < x < 1.0:
            raise ValueError(f"matching points must lie in (1/2, 1), got {x}")
    phis = phi_basis(params, n_terms)
    psis = psi_basis(params, n_terms)
    source, target = (psis, phis) if not reverse else (phis, psis)
    rows_a = []
    for x in points:
        d0 = [source[0].derivatives(x), source[1].derivatives(x)]
        rows_a.append([d0[0][0], d0[1][0]])
        rows_a.append([d0[0][1], d0[1][1]])
    a = np.array(rows_a)
    cond = float(np.linalg.cond(a))
    if not np.isfinite(cond) or cond > max_condition:
        raise IllConditionedMatching(f"matching system condition {cond:.3e}")
    matrix = []
    for sol in target:
        rhs = []
        for x in points:
            f0, f1, _ = sol.derivatives(x)
            rhs.extend([f0, f1])
        coeffs, *_ = np.linalg.lstsq(a, np.array(rhs), rcond=None)
        matrix.append((float(coeffs[0]), float(coeffs[1])))
    return ConnectionMatrix((matrix[0], matrix[1]), condition=cond)


def rigidity_coefficient(params: Params, n_terms: int = 200) -> float:
    """The non-vanishing coefficient underlying rigidity of ``M_{1,2}``.

    For ``p >= 4`` this is the ratio ``|c_2/d| = 1/(2 cos(pi/p))`` coming
    from solving the connection relations.  For ``p = 2`` the same ratio is
    ``1/pi``.  For ``p = 3`` the argument instead needs ``psi_1, psi_2``
    linearly independent, so the returned witness is the absolute Wronskian
    ``|psi_1 psi_2' - psi_1' psi_2|`` at ``x = 0.6``.  Always positive, and
    well above the ``1e-10`` nondegeneracy floor.
    """
    p = params.p
    if p == 2:
        return 1.0 / math.pi
    if p >= 4:
        return 1.0 / (2.0 * math.cos(math.pi / p))
    psi1, psi2 = psi_basis(params, n_terms)
    x = 0.6
    f0, f1, _ = psi1.derivatives(x)
    g0, g1, _ = psi2.derivatives(x)
    return abs(f0 * g1 - f1 * g0)
