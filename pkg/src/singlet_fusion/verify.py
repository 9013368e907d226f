"""Re-runnable verification suites behind ``singlet-fusion verify``.

Each suite replays the defining identities of one layer of the package and
returns ``(checks, failures)`` where ``failures`` is a list of human-readable
messages (empty on success).  The suites are deterministic and pure, so they
can be fanned out over label pairs and merged in any order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from . import bpz, catalog, fusion_closed, fusion_oracle, triplet
from .catalog import FormalSum
from .labels import (
    Params,
    alpha_coordinate,
    fock_weight,
    lowest_weight_of_simple,
    rbar,
    weight,
    weight_coset_diff,
)

__all__ = [
    "SUITES",
    "run_suite",
    "run_suites",
    "fusion_suite",
    "triplet_suite",
    "bpz_suite",
    "catalog_suite",
    "labels_suite",
]

Result = Tuple[int, List[str]]


class _Recorder:
    def __init__(self) -> None:
        self.checks = 0
        self.failures: List[str] = []

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def result(self) -> Result:
        return self.checks, self.failures


def _simples(params: Params, rwin: int) -> List[catalog.Indecomposable]:
    return [
        catalog.simple(params, r, s)
        for r in range(-rwin, rwin + 1)
        for s in range(1, params.p + 1)
    ]


def _projectives(params: Params, rwin: int) -> List[catalog.Indecomposable]:
    return [
        catalog.projective(params, r, s)
        for r in range(-rwin, rwin + 1)
        for s in range(1, params.p)
    ]


def fusion_suite(params: Params, rwin: int = 3, jobs: int = 1) -> Result:
    """Oracle equivalence plus the ring identities on a label window."""
    rec = _Recorder()
    simples = _simples(params, rwin)
    projectives = _projectives(params, rwin)

    def check_pair(pair) -> Tuple[bool, str]:
        a, b = pair
        if a.kind == catalog.SIMPLE and b.kind == catalog.SIMPLE:
            closed = fusion_closed.fuse_mm(params, a, b)
            oracle = fusion_oracle.oracle_fuse_mm(params, a, b)
        elif a.kind == catalog.PROJECTIVE and b.kind == catalog.SIMPLE:
            closed = fusion_closed.fuse_pm(params, a, b)
            oracle = fusion_oracle.oracle_fuse_p(params, a, b)
        else:
            closed = fusion_closed.fuse_pp(params, a, b)
            oracle = fusion_oracle.oracle_fuse_p(params, a, b)
        ok = closed == oracle
        return ok, f"oracle mismatch at {a} x {b}: closed {closed} vs oracle {oracle}"

    pairs = (
        [(a, b) for a in simples for b in simples]
        + [(a, b) for a in projectives for b in simples]
        + [(a, b) for a in projectives for b in projectives]
    )
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(check_pair, pairs))
    else:
        outcomes = [check_pair(pair) for pair in pairs]
    for ok, message in outcomes:
        rec.check(ok, message)

    unit = catalog.simple(params, 1, 1)
    for x in simples + projectives:
        rec.check(
            fusion_closed.fuse(params, unit, x) == FormalSum.of(x),
            f"unit failure at {x}",
        )
    for a in simples + projectives:
        for b in simples + projectives:
            rec.check(
                fusion_closed.fuse(params, a, b) == fusion_closed.fuse(params, b, a),
                f"commutativity failure at {a} x {b}",
            )
            rec.check(
                fusion_closed.flatten(params, fusion_closed.fuse(params, a, b))
                == fusion_closed.grothendieck_product(params, a, b),
                f"Grothendieck consistency failure at {a} x {b}",
            )
    for a in simples:
        d = catalog.dual(params, a)
        product = fusion_closed.fuse_mm(params, a, d)
        expected = (
            catalog.simple(params, 1, 1)
            if a.s < params.p
            else catalog.projective(params, 1, 1)
        )
        rec.check(
            product.multiplicity(expected) == 1,
            f"duality multiplicity failure at {a}: {product}",
        )
    for r in range(-rwin, rwin + 1):
        rec.check(
            fusion_closed.fuse_mm(
                params, catalog.simple(params, r, 1), catalog.simple(params, 2 - r, 1)
            )
            == FormalSum.of(unit),
            f"simple-current invertibility failure at r={r}",
        )
    return rec.result()


def triplet_suite(params: Params, rwin: int = 3) -> Result:
    """Generator agreement, preimage independence, exactness bookkeeping."""
    rec = _Recorder()
    p = params.p
    w21 = triplet.simple_w(params, 2, 1)
    w12 = triplet.simple_w(params, 1, 2)
    for rb in (1, 2):
        for s in range(1, p + 1):
            x = triplet.simple_w(params, rb, s)
            for g in (w21, w12):
                rec.check(
                    triplet.derived_triplet_fuse(params, g, x)
                    == triplet.triplet_fuse_generator(params, g, x),
                    f"generator agreement failure at {g} x {x}",
                )
    labels = [
        triplet.simple_w(params, rb, s) for rb in (1, 2) for s in range(1, p + 1)
    ] + [triplet.projective_r(params, rb, p - 1) for rb in (1, 2)]
    for a in labels:
        for b in labels:
            base = triplet.derived_triplet_fuse(params, a, b)
            for sa in (-2, 0, 2):
                for sb in (-2, 0, 2):
                    rec.check(
                        triplet.derived_triplet_fuse(params, a, b, sa, sb) == base,
                        f"preimage dependence at {a} x {b} with shifts {(sa, sb)}",
                    )
    for r in range(-rwin, rwin + 1):
        induced = triplet.induce_sum(
            params,
            catalog.composition_factors(params, catalog.projective(params, r, p - 1)),
        )
        target = triplet.loewy(
            params, triplet.projective_r(params, rbar(r), p - 1)
        ).factors()
        rec.check(
            induced == target,
            f"exactness bookkeeping failure at r={r}: {induced} vs {target}",
        )
    return rec.result()


def bpz_suite(params: Params, n_terms: int = 200) -> Result:
    """Residual, connection, and rigidity checks for one value of p."""
    rec = _Recorder()
    phi1, phi2 = bpz.phi_basis(params, n_terms)
    psi1, psi2 = bpz.psi_basis(params, n_terms)
    grid_phi = [0.05 + 0.05 * i for i in range(12)]  # (0.05, 0.6)
    grid_psi = [0.40 + 0.05 * i for i in range(12)]  # (0.4, 0.95)
    for f, grid, name in (
        (phi1, grid_phi, "phi1"),
        (phi2, grid_phi, "phi2"),
        (psi1, grid_psi, "psi1"),
        (psi2, grid_psi, "psi2"),
    ):
        for x in grid:
            r = abs(bpz.ode_residual(params, f, x))
            rec.check(r < 1e-8, f"{name} residual {r:.3e} at x={x}")
            rh = abs(bpz.hypergeometric_residual(params, f, x))
            rec.check(rh < 1e-8, f"{name} hypergeometric residual {rh:.3e} at x={x}")
    closed = bpz.connection_closed(params).as_array()
    numeric = bpz.connection_numeric(params, n_terms)
    diff = abs(numeric.as_array() - closed).max()
    rec.check(diff < 1e-8, f"connection numeric/closed gap {diff:.3e}")
    backward = bpz.connection_numeric(params, n_terms, reverse=True)
    roundtrip = numeric.as_array() @ backward.as_array()
    gap = abs(roundtrip - [[1.0, 0.0], [0.0, 1.0]]).max()
    rec.check(gap < 1e-7, f"roundtrip identity gap {gap:.3e}")
    rec.check(
        abs(bpz.rigidity_coefficient(params)) > 1e-10,
        "rigidity coefficient vanished",
    )
    return rec.result()


def catalog_suite(params: Params, rwin: int = 4) -> Result:
    """Normalization, Loewy flattening, duals, and Jordan Fock structure."""
    rec = _Recorder()
    p = params.p
    labels = []
    for r in range(-rwin, rwin + 1):
        for s in range(1, p + 1):
            labels.extend(
                [
                    catalog.simple(params, r, s),
                    catalog.projective(params, r, s),
                    catalog.fock(params, r, s),
                ]
            )
        labels.append(catalog.jordan_fock(params, r, 2))
    for x in labels:
        rec.check(
            catalog.normalize(params, x) == x,
            f"normalization not idempotent at {x}",
        )
        if x.kind != catalog.JORDAN_FOCK:
            rec.check(
                catalog.loewy(params, x).factors()
                == catalog.composition_factors(params, x),
                f"Loewy layers disagree with composition factors at {x}",
            )
        if x.kind in (catalog.SIMPLE, catalog.PROJECTIVE):
            d = catalog.dual(params, x)
            rec.check(
                catalog.dual(params, d) == x, f"dual not an involution at {x}"
            )
            rec.check(d.kind == x.kind and d.s == x.s, f"dual changed shape at {x}")
            rec.check(
                (d == x) == (x.r == 1), f"dual fixed-point criterion failed at {x}"
            )
    for r in range(-rwin, rwin + 1):
        for s in range(1, p):
            rec.check(
                catalog.composition_factors(params, catalog.projective(params, r, s)).total()
                == 4,
                f"projective length != 4 at P:{r},{s}",
            )
    for r in (-1, 0, 1, 2):
        for n in (2, 3):
            _, l0, h0 = catalog.jordan_fock_matrices(params, r, n)
            comm_zero = _mat_commutes(l0, h0)
            rec.check(comm_zero, f"[L0, H0] != 0 at r={r}, n={n}")
            if r != 1:
                rec.check(
                    not _mat_is_scalar(l0), f"L0 unexpectedly scalar at r={r}, n={n}"
                )
            else:
                rec.check(
                    _mat_is_nilpotent(h0) and not _mat_is_zero(h0),
                    f"H0 not nilpotent nonzero at r=1, n={n}",
                )
                if n == 2:
                    rec.check(_mat_is_scalar(l0), "L0 not scalar at r=1, n=2")
    return rec.result()


def labels_suite(params: Params, rwin: int = 4) -> Result:
    """Weight identities: periodicity, Fock consistency, congruence, bound."""
    rec = _Recorder()
    p = params.p
    for r in range(-rwin, rwin + 1):
        for s in range(1, 2 * p + 1):
            rec.check(
                alpha_coordinate(params, r + 1, s + p) == alpha_coordinate(params, r, s),
                f"alpha periodicity failure at ({r},{s})",
            )
        for s in range(1, p + 1):
            rec.check(
                fock_weight(params, alpha_coordinate(params, r, s))
                == weight(params, r, s),
                f"Fock/Kac weight mismatch at ({r},{s})",
            )
            wt = weight(params, r, s)
            rec.check(
                (4 * p) % wt.denominator == 0,
                f"weight denominator does not divide 4p at ({r},{s})",
            )
            rec.check(
                lowest_weight_of_simple(params, r, s) >= params.weight_lower_bound,
                f"weight lower bound violated at ({r},{s})",
            )
        for n in range(-3, 4):
            for s in range(2, p):
                got = weight_coset_diff(params, (r + 2 * n, s - 1), (r, s + 1))
                rec.check(
                    got == Fraction(s, p),
                    f"coset congruence failure at r={r}, n={n}, s={s}: {got}",
                )
    return rec.result()


def _mat_is_scalar(m) -> bool:
    n = len(m)
    return all(m[i][j] == (m[0][0] if i == j else 0) for i in range(n) for j in range(n))


def _mat_is_zero(m) -> bool:
    return all(e == 0 for row in m for e in row)


def _mat_is_nilpotent(m) -> bool:
    n = len(m)
    power = m
    for _ in range(n):
        if _mat_is_zero(power):
            return True
        power = catalog._mul(power, m)
    return _mat_is_zero(power)


def _mat_commutes(a, b) -> bool:
    return catalog._mul(a, b) == catalog._mul(b, a)


SUITES: Dict[str, Callable[..., Result]] = {
    "fusion": fusion_suite,
    "triplet": triplet_suite,
    "bpz": bpz_suite,
    "catalog": catalog_suite,
    "labels": labels_suite,
}


def run_suite(name: str, params: Params, rwin: int = 3, jobs: int = 1) -> Result:
    """Run one named suite for one value of p."""
    if name == "fusion":
        return fusion_suite(params, rwin, jobs)
    if name == "triplet":
        return triplet_suite(params, rwin)
    if name == "bpz":
        return bpz_suite(params)
    if name == "catalog":
        return catalog_suite(params, rwin)
    if name == "labels":
        return labels_suite(params, rwin)
    raise ValueError(f"unknown suite {name!r}")


def run_suites(
    names: Sequence[str], p_values: Iterable[int], rwin: int = 3, jobs: int = 1
) -> Dict[str, Dict[int, Result]]:
    """Run several suites over several values of p."""
    report: Dict[str, Dict[int, Result]] = {}
    for name in names:
        report[name] = {}
        for p in p_values:
            report[name][p] = run_suite(name, Params(p), rwin=rwin, jobs=jobs)
    return report
