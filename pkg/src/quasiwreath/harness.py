"""Cross-checking the dimension of the super-coinvariant space by several routes.

Routes, each producing the graded dimensions of Q[X] / <QInv+(n, m)>:

``basis``
    count the Dyck-path monomials m*eta + alpha by degree;
``groebner``
    standard monomials of a degree-truncated reduced Groebner basis;
``linear``
    per-degree rank of the ideal by exact row reduction;
``orthogonal``
    per-degree kernel of P -> (Q(d/dX) P) over the quasi-invariant generators Q;
``formula``
    ((1 - t^m)/(1 - t))^n * F_n(t^m).
"""

from __future__ import annotations

import hashlib
import json
import math
import time
from dataclasses import dataclass, field

from .group import ResourceCapError, enumeration_cap
from .groebner import buchberger_truncated, quotient_hilbert_linear
from .linalg import Echelon
from .paths import (
    HilbertSeries,
    catalan,
    hilbert_from_basis,
    minimal_transdiagonal,
    single_power_series,
    product_form_series,
)
from .poly import Poly, apply_differential, monomials_of_degree
from .qsym import elementary_symmetric, qinv_generators

__all__ = [
    "ROUTES",
    "DEFAULT_MATRIX",
    "default_horizon",
    "expected_dimension",
    "hilbert_route",
    "orthogonal_dimension",
    "orthogonal_series",
    "groebner_basis_for",
    "chevalley_series",
    "RouteResult",
    "VerificationReport",
    "run_verification",
]

ROUTES = ("basis", "groebner", "linear", "orthogonal", "formula")

# m -> largest n checked by default
DEFAULT_MATRIX = {1: 5, 2: 4, 3: 3, 4: 2}


def default_horizon(n: int, m: int) -> int:
    """Top degree of the Dyck basis, m(n-1) + n(m-1), plus m."""
    return m * (n - 1) + n * (m - 1) + m


def expected_dimension(n: int, m: int) -> int:
    return m**n * catalan(n)


def _check_size(label: str, size: int, cap: int | None):
    limit = enumeration_cap(cap)
    if size > limit:
        raise ResourceCapError(f"{label}: size {size} exceeds cap {limit}")


def _truncate(series: HilbertSeries, max_deg: int) -> HilbertSeries:
    return HilbertSeries(series.coeffs[: max_deg + 1])


def orthogonal_dimension(n: int, m: int, k: int, cap: int | None = None) -> int:
    """dim of the degree-k polynomials P with Q(d/dX) P = 0 for every M_alpha(X^m), m|alpha| <= k."""
    cols = monomials_of_degree(n, k)
    gens = qinv_generators(n, m, k)
    nrows = sum(len(monomials_of_degree(n, k - g.degree())) for g in gens)
    _check_size(f"orthogonal system n={n} m={m} k={k}", nrows * len(cols), cap)
    if not gens:
        return len(cols)
    # matrix rows are indexed by (generator, output monomial); fill column by column
    rows: dict = {}
    for mu in cols:
        x_mu = Poly.monomial(mu)
        for gi, q in enumerate(gens):
            image = apply_differential(q, x_mu)
            for gamma, c in image.terms.items():
                rows.setdefault((gi, gamma), {})[mu] = c
    ech = Echelon(len(cols))
    for key in sorted(rows):
        if ech.full():
            break
        ech.add(rows[key])
    return len(cols) - ech.rank


def orthogonal_series(n: int, m: int, max_deg: int, cap: int | None = None) -> HilbertSeries:
    return HilbertSeries(tuple(orthogonal_dimension(n, m, k, cap) for k in range(max_deg + 1)))


def groebner_basis_for(n: int, m: int, max_deg: int | None = None, strategy: str = "normal"):
    """Reduced basis of <QInv+(n, m)> truncated at ``max_deg``."""
    if max_deg is None:
        max_deg = default_horizon(n, m)
    return buchberger_truncated(
        qinv_generators(n, m, max_deg), max_deg, nvars=n, strategy=strategy
    )


def hilbert_route(
    route: str, n: int, m: int, max_deg: int | None = None, cap: int | None = None
) -> HilbertSeries:
    """Graded dimensions of the quotient through one route, up to ``max_deg``."""
    if max_deg is None:
        max_deg = default_horizon(n, m)
    if route == "basis":
        return _truncate(hilbert_from_basis(n, m, cap), max_deg)
    if route == "formula":
        return _truncate(product_form_series(n, m), max_deg)
    if route == "groebner":
        _check_size(f"groebner n={n} m={m}", len(monomials_of_degree(n, max_deg)), cap)
        return groebner_basis_for(n, m, max_deg).hilbert_series(max_deg)
    if route == "linear":
        # a pivot row in column j has support in columns <= j
        cols = len(monomials_of_degree(n, max_deg))
        _check_size(f"linear n={n} m={m}", cols * (cols + 1) // 2, cap)
        return quotient_hilbert_linear(qinv_generators(n, m, max_deg), max_deg, nvars=n)
    if route == "orthogonal":
        return orthogonal_series(n, m, max_deg, cap)
    raise ValueError(f"unknown route {route!r}; choose from {', '.join(ROUTES)}")


def chevalley_series(n: int, m: int, max_deg: int | None = None) -> tuple[HilbertSeries, int]:
    """Standard-monomial counts of <e_1(X^m), ..., e_n(X^m)> and the horizon used."""
    if max_deg is None:
        max_deg = m * n * (n - 1) // 2 + n * (m - 1) + m
    gens = [elementary_symmetric(k, n).substitute_power(m) for k in range(1, n + 1)]
    gb = buchberger_truncated(gens, max_deg, nvars=n)
    return gb.hilbert_series(max_deg), max_deg


@dataclass
class RouteResult:
    route: str
    status: str  # "OK" or "SKIPPED"
    series: tuple[int, ...] = ()
    total: int | None = None
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self, timings: bool = True) -> dict:
        d = {
            "route": self.route,
            "status": self.status,
            "series": list(self.series),
            "total": self.total,
        }
        if self.detail:
            d["detail"] = self.detail
        if timings:
            d["seconds"] = round(self.seconds, 4)
        return d


@dataclass
class VerificationReport:
    n: int
    m: int
    max_deg: int
    routes: list[RouteResult] = field(default_factory=list)
    checks: list[dict] = field(default_factory=list)
    single_power_formula: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "FAIL" if any(c["status"] == "FAIL" for c in self.checks) else "PASS"

    def series(self, route: str) -> tuple[int, ...] | None:
        for r in self.routes:
            if r.route == route and r.status == "OK":
                return r.series
        return None

    def to_dict(self, timings: bool = True) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "max_deg": self.max_deg,
            "expected_total": expected_dimension(self.n, self.m),
            "routes": [r.to_dict(timings) for r in self.routes],
            "checks": self.checks,
            "single_power_formula": self.single_power_formula,
            "status": self.status,
        }

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=2)

    def digest(self) -> str:
        """sha256 of the report with timings stripped."""
        return hashlib.sha256(self.to_json(timings=False).encode()).hexdigest()

    def to_text(self) -> str:
        lines = [f"G({self.n},{self.m})  horizon={self.max_deg}  expected={expected_dimension(self.n, self.m)}"]
        for r in self.routes:
            if r.status == "OK":
                body = ",".join(map(str, r.series))
                lines.append(f"  {r.route:<11} total={r.total:<6} series={body}  ({r.seconds:.2f}s)")
            else:
                lines.append(f"  {r.route:<11} SKIPPED  {r.detail}")
        for c in self.checks:
            lines.append(f"  [{c['status']}] {c['name']}: {c['detail']}")
        pc = self.single_power_formula
        if pc:
            verdict = "consistent" if pc["consistent"] else "INCONSISTENT"
            lines.append(
                f"  single-power Hilbert formula: total {pc['total']} vs "
                f"{expected_dimension(self.n, self.m)} -> {verdict}"
            )
        lines.append(f"  {self.status}")
        return "\n".join(lines)


def _check(report: VerificationReport, name: str, ok: bool, detail: str):
    report.checks.append({"name": name, "status": "PASS" if ok else "FAIL", "detail": detail})


def run_verification(
    n: int,
    m: int,
    routes=None,
    max_deg: int | None = None,
    cap: int | None = None,
) -> VerificationReport:
    """Run the selected routes for G(n, m) and compare them coefficient-wise."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    routes = list(routes or ROUTES)
    for r in routes:
        if r not in ROUTES:
            raise ValueError(f"unknown route {r!r}")
    if max_deg is None:
        max_deg = default_horizon(n, m)
    report = VerificationReport(n, m, max_deg)
    expected = expected_dimension(n, m)

    for route in routes:
        t0 = time.perf_counter()
        try:
            s = hilbert_route(route, n, m, max_deg, cap)
        except ResourceCapError as exc:
            report.routes.append(RouteResult(route, "SKIPPED", detail=str(exc)))
            continue
        padded = tuple(s[k] for k in range(max_deg + 1))
        report.routes.append(
            RouteResult(route, "OK", padded, sum(padded), seconds=time.perf_counter() - t0)
        )

    done = [r for r in report.routes if r.status == "OK"]
    if done:
        ref = done[0]
        agree = all(r.series == ref.series for r in done)
        _check(
            report,
            "routes_agree",
            agree,
            ", ".join(f"{r.route}={r.total}" for r in done),
        )
        for r in done:
            _check(report, f"total[{r.route}]", r.total == expected, f"{r.total} vs m^n*C_n = {expected}")
        # one vanishing degree means every higher degree vanishes too
        for r in done:
            if r.route in ("groebner", "linear", "orthogonal"):
                _check(
                    report,
                    f"vanishes_at_horizon[{r.route}]",
                    r.series[max_deg] == 0,
                    f"dim in degree {max_deg} = {r.series[max_deg]}",
                )
    basis = report.series("basis")
    if basis is not None:
        pf = product_form_series(n, m)
        _check(
            report,
            "product_form",
            basis == tuple(pf[k] for k in range(max_deg + 1)) and len(pf) <= max_deg + 1,
            f"((1-t^m)/(1-t))^n F_n(t^m) = {pf.format()}",
        )
    if "groebner" in routes and report.series("groebner") is not None and max_deg >= m * n:
        lms = sorted(groebner_basis_for(n, m, max_deg).leading_monomials())
        predicted = sorted(tuple(m * a for a in eps) for eps in minimal_transdiagonal(n))
        _check(report, "leading_terms", lms == predicted, f"{len(lms)} leading monomials")

    single = single_power_series(n, m)
    report.single_power_formula = {
        "series": list(single.coeffs),
        "total": single.total(),
        "consistent": single.total() == expected,
    }
    return report


def default_matrix():
    """(n, m) cells checked by default."""
    return [(n, m) for m, top in sorted(DEFAULT_MATRIX.items()) for n in range(1, top + 1)]


def chevalley_expected(n: int, m: int) -> int:
    return m**n * math.factorial(n)
