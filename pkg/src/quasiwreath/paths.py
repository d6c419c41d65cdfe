"""Exponent vectors as lattice paths; Dyck vectors and the monomial basis.

``path_of(nu)`` walks ``nu[0]`` East steps, one North step, ``nu[1]`` East
steps, one North step, and so on.  A vector is Dyck when the path never
goes strictly right of the diagonal, i.e. ``nu[0] + ... + nu[i-1] <= i - 1``
for every i.  Everything else is transdiagonal.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .group import ResourceCapError, enumeration_cap
from .poly import monomials_of_degree

__all__ = [
    "HilbertSeries",
    "path_of",
    "vector_of_path",
    "path_vertices",
    "render_path",
    "is_dyck",
    "enumerate_dyck",
    "minimal_transdiagonal",
    "basis_monomials",
    "catalan",
    "closed_form_F",
    "hilbert_from_basis",
    "product_form_series",
    "single_power_series",
]


@dataclass(frozen=True)
class HilbertSeries:
    """Finitely supported series sum(coeffs[k] t^k); trailing zeros dropped."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_counts(cls, counts) -> "HilbertSeries":
        return cls(tuple(counts))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def total(self) -> int:
        return sum(self.coeffs)

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coeffs))

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return HilbertSeries(tuple(out))

    def __pow__(self, k: int) -> "HilbertSeries":
        out = HilbertSeries((1,))
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, m: int) -> "HilbertSeries":
        """F(t) -> F(t^m)."""
        out = [0] * (m * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            out[m * k] = c
        return HilbertSeries(tuple(out))

    def format(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts) if parts else "0"


def path_of(nu) -> str:
    """Step word over {'E', 'N'}: East runs of length nu[i] each closed by a North step."""
    return "".join("E" * a + "N" for a in nu)


def vector_of_path(path: str) -> tuple[int, ...]:
    if not path.endswith("N") or set(path) - {"E", "N"}:
        raise ValueError(f"not a vector path: {path!r}")
    return tuple(len(run) for run in path[:-1].split("N"))


def path_vertices(path: str) -> list[tuple[int, int]]:
    x = y = 0
    pts = [(0, 0)]
    for s in path:
        if s == "E":
            x += 1
        else:
            y += 1
        pts.append((x, y))
    return pts


def render_path(nu) -> str:
    """ASCII picture with North as '|' and East as '_', origin bottom-left.

    The diagonal is marked with '.' where the path does not cover it.
    """
    path = path_of(nu)
    width = sum(nu)
    height = len(nu)
    cols = max(width, height)
    grid = [[" "] * (2 * cols + 1) for _ in range(height + 1)]
    for k in range(min(cols, height) + 1):
        grid[height - k][2 * k] = "."
    x = y = 0
    for s in path:
        row = height - y
        if s == "E":
            grid[row][2 * x + 1] = "_"
            x += 1
        else:
            grid[row][2 * x] = "|"
            y += 1
    return "\n".join("".join(r).rstrip() for r in grid)


def is_dyck(nu) -> bool:
    s = 0
    for i, a in enumerate(nu):
        s += a
        if s > i:
            return False
    return True


def enumerate_dyck(n: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """All Dyck vectors of length n, lex ascending (there are C_n of them)."""
    limit = enumeration_cap(cap)
    if catalan(n) > limit:
        raise ResourceCapError(f"C_{n} = {catalan(n)} exceeds cap {limit}")
    out = []

    def rec(prefix, s):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        for a in range(0, i - s + 1):
            prefix.append(a)
            rec(prefix, s + a)
            prefix.pop()

    rec([], 0)
    return out


def minimal_transdiagonal(n: int, max_deg: int | None = None) -> list[tuple[int, ...]]:
    """Transdiagonal vectors of degree <= max_deg that are minimal for entrywise <=.

    Transdiagonality is closed upwards, so minimality only needs checking
    against the vectors one unit below.  Defaults to ``max_deg = n``, which
    already contains every minimal one.
    """
    if max_deg is None:
        max_deg = n
    out = []
    for d in range(max_deg + 1):
        for nu in monomials_of_degree(n, d):
            if is_dyck(nu):
                continue
            if all(
                is_dyck(nu[:i] + (nu[i] - 1,) + nu[i + 1 :]) for i in range(n) if nu[i]
            ):
                out.append(nu)
    return sorted(out, reverse=True)


def basis_monomials(n: int, m: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """Exponents m*eta + alpha for Dyck eta and 0 <= alpha_i < m, lex ascending."""
    limit = enumeration_cap(cap)
    size = m**n * catalan(n)
    if size > limit:
        raise ResourceCapError(f"m^n C_n = {size} exceeds cap {limit}")
    out = []
    for eta in enumerate_dyck(n, cap):
        for alpha in itertools.product(range(m), repeat=n):
            out.append(tuple(m * e + a for e, a in zip(eta, alpha)))
    return sorted(out)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def closed_form_F(n: int) -> HilbertSeries:
    """sum_{k<n} (n-k)/(n+k) * binom(n+k, k) * t^k, with exact integer coefficients."""
    coeffs = []
    for k in range(n):
        num = (n - k) * math.comb(n + k, k)
        q, r = divmod(num, n + k)
        assert r == 0
        coeffs.append(q)
    return HilbertSeries(tuple(coeffs))


def hilbert_from_basis(n: int, m: int, cap: int | None = None) -> HilbertSeries:
    counts: dict[int, int] = {}
    for nu in basis_monomials(n, m, cap):
        d = sum(nu)
        counts[d] = counts.get(d, 0) + 1
    top = max(counts, default=-1)
    return HilbertSeries(tuple(counts.get(k, 0) for k in range(top + 1)))


def _geometric(m: int) -> HilbertSeries:
    # (1 - t^m) / (1 - t)
    return HilbertSeries((1,) * m)


def product_form_series(n: int, m: int) -> HilbertSeries:
    """((1 - t^m)/(1 - t))^n * F_n(t^m)."""
    return _geometric(m) ** n * closed_form_F(n).substitute(m)


def single_power_series(n: int, m: int) -> HilbertSeries:
    """(1 - t^m)/(1 - t) * F_n(t^m), with the prefactor to the first power only."""
    return _geometric(m) * closed_form_F(n).substitute(m)
