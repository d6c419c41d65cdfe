"""The generalized symmetric group G(n, m) as colored permutations.

An element is a pair (sigma, colors).  Its matrix has entry zeta^colors[i]
at row i, column sigma(i), and zeros elsewhere.  Indices are 0-based in
code and 1-based in the text form ``sigma=[3,1,2] colors=[1,0,1] m=3``.
"""

from __future__ import annotations

import itertools
import math
import os
import re
from dataclasses import dataclass
from typing import Iterator

from .exact import coerce, root_of_unity

__all__ = [
    "ColoredPermutation",
    "ResourceCapError",
    "DEFAULT_CAP",
    "enumeration_cap",
    "group_order",
    "enumerate_group",
    "adjacent_transposition",
    "color_twist",
    "group_generators",
]

DEFAULT_CAP = 200_000
CAP_ENV = "QUASIWREATH_CAP"


class ResourceCapError(RuntimeError):
    """A computation would exceed the configured element-count cap."""


def enumeration_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV)
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class ColoredPermutation:
    n: int
    m: int
    sigma: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive")
        if sorted(self.sigma) != list(range(self.n)):
            raise ValueError(f"sigma {self.sigma} is not a permutation of 0..{self.n - 1}")
        if len(self.colors) != self.n:
            raise ValueError("colors must have length n")
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "colors", tuple(c % self.m for c in self.colors))

    @classmethod
    def identity(cls, n: int, m: int) -> "ColoredPermutation":
        return cls(n, m, tuple(range(n)), (0,) * n)

    def _same_group(self, other: "ColoredPermutation"):
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError(
                f"elements of G({self.n},{self.m}) and G({other.n},{other.m}) do not compose"
            )

    def compose(self, other: "ColoredPermutation") -> "ColoredPermutation":
        """Group product whose matrix is ``self.to_matrix() @ other.to_matrix()``."""
        self._same_group(other)
        s, t = self.sigma, other.sigma
        return ColoredPermutation(
            self.n,
            self.m,
            tuple(t[s[i]] for i in range(self.n)),
            tuple(self.colors[i] + other.colors[s[i]] for i in range(self.n)),
        )

    __matmul__ = compose

    def inverse(self) -> "ColoredPermutation":
        sig = [0] * self.n
        col = [0] * self.n
        for i, j in enumerate(self.sigma):
            sig[j] = i
            col[j] = -self.colors[i]
        return ColoredPermutation(self.n, self.m, tuple(sig), tuple(col))

    def weight_exponent(self) -> int:
        return sum(self.colors) % self.m

    def weight(self):
        """Product of the nonzero matrix entries, zeta^(sum of colors)."""
        return coerce(root_of_unity(self.m, self.weight_exponent()), self.m)

    def modulus(self) -> "ColoredPermutation":
        """|g|: same permutation, all colors zero."""
        return ColoredPermutation(self.n, self.m, self.sigma, (0,) * self.n)

    def apply_to_variables(self) -> list[tuple[object, int]]:
        """Components of X . g^T as (coefficient, variable index) pairs.

        Component i is zeta^colors[i] * x_{sigma(i)}.
        """
        return [
            (coerce(root_of_unity(self.m, c), self.m), j)
            for c, j in zip(self.colors, self.sigma)
        ]

    def to_matrix(self) -> list[list]:
        zero = coerce(0, self.m)
        rows = [[zero] * self.n for _ in range(self.n)]
        for i, (j, c) in enumerate(zip(self.sigma, self.colors)):
            rows[i][j] = coerce(root_of_unity(self.m, c), self.m)
        return rows

    def is_identity(self) -> bool:
        return self.sigma == tuple(range(self.n)) and not any(self.colors)

    def __str__(self):
        sig = ",".join(str(j + 1) for j in self.sigma)
        col = ",".join(str(c) for c in self.colors)
        return f"sigma=[{sig}] colors=[{col}] m={self.m}"

    @classmethod
    def parse(cls, text: str) -> "ColoredPermutation":
        """Read ``sigma=[3,1,2] colors=[1,0,1] m=3`` (colors optional, default 0)."""
        sig = re.search(r"sigma\s*=\s*\[([^\]]*)\]", text)
        col = re.search(r"colors\s*=\s*\[([^\]]*)\]", text)
        mm = re.search(r"\bm\s*=\s*(\d+)", text)
        if not sig or not mm:
            raise ValueError(f"cannot parse group element {text!r}")
        sigma = tuple(int(v) - 1 for v in sig.group(1).split(",") if v.strip())
        colors = (
            tuple(int(v) for v in col.group(1).split(",") if v.strip())
            if col
            else (0,) * len(sigma)
        )
        return cls(len(sigma), int(mm.group(1)), sigma, colors)


def group_order(n: int, m: int) -> int:
    return m**n * math.factorial(n)


def enumerate_group(n: int, m: int, cap: int | None = None) -> Iterator[ColoredPermutation]:
    """Every element of G(n, m) once; raises ResourceCapError above the cap."""
    limit = enumeration_cap(cap)
    size = group_order(n, m)
    if size > limit:
        raise ResourceCapError(f"|G({n},{m})| = {size} exceeds cap {limit}")
    return (
        ColoredPermutation(n, m, sigma, colors)
        for sigma in itertools.permutations(range(n))
        for colors in itertools.product(range(m), repeat=n)
    )


def adjacent_transposition(n: int, m: int, i: int) -> ColoredPermutation:
    """Swap positions i and i+1 (0-based), no colors."""
    sigma = list(range(n))
    sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
    return ColoredPermutation(n, m, tuple(sigma), (0,) * n)


def color_twist(n: int, m: int, position: int = 0) -> ColoredPermutation:
    """Diagonal matrix with zeta at ``position`` and 1 elsewhere."""
    colors = [0] * n
    colors[position] = 1
    return ColoredPermutation(n, m, tuple(range(n)), tuple(colors))


def group_generators(n: int, m: int) -> list[ColoredPermutation]:
    gens = [adjacent_transposition(n, m, i) for i in range(n - 1)]
    if m > 1:
        gens.append(color_twist(n, m))
    return gens
