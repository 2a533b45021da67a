"""Replacement matrices: companion build, spectral shift, real 2x2 embedding.

The companion-style matrix of a degree-m polynomial has the negated tail
coefficients in row one and the leading coefficient down the subdiagonal; its
eigenvalues are a0 times the roots.  Shifting to alpha*I + beta*R moves the
eigenvalues to alpha + beta*a0*r, which selects the root that dominates the
iteration.  Complex entries are then expanded to 2x2 integer blocks
[[a, b], [-b, a]] so the whole computation runs over plain integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gaussian import ZERO, GaussInt
from .polynomial import Polynomial


class ZeroBeta(ValueError):
    """A zero scale factor would make the iteration constant."""


@dataclass(frozen=True, slots=True)
class ReplacementMatrix:
    """m x m matrix of Gaussian integers, stored row-major."""

    entries: tuple[tuple[GaussInt, ...], ...]

    @property
    def m(self) -> int:
        return len(self.entries)


@dataclass(frozen=True, slots=True)
class RealBlockMatrix:
    """2m x 2m integer matrix whose 2x2 blocks encode complex entries."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def m(self) -> int:
        return len(self.entries) // 2

    def block_consistent(self) -> bool:
        """Check the [[a, b], [-b, a]] pairing of every 2x2 block."""
        e = self.entries
        for i in range(0, self.dim, 2):
            for j in range(0, self.dim, 2):
                if e[i][j] != e[i + 1][j + 1] or e[i][j + 1] != -e[i + 1][j]:
                    return False
        return True


def companion(p: Polynomial) -> ReplacementMatrix:
    """Replacement matrix of p: row one is (-a1, ..., -am), subdiagonal a0."""
    m = p.degree
    a0 = p.coeffs[0]
    rows = [tuple(-c for c in p.coeffs[1:])]
    for i in range(1, m):
        rows.append(tuple(a0 if j == i - 1 else ZERO for j in range(m)))
    return ReplacementMatrix(tuple(rows))


def shift(r: ReplacementMatrix, alpha: GaussInt, beta: GaussInt) -> ReplacementMatrix:
    """alpha*I + beta*R; beta must be nonzero."""
    if beta.is_zero():
        raise ZeroBeta("beta must be nonzero")
    rows = []
    for i, row in enumerate(r.entries):
        shifted = [beta * e for e in row]
        shifted[i] = shifted[i] + alpha
        rows.append(tuple(shifted))
    return ReplacementMatrix(tuple(rows))


def complexify(r: ReplacementMatrix) -> RealBlockMatrix:
    """Expand each entry a+bi to the real block [[a, b], [-b, a]]."""
    m = r.m
    rows = [[0] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        for j in range(m):
            e = r.entries[i][j]
            rows[2 * i][2 * j] = e.re
            rows[2 * i][2 * j + 1] = e.im
            rows[2 * i + 1][2 * j] = -e.im
            rows[2 * i + 1][2 * j + 1] = e.re
    return RealBlockMatrix(tuple(tuple(row) for row in rows))
