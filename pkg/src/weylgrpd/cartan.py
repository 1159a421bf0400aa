"""Cartan data ``(B, tau)`` over the rationals.

A Cartan datum is a square matrix ``B`` of exact rationals together with a
parity vector ``tau``.  This module checks regularity, symmetrizes, computes
Serre matrices and applies odd reflections to symmetric data.

Index arguments named ``i`` are 1-based, as are colors elsewhere in the
package; matrices are stored as tuples of row tuples.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    NonIntegralEntry,
    NotIsotropic,
    NotSymmetrizable,
    ZeroScalar,
)

Matrix = tuple[tuple[Fraction, ...], ...]
SerreMatrix = tuple[tuple[int, ...], ...]


class Parity(enum.IntEnum):
    """An element of Z/2."""

    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def __str__(self):
        return self.name.lower()

    @classmethod
    def parse(cls, value) -> Parity:
        if isinstance(value, Parity):
            return value
        if isinstance(value, str):
            try:
                return cls[value.upper()]
            except KeyError:
                raise ValueError(f"unknown parity {value!r}") from None
        if value in (0, 1):
            return cls(value)
        raise ValueError(f"unknown parity {value!r}")


EVEN, ODD = Parity.EVEN, Parity.ODD


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


@dataclass(frozen=True, init=False, eq=False)
class CartanDatum:
    """The pair ``(B, tau)``.  Entries of ``B`` are coerced to Fraction."""

    B: Matrix
    tau: tuple[Parity, ...]

    def __init__(self, B, tau):
        B = _as_matrix(B)
        tau = tuple(Parity.parse(t) for t in tau)
        n = len(B)
        if n == 0:
            raise DimensionMismatch("B must have at least one row")
        if any(len(row) != n for row in B):
            raise DimensionMismatch("B is not square")
        if len(tau) != n:
            raise DimensionMismatch(f"tau has length {len(tau)}, expected {n}")
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "tau", tau)
        self._validate()

    def _validate(self):
        pass

    def __eq__(self, other):
        if not isinstance(other, CartanDatum):
            return NotImplemented
        return self.B == other.B and self.tau == other.tau

    def __hash__(self):
        return hash((self.B, self.tau))

    @property
    def n(self) -> int:
        return len(self.B)

    def b(self, i: int, j: int) -> Fraction:
        """Entry ``b_ij`` with 1-based indices."""
        return self.B[i - 1][j - 1]


class SymmetricCartanDatum(CartanDatum):
    """A Cartan datum whose matrix satisfies ``b_ij == b_ji`` exactly."""

    def _validate(self):
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                if self.B[i][j] != self.B[j][i]:
                    raise NotSymmetrizable(
                        f"B is not symmetric at ({i + 1}, {j + 1})"
                    )


@dataclass(frozen=True)
class RegularityReport:
    violations: list = field(default_factory=list)

    @property
    def is_regular(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.is_regular


def _components(n, adjacent) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        comp, queue = [], deque([start])
        while queue:
            i = queue.popleft()
            comp.append(i)
            for j in range(n):
                if not seen[j] and adjacent(i, j):
                    seen[j] = True
                    queue.append(j)
        comps.append(sorted(comp))
    return comps


def check_regular(d: CartanDatum) -> RegularityReport:
    """Check the four regularity conditions on ``(B, tau)``.

    Violations are ``(condition, (i, j), message)`` triples with 1-based
    indices.  Condition ids: ``"zero-row"``, ``"decomposable"``,
    ``"zero-pattern"``, ``"even"``, ``"odd"``.
    """
    n, B = d.n, d.B
    out = []
    for i in range(n):
        if all(x == 0 for x in B[i]):
            out.append(("zero-row", (i + 1, i + 1), f"row {i + 1} of B is zero"))
    comps = _components(n, lambda i, j: B[i][j] != 0 or B[j][i] != 0)
    if len(comps) > 1:
        out.append((
            "decomposable",
            (comps[0][0] + 1, comps[1][0] + 1),
            f"B splits into {len(comps)} blocks",
        ))
    for i in range(n):
        for j in range(i + 1, n):
            if (B[i][j] == 0) != (B[j][i] == 0):
                out.append((
                    "zero-pattern",
                    (i + 1, j + 1),
                    f"b_{i + 1}{j + 1} and b_{j + 1}{i + 1} are not both zero or both nonzero",
                ))
    for i in range(n):
        bii = B[i][i]
        if d.tau[i] == EVEN and bii == 0:
            out.append(("even", (i + 1, i + 1), f"even root {i + 1} has b_ii = 0"))
            continue
        if bii == 0:
            continue
        for j in range(n):
            if j == i:
                continue
            q = 2 * B[i][j] / bii
            if d.tau[i] == EVEN:
                ok = q.denominator == 1 and q <= 0
                expect = "a non-positive integer"
            else:
                ok = q.denominator == 1 and q <= 0 and q.numerator % 2 == 0
                expect = "a non-positive even integer"
            if not ok:
                out.append((
                    "even" if d.tau[i] == EVEN else "odd",
                    (i + 1, j + 1),
                    f"2 b_ij / b_ii = {q} is not {expect}",
                ))
    return RegularityReport(out)


def symmetrizing_scalars(d: CartanDatum) -> tuple[Fraction, ...]:
    """Diagonal ``D`` with ``D B`` symmetric, fixed by ``d_1 = 1``.

    Scalars propagate along a BFS spanning tree of the graph of nonzero
    off-diagonal entries; each further component restarts at 1.
    """
    n, B = d.n, d.B
    D = [None] * n
    for start in range(n):
        if D[start] is not None:
            continue
        D[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or D[j] is not None or B[i][j] == 0:
                    continue
                if B[j][i] == 0:
                    raise NotSymmetrizable(
                        f"b_{i + 1}{j + 1} != 0 but b_{j + 1}{i + 1} == 0"
                    )
                D[j] = D[i] * B[i][j] / B[j][i]
                queue.append(j)
    for i in range(n):
        for j in range(i + 1, n):
            if D[i] * B[i][j] != D[j] * B[j][i]:
                raise NotSymmetrizable(
                    f"cycle through ({i + 1}, {j + 1}) forces inconsistent scalars"
                )
    return tuple(D)


def symmetrize(d: CartanDatum) -> SymmetricCartanDatum:
    if isinstance(d, SymmetricCartanDatum):
        return d
    D = symmetrizing_scalars(d)
    return SymmetricCartanDatum(rescale_rows(d, D).B, d.tau)


def rescale_rows(d: CartanDatum, scalars: Sequence) -> CartanDatum:
    if len(scalars) != d.n:
        raise DimensionMismatch(f"expected {d.n} scalars, got {len(scalars)}")
    scalars = [Fraction(s) for s in scalars]
    if any(s == 0 for s in scalars):
        raise ZeroScalar("row scalars must be nonzero")
    return CartanDatum(
        [[s * x for x in row] for s, row in zip(scalars, d.B)], d.tau
    )


def serre_matrix(d: CartanDatum) -> SerreMatrix:
    """The generalized Cartan matrix normalizing ``B`` row by row.

    ``a_ij = 2 b_ij / b_ii`` when ``b_ii != 0``; rows of odd isotropic
    roots get ``-1`` at every nonzero off-diagonal entry.
    """
    n, B = d.n, d.B
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2)
            elif B[i][j] == 0:
                row.append(0)
            elif B[i][i] == 0:
                row.append(-1)
            else:
                q = 2 * B[i][j] / B[i][i]
                if q.denominator != 1:
                    raise NonIntegralEntry(
                        f"2 b_{i + 1}{j + 1} / b_{i + 1}{i + 1} = {q} is not an integer"
                    )
                row.append(int(q))
        rows.append(tuple(row))
    return tuple(rows)


def is_generalized_cartan_matrix(a: SerreMatrix) -> bool:
    n = len(a)
    for i in range(n):
        if a[i][i] != 2:
            return False
        for j in range(n):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                return False
    return True


def is_odd_isotropic(d: CartanDatum, i: int) -> bool:
    if not 1 <= i <= d.n:
        raise IndexError(f"index {i} out of range 1..{d.n}")
    return d.tau[i - 1] == ODD and d.B[i - 1][i - 1] == 0


def odd_reflect_datum(d: SymmetricCartanDatum, i: int) -> SymmetricCartanDatum:
    """Symmetric Cartan datum after the odd reflection at color ``i``."""
    if not is_odd_isotropic(d, i):
        raise NotIsotropic(f"simple root {i} is not odd isotropic")
    n, B = d.n, d.B
    k0 = i - 1
    rows = []
    for j in range(n):
        row = []
        for k in range(n):
            if j == k0 or k == k0:
                row.append(-B[j][k])
            elif B[j][k0] * B[k0][k] == 0:
                row.append(B[j][k])
            else:
                row.append(B[j][k] + B[k0][k] + B[j][k0])
        rows.append(row)
    tau = [t if B[k0][j] == 0 else t + ODD for j, t in enumerate(d.tau)]
    return SymmetricCartanDatum(rows, tau)


def gram_of_roots(form, roots) -> Matrix:
    """Pairings ``roots[j]^T form roots[k]`` as a square rational matrix."""
    form = _as_matrix(form)
    dim = len(form)
    for r in roots:
        if len(r) != dim:
            raise DimensionMismatch(
                f"root of length {len(r)} does not match form of size {dim}"
            )
    images = [
        [sum(form[a][b] * r[b] for b in range(dim) if r[b]) for a in range(dim)]
        for r in roots
    ]
    return tuple(
        tuple(sum(Fraction(x[a]) * y[a] for a in range(dim) if x[a]) for y in images)
        for x in roots
    )


def parity_of_root(tau: Sequence[Parity], coords: Sequence[int]) -> Parity:
    """Parity of ``sum coords[k] * alpha_k`` given simple parities ``tau``."""
    return Parity(sum(c * int(t) for c, t in zip(coords, tau)) % 2)
