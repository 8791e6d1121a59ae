"""
Dense exact linear algebra over an exactfield :class:`Field`.

Matrices are sequences of rows; vectors are sequences of field elements. The
public functions validate that every entry belongs to the field, the ``_``
helpers assume it.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from hopf_integrality.exactfield import Field, MixedFieldError

logger = logging.getLogger('hopf_integrality.linalg')

Vector = tuple
Matrix = list


def _validate(field: Field, M: Sequence[Sequence], ncols: Optional[int]) -> int:
    if ncols is None:
        if not M:
            raise ValueError("cannot infer the column count of an empty matrix")
        ncols = len(M[0])
    for r, row in enumerate(M):
        if len(row) != ncols:
            raise ValueError(f"row {r} has length {len(row)}, expected {ncols}")
        for c, a in enumerate(row):
            if not field.contains(a):
                raise MixedFieldError(f"entry ({r}, {c}) = {a!r} is not an element of {field}")
    return ncols


def _rref(field: Field, M: Sequence[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    rows = [list(row) for row in M]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if not field.is_zero(rows[i][c])), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][c]
        if lead != field.one:
            inv = field.inv(lead)
            rows[r] = [field.mul(inv, a) for a in rows[r]]
        prow = rows[r]
        support = [j for j in range(c, ncols) if not field.is_zero(prow[j])]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if not field.is_zero(f):
                    row = rows[i]
                    for j in support:
                        row[j] = field.sub(row[j], field.mul(f, prow[j]))
        pivots.append(c)
        r += 1
    return rows, pivots


def mat_rref(field: Field, M: Sequence[Sequence], ncols: Optional[int] = None) -> tuple[list[list], list[int]]:
    """
    Reduced row-echelon form by exact Gauss-Jordan elimination.

    Returns the reduced matrix (same shape, zero rows last) and its pivot columns.

    :raises MixedFieldError: when an entry is not an element of ``field``.
    """
    ncols = _validate(field, M, ncols)
    return _rref(field, M, ncols)


def _kernel_basis(field: Field, R: list[list], pivots: list[int], ncols: int) -> list[Vector]:
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for r, p in enumerate(pivots):
            v[p] = field.neg(R[r][f])
        basis.append(tuple(v))
    return basis


def mat_kernel(field: Field, M: Sequence[Sequence], ncols: Optional[int] = None) -> 'Subspace':
    """Right kernel {v : Mv = 0}."""
    ncols = _validate(field, M, ncols)
    R, pivots = _rref(field, M, ncols)
    return Subspace.span(field, ncols, _kernel_basis(field, R, pivots, ncols))


@dataclass(frozen=True)
class LinearSolution:
    """Solution set ``particular + kernel`` of a consistent linear system."""

    particular: Vector
    kernel: 'Subspace'


def solve_linear(field: Field, M: Sequence[Sequence], b: Sequence,
                 ncols: Optional[int] = None) -> Optional[LinearSolution]:
    """Solve Mx = b exactly. An inconsistent system returns None."""
    ncols = _validate(field, M, ncols) if M else (ncols or 0)
    if len(b) != len(M):
        raise ValueError(f"right-hand side has length {len(b)}, expected {len(M)}")
    for a in b:
        field.check(a, 'right-hand side entry')
    augmented = [list(row) + [b[i]] for i, row in enumerate(M)]
    R, pivots = _rref(field, augmented, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.zero] * ncols
    for r, p in enumerate(pivots):
        x[p] = R[r][ncols]
    kernel = Subspace.span(field, ncols, _kernel_basis(field, [row[:ncols] for row in R], pivots, ncols))
    return LinearSolution(tuple(x), kernel)


def mat_vec(field: Field, M: Sequence[Sequence], v: Sequence) -> Vector:
    out = []
    for row in M:
        acc = field.zero
        for a, x in zip(row, v):
            if not field.is_zero(a) and not field.is_zero(x):
                acc = field.add(acc, field.mul(a, x))
        out.append(acc)
    return tuple(out)


def mat_mul(field: Field, A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    if not A:
        return []
    inner = len(B)
    ncols = len(B[0]) if B else 0
    out = []
    for row in A:
        if len(row) != inner:
            raise ValueError(f"cannot multiply {len(A)}x{len(row)} by {inner}x{ncols}")
        acc = [field.zero] * ncols
        for k, a in enumerate(row):
            if field.is_zero(a):
                continue
            for j, b in enumerate(B[k]):
                if not field.is_zero(b):
                    acc[j] = field.add(acc[j], field.mul(a, b))
        out.append(acc)
    return out


def transpose(M: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*M)]


def identity(field: Field, n: int) -> Matrix:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_inverse(field: Field, M: Sequence[Sequence]) -> Optional[Matrix]:
    """Inverse of a square matrix, or None when it is singular."""
    n = _validate(field, M, None) if M else 0
    if len(M) != n:
        raise ValueError(f"matrix is {len(M)}x{n}, not square")
    augmented = [list(row) + unit for row, unit in zip(M, identity(field, n))]
    R, pivots = _rref(field, augmented, 2 * n)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R]


def independent_subset(field: Field, vectors: Sequence[Sequence], dim: int) -> list[int]:
    """Indices of a maximal linearly independent prefix-greedy subset."""
    space = Subspace.zero(field, dim)
    chosen = []
    for i, v in enumerate(vectors):
        if not space.contains(v):
            chosen.append(i)
            space = space.extend([v])
    return chosen


@dataclass(frozen=True)
class Subspace:
    """
    Linear subspace of k^n, stored as the nonzero rows of its reduced row-echelon basis.

    Since the RREF is unique, two Subspace objects are equal exactly when they
    describe the same subspace.
    """

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> 'Subspace':
        vectors = [tuple(v) for v in vectors]
        if not vectors:
            return cls.zero(field, ambient_dim)
        _validate(field, vectors, ambient_dim)
        R, pivots = _rref(field, vectors, ambient_dim)
        return cls(field, ambient_dim, tuple(tuple(R[r]) for r in range(len(pivots))), tuple(pivots))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> 'Subspace':
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> 'Subspace':
        return cls(field, ambient_dim, tuple(tuple(r) for r in identity(field, ambient_dim)),
                   tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after clearing the pivot columns; zero iff v lies in the subspace."""
        F = self.field
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector has length {len(v)}, expected {self.ambient_dim}")
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if not F.is_zero(c):
                for j in range(p, self.ambient_dim):
                    if not F.is_zero(row[j]):
                        v[j] = F.sub(v[j], F.mul(c, row[j]))
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        return all(self.field.is_zero(a) for a in self.reduce(v))

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coefficients of ``v`` in the RREF basis, or None when v is not in the subspace."""
        if not self.contains(v):
            return None
        return tuple(v[p] for p in self.pivots)

    def combination(self, coefficients: Sequence) -> Vector:
        F = self.field
        out = [F.zero] * self.ambient_dim
        for c, row in zip(coefficients, self.basis):
            if not F.is_zero(c):
                for j, a in enumerate(row):
                    out[j] = F.add(out[j], F.mul(c, a))
        return tuple(out)

    def contains_subspace(self, other: 'Subspace') -> bool:
        return all(self.contains(v) for v in other.basis)

    def extend(self, vectors: Iterable[Sequence]) -> 'Subspace':
        return Subspace.span(self.field, self.ambient_dim, list(self.basis) + [tuple(v) for v in vectors])

    def sum(self, other: 'Subspace') -> 'Subspace':
        self._compatible(other)
        return self.extend(other.basis)

    def annihilator(self) -> 'Subspace':
        """{w : <v, w> = 0 for all v in the subspace} under the standard pairing."""
        if not self.basis:
            return Subspace.full(self.field, self.ambient_dim)
        return Subspace.span(self.field, self.ambient_dim,
                             _kernel_basis(self.field, [list(r) for r in self.basis],
                                           list(self.pivots), self.ambient_dim))

    def intersection(self, other: 'Subspace') -> 'Subspace':
        self._compatible(other)
        if self.is_full():
            return other
        if other.is_full():
            return self
        return self.annihilator().sum(other.annihilator()).annihilator()

    def complement_indices(self) -> list[int]:
        """Standard basis indices that complement the subspace (the non-pivot columns)."""
        pivots = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in pivots]

    def _compatible(self, other: 'Subspace'):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise MixedFieldError(
                f"subspaces of {self.field}^{self.ambient_dim} and {other.field}^{other.ambient_dim} are incompatible")
