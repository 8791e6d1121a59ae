"""
Finite-dimensional algebras and Hopf algebras given by structure constants.

Basis elements are indexed 0..n-1. Table conventions:

    mult[i][j]   -- vector of e_i * e_j
    unit         -- vector of 1_H
    comult[i]    -- vector of length n*n, Delta(e_i) with e_j (x) e_k at index j*n + k
    counit[i]    -- epsilon(e_i)
    antipode[i]  -- vector of S(e_i)

Containers validate shapes and scalars only; :func:`verify_hopf_axioms` checks the
axioms exactly on basis elements.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from hopf_integrality.checks import CheckReport, CheckResult
from hopf_integrality.exactfield import Field, format_terms, parse_terms
from hopf_integrality.linalg import mat_inverse

logger = logging.getLogger('hopf_integrality.findim')

MAX_DIM = 64
_NAME_RE = re.compile(r"^(1|[A-Za-z_][A-Za-z0-9_]*)$")
DUAL_PREFIX = 'd_'


class HopfDataError(ValueError):
    """Exception raised for malformed structure-constant tables."""


class CoalgebraAxiomError(ValueError):
    """Exception raised when an operation needs a verified coalgebra and the data is not one."""


def _sparse(field: Field, vec: Sequence) -> list[tuple[int, object]]:
    return [(k, c) for k, c in enumerate(vec) if not field.is_zero(c)]


@dataclass(frozen=True)
class AlgebraTables:
    """Finite-dimensional unital algebra on an explicit basis."""

    field: Field
    dim: int
    basis_names: tuple
    mult: tuple
    unit: tuple

    @cached_property
    def _mult_sparse(self) -> list[list[list]]:
        return [[_sparse(self.field, self.mult[i][j]) for j in range(self.dim)] for i in range(self.dim)]

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise HopfDataError(f"unknown basis element {name!r}") from None

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis_vector(self, i: int) -> tuple:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def multiply(self, a: Sequence, b: Sequence) -> tuple:
        F = self.field
        out = [F.zero] * self.dim
        for i, x in _sparse(F, a):
            for j, y in _sparse(F, b):
                xy = F.mul(x, y)
                for k, c in self._mult_sparse[i][j]:
                    out[k] = F.add(out[k], F.mul(xy, c))
        return tuple(out)

    def scale(self, c, v: Sequence) -> tuple:
        return tuple(self.field.mul(c, a) for a in v)

    def add(self, a: Sequence, b: Sequence) -> tuple:
        return tuple(self.field.add(x, y) for x, y in zip(a, b))

    def sub(self, a: Sequence, b: Sequence) -> tuple:
        return tuple(self.field.sub(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class HopfAlgebraData(AlgebraTables):
    comult: tuple
    counit: tuple
    antipode: tuple
    coradical_hint: Optional[tuple] = None

    @cached_property
    def _comult_sparse(self) -> list[list]:
        n = self.dim
        return [[(t // n, t % n, c) for t, c in _sparse(self.field, self.comult[i])] for i in range(n)]

    def coproduct(self, v: Sequence) -> tuple:
        F = self.field
        out = [F.zero] * (self.dim * self.dim)
        for i, x in _sparse(F, v):
            for j, k, c in self._comult_sparse[i]:
                t = j * self.dim + k
                out[t] = F.add(out[t], F.mul(x, c))
        return tuple(out)

    def counit_value(self, v: Sequence):
        F = self.field
        return F.sum(F.mul(x, self.counit[i]) for i, x in _sparse(F, v))

    def apply_antipode(self, v: Sequence) -> tuple:
        F = self.field
        out = [F.zero] * self.dim
        for i, x in _sparse(F, v):
            for k, c in _sparse(F, self.antipode[i]):
                out[k] = F.add(out[k], F.mul(x, c))
        return tuple(out)

    def tensor(self, a: Sequence, b: Sequence) -> tuple:
        F = self.field
        out = [F.zero] * (self.dim * self.dim)
        for j, x in _sparse(F, a):
            for k, y in _sparse(F, b):
                out[j * self.dim + k] = F.mul(x, y)
        return tuple(out)

    def coproduct_terms(self, i: int) -> list[tuple[int, int, object]]:
        """Sweedler terms (j, k, c) of Delta(e_i) = sum c e_j (x) e_k."""
        return self._comult_sparse[i]

    def tables(self) -> tuple:
        return (self.mult, self.unit, self.comult, self.counit, self.antipode)


def _coerce_vector(field: Field, raw, length: int, where: str) -> tuple:
    if not isinstance(raw, (list, tuple)):
        raise HopfDataError(f"{where}: expected a list of {length} scalars")
    if len(raw) != length:
        raise HopfDataError(f"{where}: expected {length} scalars, got {len(raw)}")
    out = []
    for k, value in enumerate(raw):
        try:
            out.append(field.coerce(value))
        except (ValueError, ZeroDivisionError) as e:
            raise HopfDataError(f"{where}[{k}]: {e}") from e
    return tuple(out)


def _check_names(names: Sequence[str], dim: int) -> tuple:
    names = tuple(names)
    if len(names) != dim:
        raise HopfDataError(f"basis: expected {dim} names, got {len(names)}")
    for name in names:
        if not isinstance(name, str) or not _NAME_RE.match(name):
            raise HopfDataError(f"basis: invalid name {name!r}")
    if len(set(names)) != dim:
        raise HopfDataError("basis: duplicate names")
    return names


def build_algebra(field: Field, basis_names: Sequence[str], mult, unit) -> AlgebraTables:
    dim = len(basis_names)
    if not 1 <= dim <= MAX_DIM:
        raise HopfDataError(f"dimension must lie in [1, {MAX_DIM}], got {dim}")
    names = _check_names(basis_names, dim)
    if not isinstance(mult, (list, tuple)) or len(mult) != dim:
        raise HopfDataError(f"mult: expected {dim} rows")
    mult_t = []
    for i, row in enumerate(mult):
        if not isinstance(row, (list, tuple)) or len(row) != dim:
            raise HopfDataError(f"mult[{i}]: expected {dim} products")
        mult_t.append(tuple(_coerce_vector(field, v, dim, f"mult[{i}][{j}]") for j, v in enumerate(row)))
    return AlgebraTables(field, dim, names, tuple(mult_t), _coerce_vector(field, unit, dim, 'unit'))


def build_from_tables(field: Field, basis_names: Sequence[str], mult, unit, comult, counit, antipode,
                      coradical_hint: Optional[Iterable] = None) -> HopfAlgebraData:
    """
    Validate raw tables (scalars as strings, ints or field elements) into a container.

    Axioms are not checked here.

    :raises HopfDataError: on dimension mismatch, unparsable scalars or duplicate names.
    """
    algebra = build_algebra(field, basis_names, mult, unit)
    n = algebra.dim
    if not isinstance(comult, (list, tuple)) or len(comult) != n:
        raise HopfDataError(f"comult: expected {n} entries")
    comult_t = tuple(_coerce_vector(field, v, n * n, f"comult[{i}]") for i, v in enumerate(comult))
    counit_t = _coerce_vector(field, counit, n, 'counit')
    if not isinstance(antipode, (list, tuple)) or len(antipode) != n:
        raise HopfDataError(f"antipode: expected {n} rows")
    antipode_t = tuple(_coerce_vector(field, v, n, f"antipode[{i}]") for i, v in enumerate(antipode))
    hint = None
    if coradical_hint is not None:
        hint = tuple(_coerce_vector(field, v, n, f"coradical_hint[{i}]") for i, v in enumerate(coradical_hint))
    return HopfAlgebraData(field, n, algebra.basis_names, algebra.mult, algebra.unit,
                           comult_t, counit_t, antipode_t, hint)


def _dict_add(acc: dict, key, c, field: Field):
    v = field.add(acc.get(key, field.zero), c)
    if field.is_zero(v):
        acc.pop(key, None)
    else:
        acc[key] = v


def _tensor_products(H: HopfAlgebraData, a: dict, b: dict) -> dict:
    """Product in H (x) H of sparse tensors keyed by (j, k)."""
    F = H.field
    out = {}
    for (j, k), x in a.items():
        for (l, m), y in b.items():
            xy = F.mul(x, y)
            for p, c1 in H._mult_sparse[j][l]:
                c = F.mul(xy, c1)
                for q, c2 in H._mult_sparse[k][m]:
                    _dict_add(out, (p, q), F.mul(c, c2), F)
    return out


def _tensor_dict(H: HopfAlgebraData, i: int) -> dict:
    return {(j, k): c for j, k, c in H.coproduct_terms(i)}


def _check_associativity(A: AlgebraTables) -> CheckResult:
    for i in range(A.dim):
        for j in range(A.dim):
            ij = A.mult[i][j]
            for k in range(A.dim):
                left = A.multiply(ij, A.basis_vector(k))
                right = A.multiply(A.basis_vector(i), A.mult[j][k])
                if left != right:
                    return CheckResult('associativity', False,
                                       {'basis': [A.basis_names[i], A.basis_names[j], A.basis_names[k]]},
                                       '(e_i e_j) e_k != e_i (e_j e_k)')
    return CheckResult('associativity', True)


def _check_unit(A: AlgebraTables) -> CheckResult:
    for i in range(A.dim):
        e = A.basis_vector(i)
        if A.multiply(A.unit, e) != e or A.multiply(e, A.unit) != e:
            return CheckResult('unit', False, {'basis': [A.basis_names[i]]}, '1 * e_i != e_i or e_i * 1 != e_i')
    return CheckResult('unit', True)


def _check_coassociativity(H: HopfAlgebraData) -> CheckResult:
    F = H.field
    for i in range(H.dim):
        left, right = {}, {}
        for j, k, c in H.coproduct_terms(i):
            for a, b, c1 in H.coproduct_terms(j):
                _dict_add(left, (a, b, k), F.mul(c, c1), F)
            for a, b, c2 in H.coproduct_terms(k):
                _dict_add(right, (j, a, b), F.mul(c, c2), F)
        if left != right:
            return CheckResult('coassociativity', False, {'basis': [H.basis_names[i]]},
                               '(Delta (x) id) Delta != (id (x) Delta) Delta')
    return CheckResult('coassociativity', True)


def _check_counit(H: HopfAlgebraData) -> CheckResult:
    F = H.field
    for i in range(H.dim):
        left = [F.zero] * H.dim
        right = [F.zero] * H.dim
        for j, k, c in H.coproduct_terms(i):
            left[k] = F.add(left[k], F.mul(c, H.counit[j]))
            right[j] = F.add(right[j], F.mul(c, H.counit[k]))
        e = H.basis_vector(i)
        if tuple(left) != e or tuple(right) != e:
            return CheckResult('counit', False, {'basis': [H.basis_names[i]]},
                               '(epsilon (x) id) Delta != id or (id (x) epsilon) Delta != id')
    return CheckResult('counit', True)


def _check_comultiplication_multiplicative(H: HopfAlgebraData) -> CheckResult:
    F = H.field
    n = H.dim
    deltas = [_tensor_dict(H, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            expected = {}
            for k, c in H._mult_sparse[i][j]:
                for key, v in deltas[k].items():
                    _dict_add(expected, key, F.mul(c, v), F)
            if _tensor_products(H, deltas[i], deltas[j]) != expected:
                return CheckResult('comultiplication_multiplicative', False,
                                   {'basis': [H.basis_names[i], H.basis_names[j]]},
                                   'Delta(e_i e_j) != Delta(e_i) Delta(e_j)')
    unit_delta = {}
    for i, c in _sparse(F, H.unit):
        for j, k, v in H.coproduct_terms(i):
            _dict_add(unit_delta, (j, k), F.mul(c, v), F)
    expected_unit = {}
    for j, x in _sparse(F, H.unit):
        for k, y in _sparse(F, H.unit):
            _dict_add(expected_unit, (j, k), F.mul(x, y), F)
    if unit_delta != expected_unit:
        return CheckResult('comultiplication_multiplicative', False, {'basis': ['1']}, 'Delta(1) != 1 (x) 1')
    return CheckResult('comultiplication_multiplicative', True)


def _check_counit_multiplicative(H: HopfAlgebraData) -> CheckResult:
    F = H.field
    if H.counit_value(H.unit) != F.one:
        return CheckResult('counit_multiplicative', False, {'basis': ['1']}, 'epsilon(1) != 1')
    for i in range(H.dim):
        for j in range(H.dim):
            if H.counit_value(H.mult[i][j]) != F.mul(H.counit[i], H.counit[j]):
                return CheckResult('counit_multiplicative', False,
                                   {'basis': [H.basis_names[i], H.basis_names[j]]},
                                   'epsilon(e_i e_j) != epsilon(e_i) epsilon(e_j)')
    return CheckResult('counit_multiplicative', True)


def antipode_convolutions(H: HopfAlgebraData, v: Sequence) -> tuple[tuple, tuple]:
    """Return (sum S(v_1) v_2, sum v_1 S(v_2)) for an arbitrary element v."""
    F = H.field
    left = H.zero_vector()
    right = H.zero_vector()
    for i, x in _sparse(F, v):
        for j, k, c in H.coproduct_terms(i):
            xc = F.mul(x, c)
            left = H.add(left, H.scale(xc, H.multiply(H.antipode[j], H.basis_vector(k))))
            right = H.add(right, H.scale(xc, H.multiply(H.basis_vector(j), H.antipode[k])))
    return left, right


def _check_antipode(H: HopfAlgebraData) -> CheckResult:
    for i in range(H.dim):
        expected = H.scale(H.counit[i], H.unit)
        left, right = antipode_convolutions(H, H.basis_vector(i))
        if left != expected or right != expected:
            return CheckResult('antipode', False, {'basis': [H.basis_names[i]]},
                               'mu (S (x) id) Delta != epsilon 1 or mu (id (x) S) Delta != epsilon 1')
    return CheckResult('antipode', True)


AXIOM_NAMES = ('associativity', 'unit', 'coassociativity', 'counit',
               'comultiplication_multiplicative', 'counit_multiplicative', 'antipode')


def check_coalgebra_axioms(H: HopfAlgebraData) -> CheckReport:
    return CheckReport((_check_coassociativity(H), _check_counit(H)))


def verify_hopf_axioms(H: HopfAlgebraData) -> CheckReport:
    """Run the seven exact axiom checks on basis elements."""
    report = CheckReport((
        _check_associativity(H),
        _check_unit(H),
        _check_coassociativity(H),
        _check_counit(H),
        _check_comultiplication_multiplicative(H),
        _check_counit_multiplicative(H),
        _check_antipode(H),
    ))
    logger.debug("axioms for dim %d over %s: %s", H.dim, H.field,
                 ', '.join(f"{c.name}={'ok' if c.passed else 'FAIL'}" for c in report))
    return report


def tensor_square_multiply(H: HopfAlgebraData, a: Sequence, b: Sequence) -> tuple:
    """Product (a_1 (x) a_2)(b_1 (x) b_2) = a_1 b_1 (x) a_2 b_2 of two elements of H (x) H."""
    n = H.dim
    if len(a) != n * n or len(b) != n * n:
        raise HopfDataError(f"tensor-square elements must have length {n * n}")
    F = H.field
    da = {(t // n, t % n): c for t, c in _sparse(F, a)}
    db = {(t // n, t % n): c for t, c in _sparse(F, b)}
    out = [F.zero] * (n * n)
    for (j, k), c in _tensor_products(H, da, db).items():
        out[j * n + k] = c
    return tuple(out)


def dual_name(name: str) -> str:
    return name[len(DUAL_PREFIX):] if name.startswith(DUAL_PREFIX) else DUAL_PREFIX + name


def dual_algebra(H: HopfAlgebraData) -> AlgebraTables:
    """
    Convolution algebra H* on the dual basis: (f g)(h) = (f (x) g)(Delta h), unit epsilon.

    :raises CoalgebraAxiomError: when coassociativity or the counit law fails.
    """
    report = check_coalgebra_axioms(H)
    if not report.passed:
        raise CoalgebraAxiomError(f"not a coalgebra: {', '.join(c.name for c in report.failures())} failed")
    n = H.dim
    mult = tuple(tuple(tuple(H.comult[k][i * n + j] for k in range(n)) for j in range(n)) for i in range(n))
    return AlgebraTables(H.field, n, tuple(dual_name(s) for s in H.basis_names), mult, H.counit)


def dual_hopf(H: HopfAlgebraData) -> HopfAlgebraData:
    """Dual Hopf algebra H*; dual_hopf(dual_hopf(H)) has exactly the tables of H."""
    n = H.dim
    mult = tuple(tuple(tuple(H.comult[k][i * n + j] for k in range(n)) for j in range(n)) for i in range(n))
    comult = tuple(tuple(H.mult[t // n][t % n][i] for t in range(n * n)) for i in range(n))
    antipode = tuple(tuple(H.antipode[j][i] for j in range(n)) for i in range(n))
    return HopfAlgebraData(H.field, n, tuple(dual_name(s) for s in H.basis_names), mult, H.counit,
                           comult, H.unit, antipode)


def is_cocommutative(H: HopfAlgebraData) -> bool:
    n = H.dim
    return all(H.comult[i][j * n + k] == H.comult[i][k * n + j]
               for i in range(n) for j in range(n) for k in range(j + 1, n))


def is_commutative(A: AlgebraTables) -> bool:
    return all(A.mult[i][j] == A.mult[j][i] for i in range(A.dim) for j in range(i + 1, A.dim))


def change_of_basis(H: HopfAlgebraData, P: Sequence[Sequence], names: Optional[Sequence[str]] = None) -> HopfAlgebraData:
    """
    Express H in the basis whose r-th element is sum_s P[r][s] e_s.

    :raises HopfDataError: when P is singular.
    """
    F = H.field
    n = H.dim
    P = [[F.coerce(a) for a in row] for row in P]
    Q = mat_inverse(F, P)
    if Q is None:
        raise HopfDataError("change-of-basis matrix is singular")

    def coords(v):
        return tuple(F.sum(F.mul(v[s], Q[s][r]) for s in range(n) if not F.is_zero(v[s])) for r in range(n))

    def combine(rows, coeffs):
        out = [F.zero] * len(rows[0])
        for c, row in zip(coeffs, rows):
            if not F.is_zero(c):
                for t, a in enumerate(row):
                    out[t] = F.add(out[t], F.mul(c, a))
        return out

    new_basis = [tuple(row) for row in P]
    mult = tuple(tuple(coords(H.multiply(new_basis[r], new_basis[t])) for t in range(n)) for r in range(n))
    comult = []
    for r in range(n):
        w = combine(H.comult, P[r])
        out = [F.zero] * (n * n)
        for t, c in _sparse(F, w):
            j, k = divmod(t, n)
            for a in range(n):
                if F.is_zero(Q[j][a]):
                    continue
                ca = F.mul(c, Q[j][a])
                for b in range(n):
                    if not F.is_zero(Q[k][b]):
                        out[a * n + b] = F.add(out[a * n + b], F.mul(ca, Q[k][b]))
        comult.append(tuple(out))
    counit = tuple(H.counit_value(new_basis[r]) for r in range(n))
    antipode = tuple(coords(H.apply_antipode(new_basis[r])) for r in range(n))
    names = _check_names(names or [f"b{r}" for r in range(n)], n)
    return HopfAlgebraData(F, n, names, mult, coords(H.unit), tuple(comult), counit, antipode)


def parse_element(A: AlgebraTables, text: str) -> tuple:
    """
    Parse an expression in basis names, e.g. ``"x + g*x"`` or ``"g^2 - 1"``.

    Numerals denote multiples of the unit; parenthesised groups are field scalars.
    """
    F = A.field
    acc = A.zero_vector()
    for term in parse_terms(text, F, names=[s for s in A.basis_names if s != '1']):
        v = A.unit
        for name, e in term.factors:
            b = A.basis_vector(A.index(name))
            for _ in range(e):
                v = A.multiply(v, b)
        acc = A.add(acc, A.scale(term.coefficient, v))
    return acc


def format_element(A: AlgebraTables, v: Sequence) -> str:
    return format_terms(A.field, [(c, '' if name == '1' else name) for c, name in zip(v, A.basis_names)])


def structure_summary(H: HopfAlgebraData) -> dict:
    return {
        'field': str(H.field),
        'dim': H.dim,
        'basis': list(H.basis_names),
        'commutative': is_commutative(H),
        'cocommutative': is_cocommutative(H),
    }

