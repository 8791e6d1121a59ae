"""
Builders for concrete Hopf algebras and actions: group algebras, Taft algebras
(the Sweedler algebra among them), the counterexample action of a Taft algebra
on k[y, z]/(z^2) and the sign action of C_2 on k[y].

Every Hopf algebra returned here has passed :func:`verify_hopf_axioms`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from sympy.combinatorics import Permutation, SymmetricGroup

from hopf_integrality.action import ActionSpec, act
from hopf_integrality.checks import CheckReport, CheckResult
from hopf_integrality.commalg import FPCommAlgebra
from hopf_integrality.exactfield import (
    CyclotomicField,
    Field,
    PrimeField,
    RationalField,
    multiplicative_order,
)
from hopf_integrality.findim import (
    MAX_DIM,
    HopfAlgebraData,
    build_from_tables,
    dual_hopf,
    tensor_square_multiply,
    verify_hopf_axioms,
)

logger = logging.getLogger('hopf_integrality.models')


class ModelError(ValueError):
    """Exception raised when a model cannot be built from the given parameters."""


@dataclass(frozen=True)
class FiniteGroup:
    """Finite group on indices 0..n-1; ``table[i][j]`` is the index of g_i g_j."""

    names: tuple
    table: tuple
    identity: int
    inverses: tuple

    @property
    def order(self) -> int:
        return len(self.names)


def group_from_table(names: Sequence[str], table: Sequence[Sequence[int]]) -> FiniteGroup:
    """
    :raises ModelError: when the table is not a group law.
    """
    n = len(names)
    if not 1 <= n <= MAX_DIM:
        raise ModelError(f"group order must lie in [1, {MAX_DIM}], got {n}")
    if len(table) != n or any(len(row) != n for row in table):
        raise ModelError(f"group table must be {n} x {n}")
    table = tuple(tuple(int(k) for k in row) for row in table)
    if any(not 0 <= k < n for row in table for k in row):
        raise ModelError("group table entries must be element indices")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise ModelError(f"group table is not associative at ({names[i]}, {names[j]}, {names[k]})")
    identity = next((e for e in range(n) if all(table[e][i] == i == table[i][e] for i in range(n))), None)
    if identity is None:
        raise ModelError("group table has no identity element")
    inverses = []
    for i in range(n):
        inv = next((j for j in range(n) if table[i][j] == identity), None)
        if inv is None or table[inv][i] != identity:
            raise ModelError(f"{names[i]} has no inverse")
        inverses.append(inv)
    return FiniteGroup(tuple(names), table, identity, tuple(inverses))


def _power_name(symbol: str, k: int) -> str:
    return '' if k == 0 else symbol if k == 1 else f"{symbol}{k}"


def cyclic_group(n: int) -> FiniteGroup:
    """C_n = {1, g, g2, ...}."""
    if n < 1:
        raise ModelError(f"cyclic group order must be positive, got {n}")
    names = ['1'] + [_power_name('g', k) for k in range(1, n)]
    return group_from_table(names, [[(i + j) % n for j in range(n)] for i in range(n)])


def symmetric_group(n: int) -> FiniteGroup:
    """S_n with permutations named by their images, e.g. ``p102``; the identity is ``1``."""
    if n < 1:
        raise ModelError(f"symmetric group degree must be positive, got {n}")
    perms = sorted(SymmetricGroup(n).generate(), key=lambda p: p.array_form)
    if len(perms) > MAX_DIM:
        raise ModelError(f"S_{n} has order {len(perms)}, above the limit {MAX_DIM}")
    identity = Permutation(list(range(n)))
    index = {tuple(p.array_form): i for i, p in enumerate(perms)}
    names = ['1' if p == identity else 'p' + ''.join(map(str, p.array_form)) for p in perms]
    table = [[index[tuple((p * q).array_form)] for q in perms] for p in perms]
    return group_from_table(names, table)


def _verified(H: HopfAlgebraData, what: str) -> HopfAlgebraData:
    report = verify_hopf_axioms(H)
    if not report.passed:
        raise ModelError(f"{what} fails {', '.join(c.name for c in report.failures())}")
    return H


def group_algebra(group: Union[FiniteGroup, int], field: Field) -> HopfAlgebraData:
    """kG with Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^-1. An int means the cyclic group of that order."""
    if isinstance(group, int):
        group = cyclic_group(group)
    n = group.order
    F = field

    def e(i):
        return tuple(F.one if k == i else F.zero for k in range(n))

    mult = [[e(group.table[i][j]) for j in range(n)] for i in range(n)]
    comult = [tuple(F.one if t == i * n + i else F.zero for t in range(n * n)) for i in range(n)]
    H = build_from_tables(F, group.names, mult, e(group.identity), comult, [F.one] * n,
                          [e(group.inverses[i]) for i in range(n)], coradical_hint=[e(i) for i in range(n)])
    logger.debug("group algebra of order %d over %s", n, F)
    return _verified(H, f"group algebra of order {n}")


def primitive_root_of_unity(field: Field, N: int):
    """
    A primitive N-th root of unity in the field.

    :raises ModelError: when the field has none.
    """
    F = field
    if N == 1:
        return F.one
    if N == 2 and F.characteristic != 2:
        return F.neg(F.one)
    if isinstance(F, PrimeField):
        if (F.p - 1) % N:
            raise ModelError(f"F_{F.p} has no primitive {N}-th root of unity")
        return next(a for a in range(2, F.p) if multiplicative_order(F, a, N) == N)
    if isinstance(F, CyclotomicField) and F.N % N == 0:
        return F.power(F.zeta, F.N // N)
    raise ModelError(f"{F} has no primitive {N}-th root of unity")


def taft_name(a: int, b: int) -> str:
    return (_power_name('g', a) + _power_name('x', b)) or '1'


def taft(N: int, field: Field, xi=None) -> HopfAlgebraData:
    """
    Taft algebra of dimension N^2: g^N = 1, x^N = 0, xg = xi gx, Delta(g) = g (x) g,
    Delta(x) = g (x) x + x (x) 1. The basis element g^a x^b has index b*N + a.

    :raises ModelError: when xi is not a primitive N-th root of unity.
    """
    if N < 2:
        raise ModelError(f"Taft algebras need N >= 2, got {N}")
    if N * N > MAX_DIM:
        raise ModelError(f"Taft algebra of dimension {N * N} exceeds the limit {MAX_DIM}")
    F = field
    xi = primitive_root_of_unity(F, N) if xi is None else F.coerce(xi)
    if multiplicative_order(F, xi, N) != N:
        raise ModelError(f"{F.format(xi)} is not a primitive {N}-th root of unity in {F}")
    n = N * N
    names = [taft_name(i % N, i // N) for i in range(n)]

    def e(a, b, c=None):
        return tuple((F.one if c is None else c) if k == b * N + a else F.zero for k in range(n))

    zero = tuple(F.zero for _ in range(n))
    mult = []
    for i in range(n):
        a, b = i % N, i // N
        row = []
        for j in range(n):
            c, d = j % N, j // N
            row.append(zero if b + d >= N else e((a + c) % N, b + d, F.power(xi, b * c)))
        mult.append(row)
    unit = e(0, 0)
    counit = [F.one if i < N else F.zero for i in range(n)]
    draft = build_from_tables(F, names, mult, unit, [(F.zero,) * (n * n)] * n, counit, [zero] * n)

    g, x = e(1, 0), e(0, 1)
    delta_g = draft.tensor(g, g)
    delta_x = draft.add(draft.tensor(g, x), draft.tensor(x, unit))
    comult = [None] * n
    power_g = draft.tensor(unit, unit)
    for a in range(N):
        acc = power_g
        for b in range(N):
            comult[b * N + a] = acc
            acc = tensor_square_multiply(draft, acc, delta_x)
        power_g = tensor_square_multiply(draft, power_g, delta_g)

    s_g = e(N - 1, 0)
    s_x = draft.scale(F.neg(F.one), e(N - 1, 1))
    antipode = []
    for i in range(n):
        a, b = i % N, i // N
        v = unit
        for _ in range(b):
            v = draft.multiply(v, s_x)
        for _ in range(a):
            v = draft.multiply(v, s_g)
        antipode.append(v)

    H = build_from_tables(F, names, mult, unit, comult, counit, antipode,
                          coradical_hint=[e(a, 0) for a in range(N)])
    logger.debug("Taft algebra N=%d, xi=%s over %s", N, F.format(xi), F)
    return _verified(H, f"Taft algebra N={N}")


def sweedler(field: Optional[Field] = None) -> HopfAlgebraData:
    field = field or RationalField()
    return taft(2, field, field.neg(field.one))


@dataclass(frozen=True)
class ExpectedInvariants:
    """Known answers for a model truncated at ``degree``; ``hopf_invariants`` is None when not recorded."""

    degree: int
    grouplikes: tuple
    integral: tuple
    grouplike_invariants: tuple
    hopf_invariants: Optional[tuple]


@dataclass(frozen=True, eq=False)
class ModelBundle:
    name: str
    hopf: HopfAlgebraData
    algebra: FPCommAlgebra
    action: ActionSpec
    expected: ExpectedInvariants
    parameters: dict


def _taft_integral(H: HopfAlgebraData, N: int) -> tuple:
    F = H.field
    return tuple(F.one if i // N == N - 1 else F.zero for i in range(H.dim))


def taft_dual_numbers_model(N: int, field: Field, max_degree: int = 8, xi=None) -> ModelBundle:
    """
    Taft algebra acting on k[y, z]/(z^2) by g.y = y, g.z = xi^-1 z, x.y = z, x.z = 0,
    extended to g^a x^b by composition.
    """
    F = field
    H = taft(N, F, xi)
    xi = H.mult[N][1][N + 1]
    A = FPCommAlgebra.create(F, ['y', 'z'], ['z^2'])
    y, z = A.variable(0), A.variable(1)
    partial = ActionSpec.create(H, A, {
        (0, 0): y, (0, 1): z,
        (1, 0): y, (1, 1): z.scale(F.inv(xi)),
        (N, 0): z, (N, 1): A.zero(),
    }, require_total=False)
    images = {}
    for i in range(H.dim):
        a, b = i % N, i // N
        for v, f in enumerate((y, z)):
            for _ in range(b):
                f = act(partial, N, f)
            for _ in range(a):
                f = act(partial, 1, f)
            images[(i, v)] = f
    spec = ActionSpec.create(H, A, images)

    p = F.characteristic
    powers = tuple(A.power(y, k) for k in range(max_degree + 1))
    hopf_inv = tuple(f for k, f in enumerate(powers) if k == 0 or (p and k % p == 0))
    expected = ExpectedInvariants(
        max_degree,
        tuple(H.basis_vector(a) for a in range(N)),
        _taft_integral(H, N),
        powers,
        hopf_inv,
    )
    return ModelBundle(f"taft-dual-numbers-N{N}", H, A, spec, expected, {'N': N, 'xi': xi})


def cyclic_sign_model(field: Field, max_degree: int = 8) -> ModelBundle:
    """kC_2 acting on k[y] by g.y = -y."""
    F = field
    H = group_algebra(2, F)
    A = FPCommAlgebra.create(F, ['y'])
    y = A.variable(0)
    spec = ActionSpec.create(H, A, {(0, 0): y, (1, 0): -y})
    even = tuple(A.power(y, k) for k in range(0, max_degree + 1, 2))
    expected = ExpectedInvariants(max_degree, (H.basis_vector(0), H.basis_vector(1)), (F.one, F.one), even, even)
    return ModelBundle('sign-C2', H, A, spec, expected, {})


def counterexample_closed_forms(bundle: ModelBundle, n_max: int) -> CheckReport:
    """Compare x.y^n, x.(y^n z), g.y^n, g.(y^n z) with their closed forms for n <= n_max."""
    N, xi = bundle.parameters['N'], bundle.parameters['xi']
    A, spec = bundle.algebra, bundle.action
    F = A.field
    y, z = A.variable(0), A.variable(1)
    xi_inv = F.inv(xi)

    def closed_x(n):
        return A.zero() if n == 0 else A.mul(A.power(y, n - 1), z).scale(F.from_int(n))

    cases = (
        ('x_on_powers', N, lambda n: A.power(y, n), closed_x),
        ('x_on_powers_times_z', N, lambda n: A.mul(A.power(y, n), z), lambda n: A.zero()),
        ('g_on_powers', 1, lambda n: A.power(y, n), lambda n: A.power(y, n)),
        ('g_on_powers_times_z', 1, lambda n: A.mul(A.power(y, n), z),
         lambda n: A.mul(A.power(y, n), z).scale(xi_inv)),
    )
    checks = []
    for name, i, source, closed in cases:
        witness = None
        for n in range(n_max + 1):
            actual, expected = act(spec, i, source(n)), A.normal_form(closed(n))
            if actual != expected:
                witness = {'n': n, 'expected': A.format(expected), 'actual': A.format(actual)}
                break
        checks.append(CheckResult(name, witness is None, witness))
    return CheckReport(tuple(checks))


MODEL_NAMES = ('sweedler', 'taft3', 'taft4', 'kC2', 'kC3', 'kS3', 'dual-kS3', 'taft-dual-numbers', 'sign')


def named_model(name: str, field: Optional[Field] = None) -> Union[HopfAlgebraData, ModelBundle]:
    """
    Look up a built-in model; ``field`` overrides the default field where the model allows it.

    :raises ModelError: for unknown names.
    """
    if name == 'sweedler':
        return sweedler(field)
    if name in ('taft3', 'taft4'):
        N = int(name[-1])
        return taft(N, field or CyclotomicField(N))
    if name in ('kC2', 'kC3'):
        return group_algebra(int(name[-1]), field or RationalField())
    if name == 'kS3':
        return group_algebra(symmetric_group(3), field or RationalField())
    if name == 'dual-kS3':
        return _verified(dual_hopf(group_algebra(symmetric_group(3), field or RationalField())), 'dual of kS3')
    if name == 'taft-dual-numbers':
        return taft_dual_numbers_model(2, field or RationalField())
    if name == 'sign':
        return cyclic_sign_model(field or RationalField())
    raise ModelError(f"unknown model {name!r}; expected one of {', '.join(MODEL_NAMES)}")
