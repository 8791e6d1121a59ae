"""
H-module-algebra actions on a finitely presented commutative algebra.

An action is given on generators, ``e_i . y_v``, and extended to monomials by

    e_i . 1         = epsilon(e_i) 1
    e_i . (y_v m')  = sum over Delta(e_i) = sum c e_j (x) e_k of c (e_j . y_v)(e_k . m')

where y_v is the lowest-index variable dividing the monomial. All results are
kept in normal form. Degree-bounded computations on A_{<=d} use the target
workspace A_{<=d(1+J)}, J being the degree jump of the generator images, so
invariance is decided exactly in A and not up to truncation.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

from hopf_integrality.checks import CheckReport, CheckResult
from hopf_integrality.commalg import (
    BudgetExceededError,
    FPCommAlgebra,
    Poly,
    Workspace,
    WorkspaceOverflowError,
    generator_products,
    monomials_of_degree,
    standard_monomials,
)
from hopf_integrality.findim import HopfAlgebraData, format_element
from hopf_integrality.linalg import Subspace, mat_kernel, solve_linear
from hopf_integrality.structure import (
    UnsupportedConfigurationError,
    coradical_filtration,
    filtration_plus,
    grouplikes,
    left_integral_space,
)
from hopf_integrality.utils.config import get_power_degree_limit, get_witness_budget

logger = logging.getLogger('hopf_integrality.action')

__all__ = [
    'ActionSpecError', 'WorkspaceOverflowError', 'ActionSpec', 'act', 'act_element', 'ActionMatrices',
    'action_matrices', 'verify_action', 'invariants', 'TraceImage', 'trace_image', 'IntegralityWitness',
    'NoWitnessUpToBounds', 'integrality_witness', 'verify_witness', 'algebra_generators', 'ChainLevel',
    'FrobeniusChain', 'frobenius_chain', 'PowerBoundVerdict', 'pth_power_bound_check',
]


class ActionSpecError(ValueError):
    """Exception raised for an invalid generator-level action table."""


@dataclass(frozen=True, eq=False)
class ActionSpec:
    """Generator-level action: ``table[i][v]`` is e_i . y_v in normal form (None when undefined)."""

    hopf: HopfAlgebraData
    algebra: FPCommAlgebra
    table: tuple
    _cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def create(cls, hopf: HopfAlgebraData, algebra: FPCommAlgebra,
               images: Mapping[tuple[int, int], Union[Poly, str]], require_total: bool = True) -> 'ActionSpec':
        """
        :param images: (basis index, variable index) -> polynomial or polynomial string.
        :raises ActionSpecError: on field mismatch, bad indices or, with ``require_total``, missing pairs.
        """
        if hopf.field != algebra.field:
            raise ActionSpecError(f"Hopf algebra over {hopf.field} cannot act on an algebra over {algebra.field}")
        table = [[None] * algebra.nvars for _ in range(hopf.dim)]
        for (i, v), value in images.items():
            if not 0 <= i < hopf.dim:
                raise ActionSpecError(f"basis index {i} out of range for dimension {hopf.dim}")
            if not 0 <= v < algebra.nvars:
                raise ActionSpecError(f"variable index {v} out of range for {algebra.nvars} variables")
            try:
                table[i][v] = algebra.normal_form(algebra.coerce(value))
            except ValueError as e:
                raise ActionSpecError(f"{hopf.basis_names[i]} . {algebra.variables[v]}: {e}") from e
        if require_total:
            missing = [(hopf.basis_names[i], algebra.variables[v])
                       for i in range(hopf.dim) for v in range(algebra.nvars) if table[i][v] is None]
            if missing:
                raise ActionSpecError("action is not total; missing " +
                                      ', '.join(f"{h} . {y}" for h, y in missing[:5]) +
                                      (' ...' if len(missing) > 5 else ''))
        return cls(hopf, algebra, tuple(tuple(row) for row in table))

    @property
    def jump(self) -> int:
        return max((max(0, p.total_degree - 1) for row in self.table for p in row if p is not None), default=0)

    @property
    def is_total(self) -> bool:
        return all(p is not None for row in self.table for p in row)

    def image(self, i: int, v: int) -> Poly:
        p = self.table[i][v]
        if p is None:
            raise ActionSpecError(
                f"{self.hopf.basis_names[i]} . {self.algebra.variables[v]} is not defined by this action")
        return p

    def target_degree(self, d: int) -> int:
        return d * (1 + self.jump)

    def _right_leg_closure(self, i: int) -> list[int]:
        seen = {i}
        stack = [i]
        while stack:
            j = stack.pop()
            for _, k, _ in self.hopf.coproduct_terms(j):
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        return sorted(seen)


def _first_variable(m: tuple) -> int:
    return next(v for v, e in enumerate(m) if e)


def _act_monomial(spec: ActionSpec, i: int, m: tuple) -> Poly:
    cache = spec._cache
    if (i, m) in cache:
        return cache[(i, m)]
    A = spec.algebra
    H = spec.hopf
    F = A.field
    chain = [m]
    while any(chain[-1]):
        prev = list(chain[-1])
        prev[_first_variable(chain[-1])] -= 1
        chain.append(tuple(prev))
    chain.reverse()
    indices = spec._right_leg_closure(i)
    for t, mt in enumerate(chain):
        for idx in indices:
            if (idx, mt) in cache:
                continue
            if t == 0:
                cache[(idx, mt)] = Poly.constant(F, A.nvars, H.counit[idx], A.order)
                continue
            v = _first_variable(mt)
            acc = A.zero()
            for j, k, c in H.coproduct_terms(idx):
                acc = acc + (spec.image(j, v) * cache[(k, chain[t - 1])]).scale(c)
            cache[(idx, mt)] = A.normal_form(acc)
    return cache[(i, m)]


def act(spec: ActionSpec, i: int, f: Union[Poly, str], workspace_degree: Optional[int] = None,
        reduce_input: bool = True) -> Poly:
    """
    e_i . f in normal form.

    With ``reduce_input=False`` the recursion runs on the given lift of f in the free
    algebra, as needed to test that relations are annihilated.

    :raises WorkspaceOverflowError: when ``workspace_degree`` < deg(f)(1+J).
    """
    A = spec.algebra
    f = A.coerce(f)
    if reduce_input:
        f = A.normal_form(f)
    if workspace_degree is not None:
        required = max(f.total_degree, 0) * (1 + spec.jump)
        if workspace_degree < required:
            raise WorkspaceOverflowError(
                f"acting on a degree-{f.total_degree} element needs workspace degree {required}", required)
    acc = A.zero()
    for m, c in f.terms.items():
        acc = acc + _act_monomial(spec, i, m).scale(c)
    return acc


def act_element(spec: ActionSpec, h: Sequence, f: Union[Poly, str], reduce_input: bool = True) -> Poly:
    """h . f for an arbitrary element h of H given by coordinates."""
    F = spec.hopf.field
    A = spec.algebra
    f = A.coerce(f)
    acc = A.zero()
    for i, c in enumerate(h):
        if not F.is_zero(c):
            acc = acc + act(spec, i, f, reduce_input=reduce_input).scale(c)
    return A.normal_form(acc)


@dataclass(frozen=True)
class ActionMatrices:
    """``columns[i][c]``: target coordinates of e_i applied to the c-th source monomial."""

    spec: ActionSpec
    degree: int
    source: Workspace
    target: Workspace
    columns: tuple

    def matrix(self, i: int) -> list[list]:
        cols = self.columns[i]
        return [[cols[c][r] for c in range(self.source.dim)] for r in range(self.target.dim)]

    def apply(self, h: Sequence, c: int) -> tuple:
        F = self.source.field
        out = [F.zero] * self.target.dim
        for i, a in enumerate(h):
            if not F.is_zero(a):
                for r, x in enumerate(self.columns[i][c]):
                    if not F.is_zero(x):
                        out[r] = F.add(out[r], F.mul(a, x))
        return tuple(out)

    def inclusion(self, c: int) -> tuple:
        return self.target.to_vector(self.spec.algebra.monomial(self.source.monomials[c]), reduce=False)


def action_matrices(spec: ActionSpec, d: int) -> ActionMatrices:
    source = Workspace.build(spec.algebra, d)
    target = Workspace.build(spec.algebra, spec.target_degree(d)) if spec.jump else source
    columns = []
    for i in range(spec.hopf.dim):
        cols = []
        for m in source.monomials:
            cols.append(target.to_vector(_act_monomial(spec, i, m), reduce=False))
        columns.append(tuple(cols))
    logger.debug("action matrices: %d x %d per basis element", target.dim, source.dim)
    return ActionMatrices(spec, d, source, target, tuple(columns))


def _counterexample(spec: ActionSpec, i: int, f: Poly) -> dict:
    return {'h': spec.hopf.basis_names[i], 'element': spec.algebra.format(f)}


def verify_action(spec: ActionSpec, d: int) -> CheckReport:
    """
    Exact module-algebra checks on monomials of degree <= d: relations (and their
    monomial multiples) annihilated, commutators of generators annihilated, module
    associativity, unit, e_i . 1 = epsilon(e_i) 1, and multiplicativity (by construction).
    """
    H, A = spec.hopf, spec.algebra
    F = A.field
    n = H.dim
    checks = []

    witness = None
    for g in A.gb:
        for k in range(0, max(d - g.total_degree, 0) + 1):
            for m in monomials_of_degree(A.nvars, k):
                lift = g.mul_monomial(m)
                for i in range(n):
                    if not act(spec, i, lift, reduce_input=False).is_zero():
                        witness = _counterexample(spec, i, lift)
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            break
    checks.append(CheckResult('relations_annihilated', witness is None, witness))

    witness = None
    for i in range(n):
        for v in range(A.nvars):
            for w in range(v + 1, A.nvars):
                vw, wv = A.zero(), A.zero()
                for j, k, c in H.coproduct_terms(i):
                    vw = vw + (spec.image(j, v) * spec.image(k, w)).scale(c)
                    wv = wv + (spec.image(j, w) * spec.image(k, v)).scale(c)
                if A.normal_form(vw - wv):
                    witness = {'h': H.basis_names[i],
                               'element': f"{A.variables[v]}*{A.variables[w]} - {A.variables[w]}*{A.variables[v]}"}
                    break
            if witness:
                break
        if witness:
            break
    checks.append(CheckResult('commutativity', witness is None, witness))

    monomials = [A.monomial(m) for m in standard_monomials(A, d)]
    witness = None
    for i in range(n):
        for j in range(n):
            ij = H.mult[i][j]
            for f in monomials:
                if act(spec, i, act(spec, j, f)) != act_element(spec, ij, f):
                    witness = {'h': [H.basis_names[i], H.basis_names[j]], 'element': A.format(f)}
                    break
            if witness:
                break
        if witness:
            break
    checks.append(CheckResult('module_associativity', witness is None, witness))

    witness = next(({'h': '1', 'element': A.format(f)} for f in monomials if act_element(spec, H.unit, f) != f),
                   None)
    checks.append(CheckResult('unit', witness is None, witness))

    witness = next((_counterexample(spec, i, A.one()) for i in range(n)
                    if act(spec, i, A.one()) != A.one().scale(H.counit[i])), None)
    checks.append(CheckResult('counit_on_one', witness is None, witness))

    checks.append(CheckResult('multiplicativity', True, None, 'holds by construction of the recursive extension'))
    report = CheckReport(tuple(checks))
    logger.debug("action verification at degree %d: %s", d, 'pass' if report.passed else 'FAIL')
    return report


def _subset_elements(spec: ActionSpec, subset) -> list[tuple]:
    H = spec.hopf
    if subset == 'H':
        return [H.basis_vector(i) for i in range(H.dim)]
    if subset == 'G':
        return list(grouplikes(H).elements)
    return [tuple(H.field.coerce(a) for a in h) for h in subset]


def invariants(spec: ActionSpec, subset, d: int, matrices: Optional[ActionMatrices] = None) -> Subspace:
    """
    {a in A_{<=d} : h . a = epsilon(h) a} for h in the subset, in coordinates of
    ``Workspace(algebra, d)``.

    :param subset: ``'H'`` (all of H), ``'G'`` (group-likes) or a list of element vectors.
    """
    matrices = matrices or action_matrices(spec, d)
    H = spec.hopf
    F = H.field
    src, tgt = matrices.source, matrices.target
    inclusions = [matrices.inclusion(c) for c in range(src.dim)]
    rows = []
    for h in _subset_elements(spec, subset):
        eps = H.counit_value(h)
        cols = []
        for c in range(src.dim):
            image = matrices.apply(h, c)
            cols.append(tuple(F.sub(x, F.mul(eps, y)) for x, y in zip(image, inclusions[c])))
        rows.extend([cols[c][r] for c in range(src.dim)] for r in range(tgt.dim))
    if not rows:
        return Subspace.full(F, src.dim)
    result = mat_kernel(F, rows, src.dim)
    logger.debug("invariants (%s) at degree %d: dimension %d", subset if isinstance(subset, str) else 'list',
                 d, result.dim)
    return result


@dataclass(frozen=True)
class TraceImage:
    integral: tuple
    image: Subspace
    invariants: Subspace
    workspace: Workspace
    included: bool
    equal: bool


def trace_image(spec: ActionSpec, d: int, integral: Optional[Sequence] = None) -> TraceImage:
    """t . A_{<=d} and the check t . A in A^H for the left integral t."""
    H = spec.hopf
    if integral is None:
        space = left_integral_space(H)
        integral = space.basis[0] if space.dim else H.zero_vector()
    integral = tuple(integral)
    matrices = action_matrices(spec, d)
    tgt = matrices.target
    image = Subspace.span(H.field, tgt.dim, [matrices.apply(integral, c) for c in range(matrices.source.dim)])
    big = invariants(spec, 'H', tgt.degree) if tgt is not matrices.source else invariants(spec, 'H', d, matrices)
    small = invariants(spec, 'H', d, matrices)
    small_embedded = Subspace.span(H.field, tgt.dim, [matrices.source.embed(v, tgt) for v in small.basis])
    return TraceImage(integral, image, small_embedded, tgt, big.contains_subspace(image),
                      image == small_embedded)


@dataclass(frozen=True)
class CoefficientExpression:
    """b = sum c * prod gens^exps, kept as explicit terms over the subalgebra generators."""

    terms: tuple
    value: Poly


@dataclass(frozen=True)
class IntegralityWitness:
    """a^D + sum_{i<D} b_i a^i = 0 with each b_i in the subalgebra generated by ``generators``."""

    element: Poly
    degree: int
    coefficients: tuple
    generators: tuple

    def format(self, A: FPCommAlgebra, var: str = 'T') -> str:
        """``"T^3 - y^3"``; multi-term coefficients are parenthesised."""
        def power(i: int) -> str:
            return '' if i == 0 else var if i == 1 else f"{var}^{i}"

        out = power(self.degree)
        for i in range(self.degree - 1, -1, -1):
            b = self.coefficients[i].value
            if b.is_zero():
                continue
            text = A.format(b)
            if len(b.terms) > 1:
                out += f" + ({text})" + (f"*{power(i)}" if i else '')
                continue
            sign, body = (' - ', text[1:]) if text.startswith('-') else (' + ', text)
            if i:
                body = power(i) if body == '1' else f"{body}*{power(i)}"
            out += sign + body
        return out


@dataclass(frozen=True)
class NoWitnessUpToBounds:
    """No monic dependence of degree <= monic_degree with coefficients from products of <= coeff_degree generators."""

    element: Poly
    monic_degree: int
    coeff_degree: int

    def format(self) -> str:
        return f"none up to ({self.monic_degree}, {self.coeff_degree})"


def integrality_witness(A: FPCommAlgebra, a: Union[Poly, str], sub_gens: Sequence[Union[Poly, str]], D: int,
                        e: int, workspace_degree: Optional[int] = None,
                        budget: Optional[int] = None) -> Union[IntegralityWitness, NoWitnessUpToBounds]:
    """
    Search a^D' + sum_{i<D'} c_i a^i = 0 for D' = 1..D with c_i ranging over
    subalgebra_span(sub_gens, e). The first (lowest D') solution is returned.

    :raises WorkspaceOverflowError: when ``workspace_degree`` is below D deg(a) + e max deg(sub_gens).
    :raises BudgetExceededError: when a linear system has more unknowns than the witness budget.
    """
    a = A.normal_form(A.coerce(a))
    gens = tuple(A.normal_form(A.coerce(g)) for g in sub_gens)
    budget = get_witness_budget() if budget is None else budget
    required = D * max(a.total_degree, 0) + e * max((g.total_degree for g in gens), default=0)
    if workspace_degree is not None and workspace_degree < required:
        raise WorkspaceOverflowError(f"witness search needs workspace degree {required}", required)
    W = Workspace.build(A, workspace_degree if workspace_degree is not None else required)
    products = list(generator_products(A, gens, e))
    powers = [A.one()]
    for _ in range(D):
        powers.append(A.mul(powers[-1], a))
    F = A.field
    for Dp in range(1, D + 1):
        unknowns = Dp * len(products)
        if unknowns > budget:
            raise BudgetExceededError(f"witness search at degree {Dp} needs {unknowns} unknowns (budget {budget})")
        columns = []
        for i in range(Dp):
            for _, value in products:
                columns.append(W.to_vector(A.mul(value, powers[i]), reduce=False))
        rhs = tuple(F.neg(x) for x in W.to_vector(powers[Dp], reduce=False))
        M = [[col[r] for col in columns] for r in range(W.dim)]
        solution = solve_linear(F, M, rhs, len(columns))
        logger.debug("witness search degree %d: %d unknowns, %s", Dp, len(columns),
                     'found' if solution else 'none')
        if solution is None:
            continue
        coefficients = []
        for i in range(Dp):
            terms = []
            value = A.zero()
            for q, (exps, p) in enumerate(products):
                c = solution.particular[i * len(products) + q]
                if not F.is_zero(c):
                    terms.append((exps, c))
                    value = value + p.scale(c)
            coefficients.append(CoefficientExpression(tuple(terms), A.normal_form(value)))
        return IntegralityWitness(a, Dp, tuple(coefficients), gens)
    return NoWitnessUpToBounds(a, D, e)


def verify_witness(A: FPCommAlgebra, witness: IntegralityWitness) -> bool:
    """Rebuild every b_i from its generator terms and check a^D + sum b_i a^i reduces to 0."""
    total = A.power(witness.element, witness.degree)
    for i, coefficient in enumerate(witness.coefficients):
        b = A.zero()
        for exps, c in coefficient.terms:
            p = A.one()
            for g, k in zip(witness.generators, exps):
                p = A.mul(p, A.power(g, k))
            b = b + p.scale(c)
        b = A.normal_form(b)
        if b != coefficient.value:
            return False
        total = total + A.mul(b, A.power(witness.element, i))
    return A.normal_form(total).is_zero()


def algebra_generators(A: FPCommAlgebra, subspace: Subspace, workspace: Workspace) -> list[Poly]:
    """
    Degree-bounded minimal generators of a subalgebra truncation: walking up in
    degree, keep every basis element not already produced by smaller generators.
    """
    gens: list[Poly] = []
    for k in range(1, workspace.degree + 1):
        generated = workspace.subspace(value for _, value in generator_products(A, gens, k, max_degree=k))
        for v in workspace.restrict(subspace, k).basis:
            if not generated.contains(v):
                gens.append(workspace.to_poly(v))
                generated = generated.extend([v])
    logger.debug("subalgebra generators: %s", [A.format(g) for g in gens])
    return gens


@dataclass(frozen=True)
class ChainLevel:
    index: int
    generators: tuple
    checks: CheckReport


@dataclass(frozen=True)
class FrobeniusChain:
    p: int
    levels: tuple

    @property
    def passed(self) -> bool:
        return all(level.checks.passed for level in self.levels)


def _annihilation_check(spec: ActionSpec, elements: Sequence[tuple], gens: Sequence[Poly], name: str) -> CheckResult:
    H, A = spec.hopf, spec.algebra
    for h in elements:
        for a in gens:
            if not act_element(spec, h, a).is_zero():
                return CheckResult(name, False, {'h': format_element(H, h), 'element': A.format(a)})
    return CheckResult(name, True)


def _integrality_check(A: FPCommAlgebra, elements: Sequence[Poly], over: Sequence[Poly], D: int, e: int,
                       name: str) -> CheckResult:
    for a in elements:
        w = integrality_witness(A, a, over, D, e)
        if not isinstance(w, IntegralityWitness) or not verify_witness(A, w):
            return CheckResult(name, False, {'element': A.format(a), 'bounds': [D, e]})
    return CheckResult(name, True)


def frobenius_chain(spec: ActionSpec, depth: int, d: int, p: Optional[int] = None) -> FrobeniusChain:
    """
    A = A_{-1} > A_0 > A_1 > ... with A_0 generated by the G-invariants of degree <= d
    and A_{m+1} generated by p-th powers of the generators of A_m.

    Level i records that H_i^+ annihilates the generators of A_i and that the
    previous level is integral over this one.

    :raises UnsupportedConfigurationError: in characteristic 0.
    """
    H, A = spec.hopf, spec.algebra
    char = H.field.characteristic
    if char == 0:
        raise UnsupportedConfigurationError("the Frobenius chain needs a field of positive characteristic")
    if p is not None and p != char:
        raise UnsupportedConfigurationError(f"p = {p} differs from the characteristic {char}")
    p = char
    G = grouplikes(H)
    filtration = coradical_filtration(H)
    W = Workspace.build(A, d)
    A0 = algebra_generators(A, invariants(spec, G.elements, d), W)
    variables = tuple(A.variable(v) for v in range(A.nvars))
    levels = [ChainLevel(-1, variables, CheckReport(()))]
    current = tuple(A0)
    previous = variables
    for i in range(depth + 1):
        checks = []
        if i == 0:
            checks.append(_annihilation_check(
                spec, [H.sub(g, H.unit) for g in G.elements if g != H.unit], current, 'grouplike_invariance'))
            checks.append(_integrality_check(A, previous, current, G.size, G.size, 'integral_over_level'))
        else:
            checks.append(_integrality_check(A, previous, current, p, 1, 'integral_over_level'))
        checks.append(_annihilation_check(spec, filtration_plus(H, i, filtration).basis, current,
                                          'filtration_annihilates'))
        levels.append(ChainLevel(i, current, CheckReport(tuple(checks))))
        logger.debug("chain level %d: %s", i, [A.format(g) for g in current])
        previous = current
        current = tuple(A.power(g, p) for g in current)
    return FrobeniusChain(p, tuple(levels))


@dataclass(frozen=True)
class PowerBoundVerdict:
    applicable: bool
    exponent: int
    checked: tuple = ()
    skipped: tuple = ()

    @property
    def passed(self) -> bool:
        return self.applicable and all(ok for _, ok in self.checked)


def pth_power_bound_check(spec: ActionSpec, d: int, p: Optional[int] = None,
                          degree_limit: Optional[int] = None) -> PowerBoundVerdict:
    """
    For each basis element a of the G-invariants of degree <= d, check
    a^(p^dim H) in A^H whenever its degree stays within ``degree_limit``.
    Larger powers are reported as skipped.
    """
    H, A = spec.hopf, spec.algebra
    char = H.field.characteristic
    if char == 0 or (p is not None and p != char):
        return PowerBoundVerdict(False, 0)
    q = char ** H.dim
    limit = get_power_degree_limit() if degree_limit is None else degree_limit
    W = Workspace.build(A, d)
    checked, skipped = [], []
    for v in invariants(spec, 'G', d).basis:
        a = W.to_poly(v)
        name = A.format(a)
        degree = max(a.total_degree, 0) * q
        if degree > limit:
            skipped.append((name, f"degree {degree} exceeds the limit {limit}"))
            logger.warning("skipping %s^%d: degree %d exceeds %d", name, q, degree, limit)
            continue
        power = A.power(a, q)
        ok = all(act(spec, i, power) == power.scale(H.counit[i]) for i in range(H.dim))
        checked.append((name, ok))
    return PowerBoundVerdict(True, q, tuple(checked), tuple(skipped))
