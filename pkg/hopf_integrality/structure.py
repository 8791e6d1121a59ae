"""
Structural analysis of a verified Hopf algebra.

Covers group-like elements, left integrals and semisimplicity, the coradical and
its filtration, pointed/connected classification, Hopf ideals and quotients.

Subspaces of H (x) H are never materialised. Membership tests use annihilators:
an element w of H (x) H, viewed as an n x n matrix W, lies in L (x) H + H (x) R
exactly when phi^T W psi = 0 for all phi in L^perp and psi in R^perp.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from hopf_integrality.checks import CheckReport, CheckResult
from hopf_integrality.commalg import Poly, buchberger
from hopf_integrality.exactfield import CyclotomicField, Field, UniPoly, roots_in_field
from hopf_integrality.findim import HopfAlgebraData, build_from_tables, dual_algebra, format_element
from hopf_integrality.linalg import Subspace, mat_inverse, mat_kernel

logger = logging.getLogger('hopf_integrality.structure')

GROUPLIKE_SEED = 20240611


class StructuralError(RuntimeError):
    """Exception raised when data violates a structural property every Hopf algebra has."""


class UnsupportedConfigurationError(RuntimeError):
    """Exception raised when an analysis is not available for the given field and data."""


class GroupLikeInconclusiveError(RuntimeError):
    """Exception raised when the group-like system could not be solved to completion."""


class HopfIdealError(RuntimeError):
    """Exception raised when a quotient is requested by a subspace that is not a Hopf ideal."""


# ---------------------------------------------------------------- helpers

def _as_matrix(H: HopfAlgebraData, w: Sequence) -> list[list]:
    n = H.dim
    return [list(w[j * n:(j + 1) * n]) for j in range(n)]


def _pair(H: HopfAlgebraData, w: Sequence, phi: Sequence, psi: Sequence):
    """(phi (x) psi)(w) for w in H (x) H."""
    F = H.field
    n = H.dim
    acc = F.zero
    for t, c in enumerate(w):
        if F.is_zero(c):
            continue
        a, b = phi[t // n], psi[t % n]
        if not F.is_zero(a) and not F.is_zero(b):
            acc = F.add(acc, F.mul(c, F.mul(a, b)))
    return acc


def in_tensor_sum(H: HopfAlgebraData, w: Sequence, left: Subspace, right: Subspace) -> bool:
    """True when w lies in left (x) H + H (x) right."""
    lperp = left.annihilator().basis
    rperp = right.annihilator().basis
    return all(H.field.is_zero(_pair(H, w, phi, psi)) for phi in lperp for psi in rperp)


def in_tensor_product(H: HopfAlgebraData, w: Sequence, left: Subspace, right: Subspace) -> bool:
    """True when w lies in left (x) right."""
    F = H.field
    W = _as_matrix(H, w)
    n = H.dim
    for phi in left.annihilator().basis:
        for k in range(n):
            if not F.is_zero(F.sum(F.mul(phi[j], W[j][k]) for j in range(n) if not F.is_zero(W[j][k]))):
                return False
    for psi in right.annihilator().basis:
        for j in range(n):
            if not F.is_zero(F.sum(F.mul(W[j][k], psi[k]) for k in range(n) if not F.is_zero(W[j][k]))):
                return False
    return True


def _coproduct_preimage(H: HopfAlgebraData, left: Subspace, right: Subspace) -> Subspace:
    """{h : Delta(h) in left (x) H + H (x) right}."""
    lperp = left.annihilator().basis
    rperp = right.annihilator().basis
    if not lperp or not rperp:
        return Subspace.full(H.field, H.dim)
    deltas = [H.comult[i] for i in range(H.dim)]
    rows = [[_pair(H, deltas[i], phi, psi) for i in range(H.dim)] for phi in lperp for psi in rperp]
    return mat_kernel(H.field, rows, H.dim)


def is_subcoalgebra(H: HopfAlgebraData, C: Subspace) -> bool:
    return all(in_tensor_product(H, H.coproduct(v), C, C) for v in C.basis)


def counit_kernel(H: HopfAlgebraData) -> Subspace:
    return Subspace.span(H.field, H.dim, [H.counit]).annihilator()


# ---------------------------------------------------------------- integrals

def left_integral_space(H: HopfAlgebraData) -> Subspace:
    """{t : h t = epsilon(h) t for every h}."""
    F = H.field
    n = H.dim
    rows = []
    for i in range(n):
        for k in range(n):
            row = [H.mult[i][j][k] for j in range(n)]
            row[k] = F.sub(row[k], H.counit[i])
            rows.append(row)
    space = mat_kernel(F, rows, n)
    if space.dim != 1:
        logger.warning("left integral space has dimension %d, expected 1", space.dim)
    return space


@dataclass(frozen=True)
class SemisimplicityVerdict:
    semisimple: bool
    integral: tuple
    counit_value: object


def is_semisimple(H: HopfAlgebraData) -> SemisimplicityVerdict:
    """
    Maschke criterion: semisimple iff epsilon(t) != 0 for the basis left integral t.

    :raises StructuralError: when the left integral space is not one-dimensional.
    """
    space = left_integral_space(H)
    if space.dim != 1:
        raise StructuralError(f"left integral space has dimension {space.dim}, expected 1")
    t = space.basis[0]
    value = H.counit_value(t)
    return SemisimplicityVerdict(not H.field.is_zero(value), t, value)


# ---------------------------------------------------------------- group-likes

@dataclass(frozen=True)
class GroupLikeSet:
    """Group-like elements with their multiplication and inverse tables over indices."""

    elements: tuple
    table: tuple
    inverses: tuple
    identity: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def span(self, H: HopfAlgebraData) -> Subspace:
        return Subspace.span(H.field, H.dim, self.elements)

    def order(self, i: int) -> int:
        k, j = 1, i
        while j != self.identity:
            j = self.table[j][i]
            k += 1
        return k


class _ExtractionFailure(Exception):
    pass


def _scalar_basis(field: Field) -> list:
    if isinstance(field, CyclotomicField):
        return [field.power(field.zeta, a) for a in range(field.degree)]
    return [field.one]


def _accumulate(eqs: dict, key, monomial: tuple, c, base: Field):
    terms = eqs.setdefault(key, {})
    v = base.add(terms.get(monomial, base.zero), c)
    if base.is_zero(v):
        terms.pop(monomial, None)
    else:
        terms[monomial] = v


def _grouplike_system(H: HopfAlgebraData, search: Sequence[tuple]) -> tuple[Field, int, list[Poly]]:
    """
    Polynomial system over the prime field whose solutions are the coordinates of
    group-likes in the span of ``search``.

    Unknown r*phi + a is the a-th rational component of the coefficient of search[r].
    """
    F = H.field
    B = F.base_field()
    phi = F.degree
    n = H.dim
    zeta = _scalar_basis(F)
    zeta_pow = [F.power(zeta[1], m) if phi > 1 else F.one for m in range(2 * phi - 1)]
    k = len(search)
    nvars = k * phi

    def var(r, a):
        m = [0] * nvars
        m[r * phi + a] += 1
        return m

    eqs = {}
    deltas = [H.coproduct(v) for v in search]
    for r in range(k):
        for t, alpha in enumerate(deltas[r]):
            if F.is_zero(alpha):
                continue
            for a in range(phi):
                comps = F.components(F.mul(alpha, zeta[a]))
                for s, c in enumerate(comps):
                    if not B.is_zero(c):
                        _accumulate(eqs, (t, s), tuple(var(r, a)), c, B)
    for r in range(k):
        for s_ in range(k):
            for j, x in enumerate(search[r]):
                if F.is_zero(x):
                    continue
                for kk, y in enumerate(search[s_]):
                    if F.is_zero(y):
                        continue
                    alpha = F.mul(x, y)
                    t = j * n + kk
                    for a in range(phi):
                        for b in range(phi):
                            m = var(r, a)
                            m[s_ * phi + b] += 1
                            comps = F.components(F.mul(alpha, zeta_pow[a + b]))
                            for s, c in enumerate(comps):
                                if not B.is_zero(c):
                                    _accumulate(eqs, (t, s), tuple(m), B.neg(c), B)
    counit_key = ('counit',)
    for r in range(k):
        eps = H.counit_value(search[r])
        if F.is_zero(eps):
            continue
        for a in range(phi):
            comps = F.components(F.mul(eps, zeta[a]))
            for s, c in enumerate(comps):
                if not B.is_zero(c):
                    _accumulate(eqs, (counit_key, s), tuple(var(r, a)), c, B)
    _accumulate(eqs, (counit_key, 0), (0,) * nvars, B.neg(B.one), B)

    seen = set()
    polys = []
    for key in sorted(eqs, key=repr):
        if not eqs[key]:
            continue
        p = Poly(B, nvars, eqs[key], 'lex').monic()
        if p not in seen:
            seen.add(p)
            polys.append(p)
    return B, nvars, polys


def _substitute(p: Poly, var: int, value) -> Poly:
    B = p.field
    terms = {}
    for m, c in p.terms.items():
        e = m[var]
        c = B.mul(c, B.power(value, e)) if e else c
        m2 = m[:var] + (0,) + m[var + 1:]
        terms[m2] = B.add(terms[m2], c) if m2 in terms else c
    return Poly(B, p.nvars, terms, p.order)


def _solve_zero_dimensional(B: Field, nvars: int, polys: list[Poly], budget: Optional[int]) -> list[tuple]:
    solutions = []

    def recurse(system, assigned, var):
        G = buchberger(B, nvars, system, 'lex', budget)
        if any(g.total_degree == 0 for g in G):
            return
        if var < 0:
            solutions.append(tuple(assigned[i] for i in range(nvars)))
            return
        univariate = [g for g in G if g.variables_used() == {var}]
        if not univariate:
            raise _ExtractionFailure(f"no univariate polynomial in unknown {var}")
        f = min(univariate, key=lambda g: g.total_degree)
        coeffs = [B.zero] * (f.total_degree + 1)
        for m, c in f.terms.items():
            coeffs[m[var]] = c
        for root in roots_in_field(UniPoly(B, tuple(coeffs)), B):
            recurse([_substitute(g, var, root) for g in G], {**assigned, var: root}, var - 1)

    recurse(polys, {}, nvars - 1)
    return solutions


def _linear_change(polys: list[Poly], T: list[list]) -> list[Poly]:
    """Substitute u_i = sum_j T[i][j] w_j."""
    out = []
    for p in polys:
        B, nvars = p.field, p.nvars
        forms = [Poly(B, nvars, {tuple(1 if c == j else 0 for c in range(nvars)): T[i][j]
                                  for j in range(nvars)}, p.order) for i in range(nvars)]
        acc = Poly.zero(B, nvars, p.order)
        for m, c in p.terms.items():
            term = Poly.constant(B, nvars, c, p.order)
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term * forms[i]
            acc = acc + term
        out.append(acc.monic())
    return out


def _random_unimodular(B: Field, nvars: int, rng: random.Random) -> list[list]:
    return [[B.one if i == j else (B.from_int(rng.randint(-3, 3)) if j < i else B.zero)
             for j in range(nvars)] for i in range(nvars)]


def grouplike_search_space(H: HopfAlgebraData) -> Subspace:
    """The coradical when it is computable without a hint, otherwise all of H."""
    if coradical_is_computable(H):
        return coradical(H)
    return Subspace.full(H.field, H.dim)


def grouplikes(H: HopfAlgebraData, budget: Optional[int] = None) -> GroupLikeSet:
    """
    All k-rational solutions of Delta(g) = g (x) g, epsilon(g) = 1.

    Over Q(zeta_N) scalars are restricted to Q. The system is solved by a lex
    Gröbner basis with back-substitution; if that fails, once more after a
    random unimodular change of unknowns.

    :raises GroupLikeInconclusiveError: when both attempts fail.
    """
    F = H.field
    search = list(grouplike_search_space(H).basis)
    B, nvars, polys = _grouplike_system(H, search)
    logger.debug("group-like system: %d unknowns, %d equations", nvars, len(polys))
    try:
        solutions = _solve_zero_dimensional(B, nvars, polys, budget)
    except _ExtractionFailure as first:
        logger.debug("triangular extraction failed (%s); retrying after a change of unknowns", first)
        rng = random.Random(GROUPLIKE_SEED)
        T = _random_unimodular(B, nvars, rng)
        try:
            raw = _solve_zero_dimensional(B, nvars, _linear_change(polys, T), budget)
        except _ExtractionFailure as second:
            raise GroupLikeInconclusiveError(f"group-like system could not be solved: {second}") from second
        solutions = [tuple(B.sum(B.mul(T[i][j], w[j]) for j in range(nvars)) for i in range(nvars))
                     for w in raw]

    phi = F.degree
    elements = []
    for sol in solutions:
        coeffs = [F.from_components(sol[r * phi:(r + 1) * phi]) for r in range(len(search))]
        g = [F.zero] * H.dim
        for c, v in zip(coeffs, search):
            for i, a in enumerate(v):
                g[i] = F.add(g[i], F.mul(c, a))
        g = tuple(g)
        if H.coproduct(g) != H.tensor(g, g) or H.counit_value(g) != F.one:
            raise StructuralError(f"solver produced a non-group-like element {format_element(H, g)}")
        elements.append(g)

    def sort_key(g):
        first = next(i for i, a in enumerate(g) if not F.is_zero(a))
        return first, tuple(F.sort_key(a) for a in g)

    elements = tuple(sorted(set(elements), key=sort_key))
    if Subspace.span(F, H.dim, elements).dim != len(elements):
        raise StructuralError("group-like elements are linearly dependent")
    lookup = {g: i for i, g in enumerate(elements)}
    try:
        identity = lookup[H.unit]
    except KeyError:
        raise StructuralError("1_H is not among the group-like elements") from None
    table = []
    for a in elements:
        row = []
        for b in elements:
            ab = H.multiply(a, b)
            if ab not in lookup:
                raise StructuralError("group-like elements are not closed under multiplication")
            row.append(lookup[ab])
        table.append(tuple(row))
    inverses = tuple(row.index(identity) for row in table)
    logger.debug("found %d group-like elements", len(elements))
    return GroupLikeSet(elements, tuple(table), inverses, identity)


# ---------------------------------------------------------------- coradical

def coradical_is_computable(H: HopfAlgebraData) -> bool:
    p = H.field.characteristic
    return p == 0 or p > H.dim


def trace_form_radical(H: HopfAlgebraData) -> Subspace:
    """Radical of (f, g) -> Tr(L_{fg}) on the dual algebra, in dual-basis coordinates."""
    D = dual_algebra(H)
    F = H.field
    n = H.dim
    traces = [F.sum(D.mult[k][c][c] for c in range(n)) for k in range(n)]
    form = [[F.sum(F.mul(D.mult[i][j][k], traces[k]) for k in range(n) if not F.is_zero(traces[k]))
             for j in range(n)] for i in range(n)]
    return mat_kernel(F, form, n)


def coradical(H: HopfAlgebraData, hint: Optional[Subspace] = None) -> Subspace:
    """
    The coradical C_0.

    In characteristic 0 or p > dim H it is the annihilator of the Jacobson radical
    of H*, computed as the radical of the trace form. Otherwise a hint (argument or
    ``H.coradical_hint``) is verified to be a subcoalgebra containing the group-likes.

    :raises UnsupportedConfigurationError: when a hint is needed and none is available.
    :raises StructuralError: when the hint fails verification.
    """
    if hint is None and H.coradical_hint is not None:
        hint = Subspace.span(H.field, H.dim, H.coradical_hint)
    if coradical_is_computable(H):
        C0 = trace_form_radical(H).annihilator()
        if hint is not None and hint != C0:
            logger.warning("coradical hint of dimension %d ignored; computed coradical has dimension %d",
                           hint.dim, C0.dim)
        logger.debug("coradical dimension %d", C0.dim)
        return C0
    if hint is None:
        raise UnsupportedConfigurationError(
            f"the coradical over {H.field} with dim H = {H.dim} needs a coradical hint")
    if not is_subcoalgebra(H, hint):
        raise StructuralError("coradical hint is not a subcoalgebra")
    G = grouplikes(H)
    if not hint.contains_subspace(G.span(H)):
        raise StructuralError("coradical hint does not contain the group-like elements")
    return hint


@dataclass(frozen=True)
class CoradicalFiltration:
    layers: tuple

    @property
    def coradical(self) -> Subspace:
        return self.layers[0]

    @property
    def length(self) -> int:
        """Index of the last layer."""
        return len(self.layers) - 1

    def dims(self) -> list[int]:
        return [layer.dim for layer in self.layers]

    def layer(self, r: int) -> Subspace:
        return self.layers[min(r, self.length)]


def coradical_filtration(H: HopfAlgebraData, hint: Optional[Subspace] = None) -> CoradicalFiltration:
    """
    C_n = Delta^{-1}(H (x) C_{n-1} + C_0 (x) H), iterated until it stabilises.

    :raises StructuralError: when it stabilises strictly below H.
    """
    C0 = coradical(H, hint)
    layers = [C0]
    while not layers[-1].is_full():
        nxt = _coproduct_preimage(H, C0, layers[-1])
        if nxt == layers[-1]:
            raise StructuralError(f"coradical filtration stabilises at dimension {nxt.dim} < {H.dim}")
        layers.append(nxt)
    logger.debug("coradical filtration dimensions %s", [c.dim for c in layers])
    return CoradicalFiltration(tuple(layers))


def _adapted_basis(filtration: CoradicalFiltration) -> tuple[list[tuple], list[int]]:
    basis, levels = [], []
    previous = set()
    for level, layer in enumerate(filtration.layers):
        for row, p in zip(layer.basis, layer.pivots):
            if p not in previous:
                basis.append(row)
                levels.append(level)
        previous = set(layer.pivots)
    return basis, levels


def is_subhopf(H: HopfAlgebraData, C: Subspace) -> bool:
    if not C.contains(H.unit):
        return False
    for a in C.basis:
        if not C.contains(H.apply_antipode(a)):
            return False
        for b in C.basis:
            if not C.contains(H.multiply(a, b)):
                return False
    return is_subcoalgebra(H, C)


@dataclass(frozen=True)
class FiltrationReport:
    checks: CheckReport
    coradical_subhopf: bool

    @property
    def passed(self) -> bool:
        return self.checks.passed


def check_filtration(H: HopfAlgebraData, filtration: CoradicalFiltration) -> FiltrationReport:
    """
    Nesting, exhaustion and Delta C_n in sum_i C_i (x) C_{n-i}; when C_0 is a
    sub-Hopf-algebra also C_n C_m in C_{n+m} and S(C_n) in C_n.
    """
    F = H.field
    n = H.dim
    layers = filtration.layers
    checks = []

    nest = next((i for i in range(1, len(layers)) if not layers[i].contains_subspace(layers[i - 1])), None)
    checks.append(CheckResult('nesting', nest is None, None if nest is None else {'layer': nest}))
    checks.append(CheckResult('exhaustion', layers[-1].is_full(),
                              None if layers[-1].is_full() else {'dim': layers[-1].dim}))

    basis, levels = _adapted_basis(filtration)
    failure = None
    if len(basis) != n:
        failure = {'detail': 'layers are not nested'}
    else:
        Q = mat_inverse(F, basis)
        for level, layer in enumerate(layers):
            for v in layer.basis:
                W = _as_matrix(H, H.coproduct(v))
                # coordinates in the adapted basis: Q^T W Q
                WQ = [[F.sum(F.mul(W[j][k], Q[k][b]) for k in range(n) if not F.is_zero(W[j][k]))
                       for b in range(n)] for j in range(n)]
                for a in range(n):
                    for b in range(n):
                        if levels[a] + levels[b] <= level:
                            continue
                        c = F.sum(F.mul(Q[j][a], WQ[j][b]) for j in range(n) if not F.is_zero(Q[j][a]))
                        if not F.is_zero(c):
                            failure = {'layer': level, 'element': format_element(H, v)}
                            break
                    if failure:
                        break
                if failure:
                    break
            if failure:
                break
    checks.append(CheckResult('delta_compatibility', failure is None, failure))

    subhopf = is_subhopf(H, filtration.coradical)
    if subhopf:
        witness = None
        for i, Ci in enumerate(layers):
            for j, Cj in enumerate(layers):
                target = filtration.layer(i + j)
                for a in Ci.basis:
                    for b in Cj.basis:
                        if not target.contains(H.multiply(a, b)):
                            witness = {'layers': [i, j]}
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break
        checks.append(CheckResult('multiplicative', witness is None, witness))
        bad = next((i for i, Ci in enumerate(layers)
                    if not all(Ci.contains(H.apply_antipode(a)) for a in Ci.basis)), None)
        checks.append(CheckResult('antipode_stable', bad is None, None if bad is None else {'layer': bad}))
    return FiltrationReport(CheckReport(tuple(checks)), subhopf)


def filtration_plus(H: HopfAlgebraData, r: int, filtration: Optional[CoradicalFiltration] = None) -> Subspace:
    """H_r^+ = H_r intersected with ker epsilon; r past the last layer clamps."""
    filtration = filtration or coradical_filtration(H)
    return filtration.layer(r).intersection(counit_kernel(H))


# ---------------------------------------------------------------- classification

@dataclass(frozen=True)
class Classification:
    pointed: bool
    connected: bool
    coradical_dim: int
    grouplike_count: int


def classify(H: HopfAlgebraData, hint: Optional[Subspace] = None,
             grouplike_set: Optional[GroupLikeSet] = None) -> Classification:
    """pointed iff dim C_0 = |G(H)|; connected iff dim C_0 = 1."""
    C0 = coradical(H, hint)
    G = grouplike_set or grouplikes(H)
    pointed = C0.dim == G.size and C0.contains_subspace(G.span(H))
    return Classification(pointed, C0.dim == 1, C0.dim, G.size)


# ---------------------------------------------------------------- ideals and quotients

def ideal_generated(H: HopfAlgebraData, S: Sequence[Sequence]) -> Subspace:
    """Smallest two-sided ideal containing S."""
    V = Subspace.span(H.field, H.dim, S)
    while True:
        products = []
        for v in V.basis:
            for i in range(H.dim):
                e = H.basis_vector(i)
                products.append(H.multiply(e, v))
                products.append(H.multiply(v, e))
        W = V.extend(products)
        if W == V:
            return V
        V = W


def left_ideal_product(H: HopfAlgebraData, V: Subspace) -> Subspace:
    """H V = span{h v}."""
    return Subspace.span(H.field, H.dim,
                         [H.multiply(H.basis_vector(i), v) for i in range(H.dim) for v in V.basis])


@dataclass(frozen=True)
class HopfIdealReport:
    subspace: Subspace
    two_sided_ideal: bool
    coideal: bool
    counit_zero: bool
    antipode_stable: bool
    checks: CheckReport

    @property
    def hopf_ideal(self) -> bool:
        return self.two_sided_ideal and self.coideal and self.counit_zero and self.antipode_stable


def verify_hopf_ideal(H: HopfAlgebraData, J: Subspace) -> HopfIdealReport:
    F = H.field

    def first(bad):
        return next(bad, None)

    ideal_bad = first(({'element': format_element(H, v), 'by': H.basis_names[i]}
                       for v in J.basis for i in range(H.dim)
                       if not J.contains(H.multiply(H.basis_vector(i), v))
                       or not J.contains(H.multiply(v, H.basis_vector(i)))))
    coideal_bad = first(({'element': format_element(H, v)} for v in J.basis
                         if not in_tensor_sum(H, H.coproduct(v), J, J)))
    counit_bad = first(({'element': format_element(H, v)} for v in J.basis
                        if not F.is_zero(H.counit_value(v))))
    antipode_bad = first(({'element': format_element(H, v)} for v in J.basis
                          if not J.contains(H.apply_antipode(v))))
    checks = CheckReport((
        CheckResult('two_sided_ideal', ideal_bad is None, ideal_bad),
        CheckResult('coideal', coideal_bad is None, coideal_bad),
        CheckResult('counit_zero', counit_bad is None, counit_bad),
        CheckResult('antipode_stable', antipode_bad is None, antipode_bad),
    ))
    return HopfIdealReport(J, ideal_bad is None, coideal_bad is None, counit_bad is None,
                           antipode_bad is None, checks)


@dataclass(frozen=True)
class HopfQuotient:
    hopf: HopfAlgebraData
    projection: tuple
    kept: tuple

    def project(self, v: Sequence) -> tuple:
        F = self.hopf.field
        out = [F.zero] * self.hopf.dim
        for i, c in enumerate(v):
            if not F.is_zero(c):
                for k, a in enumerate(self.projection[i]):
                    out[k] = F.add(out[k], F.mul(c, a))
        return tuple(out)


def quotient_hopf(H: HopfAlgebraData, J: Subspace) -> HopfQuotient:
    """
    H/J on the basis of the lowest-index basis elements complementing J.

    :raises HopfIdealError: when J is not a Hopf ideal.
    """
    report = verify_hopf_ideal(H, J)
    if not report.hopf_ideal:
        failed = ', '.join(c.name for c in report.checks.failures())
        raise HopfIdealError(f"subspace is not a Hopf ideal ({failed} failed)")
    F = H.field
    n = H.dim
    reversed_J = Subspace.span(F, n, [tuple(reversed(v)) for v in J.basis])
    dropped = {n - 1 - p for p in reversed_J.pivots}
    kept = tuple(i for i in range(n) if i not in dropped)
    if not kept:
        raise HopfIdealError("quotient by the whole algebra is zero")
    m = len(kept)
    projection = []
    for i in range(n):
        residual = tuple(reversed(reversed_J.reduce(tuple(reversed(H.basis_vector(i))))))
        projection.append(tuple(residual[k] for k in kept))
    projection = tuple(projection)

    def proj(v):
        out = [F.zero] * m
        for i, c in enumerate(v):
            if not F.is_zero(c):
                for k, a in enumerate(projection[i]):
                    out[k] = F.add(out[k], F.mul(c, a))
        return tuple(out)

    def proj2(w):
        out = [F.zero] * (m * m)
        for t, c in enumerate(w):
            if F.is_zero(c):
                continue
            j, k = divmod(t, n)
            for a, x in enumerate(projection[j]):
                if F.is_zero(x):
                    continue
                for b, y in enumerate(projection[k]):
                    if not F.is_zero(y):
                        out[a * m + b] = F.add(out[a * m + b], F.mul(c, F.mul(x, y)))
        return tuple(out)

    mult = [[proj(H.mult[a][b]) for b in kept] for a in kept]
    comult = [proj2(H.comult[a]) for a in kept]
    counit = [H.counit[a] for a in kept]
    antipode = [proj(H.antipode[a]) for a in kept]
    hint = None
    if H.coradical_hint is not None:
        hint = Subspace.span(F, m, [proj(v) for v in H.coradical_hint]).basis
    Q = build_from_tables(F, [H.basis_names[a] for a in kept], mult, proj(H.unit), comult, counit, antipode,
                          hint)
    logger.debug("quotient of dimension %d keeps %s", m, list(Q.basis_names))
    return HopfQuotient(Q, projection, kept)


def check_grouplike_epimorphism(H: HopfAlgebraData, quotient: HopfQuotient,
                                source: Optional[GroupLikeSet] = None,
                                target: Optional[GroupLikeSet] = None) -> CheckResult:
    """G(H) -> G(H/J) is onto: every group-like of the quotient is the image of one of H."""
    source = source or grouplikes(H)
    target = target or grouplikes(quotient.hopf)
    images = {quotient.project(g) for g in source.elements}
    missing = next((g for g in target.elements if g not in images), None)
    return CheckResult('grouplike_epimorphism', missing is None,
                       None if missing is None else {'element': format_element(quotient.hopf, missing)},
                       f"|G(H)| = {source.size}, |G(H/J)| = {target.size}, images = {len(images)}")
