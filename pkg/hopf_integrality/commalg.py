"""
Finitely presented commutative algebras k[y_1..y_s]/(r_1..r_m).

Polynomials are sparse maps from exponent tuples to nonzero field elements.
Gröbner bases are computed by Buchberger's algorithm with the coprime
leading-monomial criterion and monic normalisation at every step; the
output is the reduced basis sorted by leading monomial.

Example:
    from hopf_integrality.commalg import FPCommAlgebra
    from hopf_integrality.exactfield import RationalField

    A = FPCommAlgebra.create(RationalField(), ['y', 'z'], ['z^2'])
    assert A.normal_form(A.parse('y*z^3')).is_zero()
    assert A.format(A.normal_form(A.parse('y*z + y'))) == 'y*z + y'
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from hopf_integrality.exactfield import Field, MixedFieldError, ScalarParseError, format_terms, parse_terms
from hopf_integrality.linalg import Subspace
from hopf_integrality.utils.config import get_gb_budget

logger = logging.getLogger('hopf_integrality.commalg')

Monomial = tuple

ORDERS = ('grevlex', 'grlex', 'lex')


class PolynomialParseError(ValueError):
    """Exception raised when a polynomial string cannot be parsed."""


class BudgetExceededError(RuntimeError):
    """Exception raised when a computation exceeds its configured step budget."""


class WorkspaceOverflowError(RuntimeError):
    """Exception raised when a result leaves the degree-truncated workspace."""

    def __init__(self, message: str, required_degree: int):
        super().__init__(message)
        self.required_degree = required_degree


def monomial_key(order: str):
    """Sort key under which larger monomials compare greater."""
    if order == 'lex':
        return lambda m: m
    if order == 'grlex':
        return lambda m: (sum(m), m)
    if order == 'grevlex':
        return lambda m: (sum(m), tuple(-e for e in reversed(m)))
    raise ValueError(f"unknown term order {order!r}; expected one of {', '.join(ORDERS)}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return '*'.join(parts)


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables tagged with a term order."""

    __slots__ = ('field', 'nvars', 'order', 'terms')

    def __init__(self, field: Field, nvars: int, terms: Optional[Mapping[Monomial, object]] = None,
                 order: str = 'grevlex'):
        self.field = field
        self.nvars = nvars
        self.order = order
        self.terms = {m: c for m, c in (terms or {}).items() if not field.is_zero(c)}

    @classmethod
    def zero(cls, field: Field, nvars: int, order: str = 'grevlex') -> 'Poly':
        return cls(field, nvars, None, order)

    @classmethod
    def constant(cls, field: Field, nvars: int, c, order: str = 'grevlex') -> 'Poly':
        return cls(field, nvars, {(0,) * nvars: c}, order)

    @classmethod
    def monomial(cls, field: Field, nvars: int, m: Monomial, c=None, order: str = 'grevlex') -> 'Poly':
        return cls(field, nvars, {tuple(m): field.one if c is None else c}, order)

    @classmethod
    def variable(cls, field: Field, nvars: int, i: int, order: str = 'grevlex') -> 'Poly':
        return cls.monomial(field, nvars, tuple(1 if k == i else 0 for k in range(nvars)), order=order)

    def _like(self, terms: Mapping) -> 'Poly':
        return Poly(self.field, self.nvars, terms, self.order)

    def _compatible(self, other: 'Poly'):
        if self.field != other.field or self.nvars != other.nvars:
            raise MixedFieldError(f"polynomials over {self.field}[{self.nvars}] and "
                                  f"{other.field}[{other.nvars}] cannot be combined")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: 'Poly') -> 'Poly':
        self._compatible(other)
        F = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = F.add(terms[m], c) if m in terms else c
        return self._like(terms)

    def __neg__(self) -> 'Poly':
        return self._like({m: self.field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: 'Poly') -> 'Poly':
        return self + (-other)

    def __mul__(self, other: 'Poly') -> 'Poly':
        self._compatible(other)
        F = self.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = F.mul(c1, c2)
                terms[m] = F.add(terms[m], c) if m in terms else c
        return self._like(terms)

    def __pow__(self, e: int) -> 'Poly':
        result = Poly.constant(self.field, self.nvars, self.field.one, self.order)
        for _ in range(e):
            result = result * self
        return result

    def scale(self, c) -> 'Poly':
        return self._like({m: self.field.mul(c, a) for m, a in self.terms.items()})

    def mul_monomial(self, m: Monomial, c=None) -> 'Poly':
        F = self.field
        c = F.one if c is None else c
        return self._like({mono_mul(m, k): F.mul(c, a) for k, a in self.terms.items()})

    def with_order(self, order: str) -> 'Poly':
        return Poly(self.field, self.nvars, self.terms, order)

    @property
    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=monomial_key(self.order))

    @property
    def leading_coefficient(self):
        return self.terms[self.leading_monomial]

    def monic(self) -> 'Poly':
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient))

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, m: Monomial):
        return self.terms.get(tuple(m), self.field.zero)

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.terms, key=monomial_key(self.order), reverse=True)

    def variables_used(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def format(self, names: Sequence[str]) -> str:
        return format_terms(self.field, [(self.terms[m], format_monomial(m, names))
                                         for m in self.sorted_monomials()])

    def __repr__(self):
        return f"Poly({self.format([f'y{i}' for i in range(self.nvars)])})"


def _reduce_terms(field: Field, terms: dict, basis: Sequence[tuple[Monomial, dict]], key) -> dict:
    """Full reduction of ``terms`` by monic basis elements given as (leading monomial, terms)."""
    F = field
    p = dict(terms)
    remainder = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                for gm, gc in g.items():
                    t = mono_mul(q, gm)
                    v = F.sub(p.get(t, F.zero), F.mul(c, gc))
                    if F.is_zero(v):
                        p.pop(t, None)
                    else:
                        p[t] = v
                break
        else:
            remainder[m] = p.pop(m)
    return remainder


def _spoly(field: Field, f: tuple[Monomial, dict], g: tuple[Monomial, dict]) -> dict:
    lcm = mono_lcm(f[0], g[0])
    qf, qg = mono_div(lcm, f[0]), mono_div(lcm, g[0])
    out = {}
    for m, c in f[1].items():
        out[mono_mul(qf, m)] = c
    for m, c in g[1].items():
        t = mono_mul(qg, m)
        v = field.sub(out.get(t, field.zero), c)
        if field.is_zero(v):
            out.pop(t, None)
        else:
            out[t] = v
    return out


def _monic_terms(field: Field, terms: dict, key) -> tuple[Monomial, dict]:
    lm = max(terms, key=key)
    inv = field.inv(terms[lm])
    return lm, {m: field.mul(inv, c) for m, c in terms.items()}


def buchberger(field: Field, nvars: int, gens: Iterable[Poly], order: str = 'grevlex',
               budget: Optional[int] = None) -> list[Poly]:
    """
    Reduced Gröbner basis of the ideal generated by ``gens``, sorted by leading monomial.

    :raises BudgetExceededError: after ``budget`` S-pair reductions.
    """
    key = monomial_key(order)
    budget = get_gb_budget() if budget is None else budget
    basis = []
    for g in gens:
        if g.field != field or g.nvars != nvars:
            raise MixedFieldError(f"generator over {g.field}[{g.nvars}] does not belong to {field}[{nvars}]")
        if g.terms:
            r = _reduce_terms(field, g.terms, basis, key)
            if r:
                basis.append(_monic_terms(field, r, key))
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    steps = 0
    while pairs:
        pairs.sort(key=lambda ij: key(mono_lcm(basis[ij[0]][0], basis[ij[1]][0])), reverse=True)
        i, j = pairs.pop()
        if mono_coprime(basis[i][0], basis[j][0]):
            continue
        steps += 1
        if steps > budget:
            raise BudgetExceededError(f"Gröbner basis computation exceeded {budget} pair reductions")
        r = _reduce_terms(field, _spoly(field, basis[i], basis[j]), basis, key)
        if r:
            basis.append(_monic_terms(field, r, key))
            k = len(basis) - 1
            pairs.extend((i, k) for i in range(k))
    logger.debug("buchberger: %d pair reductions, %d elements before reduction", steps, len(basis))
    return [Poly(field, nvars, terms, order) for _, terms in _interreduce(field, basis, key)]


def _interreduce(field: Field, basis: list[tuple[Monomial, dict]], key) -> list[tuple[Monomial, dict]]:
    minimal = []
    for idx, (lm, terms) in enumerate(basis):
        redundant = any(mono_divides(other, lm) and (other != lm or j < idx)
                        for j, (other, _) in enumerate(basis) if j != idx)
        if not redundant:
            minimal.append((lm, terms))
    reduced = []
    for idx, (lm, terms) in enumerate(minimal):
        others = [g for j, g in enumerate(minimal) if j != idx]
        tail = {m: c for m, c in terms.items() if m != lm}
        rest = _reduce_terms(field, tail, others, key)
        rest[lm] = field.one
        reduced.append((lm, rest))
    reduced.sort(key=lambda g: key(g[0]))
    return reduced


def parse_polynomial(text: str, field: Field, variables: Sequence[str], order: str = 'grevlex') -> Poly:
    """
    Parse ``"3/2*y^2*z - z"`` over the declared variables.

    Parenthesised groups are scalars, e.g. ``"(z)*y"`` for zeta_N times y.

    :raises PolynomialParseError: on unknown variables or malformed input.
    """
    nvars = len(variables)
    index = {name: i for i, name in enumerate(variables)}
    try:
        terms = parse_terms(text, field, names=variables)
    except (ScalarParseError, ZeroDivisionError) as e:
        raise PolynomialParseError(f"invalid polynomial {text!r}: {e}") from e
    acc = Poly.zero(field, nvars, order)
    for term in terms:
        m = [0] * nvars
        for name, e in term.factors:
            m[index[name]] += e
        acc = acc + Poly.monomial(field, nvars, tuple(m), term.coefficient, order)
    return acc


@dataclass(frozen=True, eq=False)
class FPCommAlgebra:
    """k[variables]/(relations) together with its reduced Gröbner basis."""

    field: Field
    variables: tuple
    relations: tuple
    order: str
    gb: tuple

    @classmethod
    def create(cls, field: Field, variables: Sequence[str], relations: Iterable = (),
               order: str = 'grevlex', budget: Optional[int] = None) -> 'FPCommAlgebra':
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PolynomialParseError(f"duplicate variable names in {list(variables)}")
        monomial_key(order)
        rels = []
        for r in relations:
            if isinstance(r, str):
                r = parse_polynomial(r, field, variables, order)
            elif r.field != field or r.nvars != len(variables):
                raise MixedFieldError(f"relation over {r.field}[{r.nvars}] does not belong to "
                                      f"{field}[{len(variables)}]")
            rels.append(r.with_order(order))
        gb = buchberger(field, len(variables), rels, order, budget)
        return cls(field, variables, tuple(rels), order, tuple(gb))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def _gb_terms(self) -> list[tuple[Monomial, dict]]:
        return [(g.leading_monomial, g.terms) for g in self.gb]

    @cached_property
    def _key(self):
        return monomial_key(self.order)

    @property
    def lead_monomials(self) -> list[Monomial]:
        return [lm for lm, _ in self._gb_terms]

    @cached_property
    def homogeneous(self) -> bool:
        return all(r.is_homogeneous() for r in self.gb)

    def one(self) -> Poly:
        return Poly.constant(self.field, self.nvars, self.field.one, self.order)

    def zero(self) -> Poly:
        return Poly.zero(self.field, self.nvars, self.order)

    def variable(self, i: int) -> Poly:
        return Poly.variable(self.field, self.nvars, i, self.order)

    def monomial(self, m: Monomial, c=None) -> Poly:
        return Poly.monomial(self.field, self.nvars, m, c, self.order)

    def parse(self, text: str) -> Poly:
        return parse_polynomial(text, self.field, self.variables, self.order)

    def coerce(self, f) -> Poly:
        if isinstance(f, str):
            return self.parse(f)
        if f.field != self.field or f.nvars != self.nvars:
            raise MixedFieldError(f"polynomial over {f.field}[{f.nvars}] does not belong to this algebra")
        return f.with_order(self.order) if f.order != self.order else f

    def normal_form(self, f: Poly) -> Poly:
        f = self.coerce(f)
        return Poly(self.field, self.nvars, _reduce_terms(self.field, f.terms, self._gb_terms, self._key),
                    self.order)

    def mul(self, f: Poly, g: Poly) -> Poly:
        return self.normal_form(self.coerce(f) * self.coerce(g))

    def power(self, f: Poly, e: int) -> Poly:
        result = self.one()
        base = self.normal_form(f)
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def is_standard(self, m: Monomial) -> bool:
        return not any(mono_divides(lm, m) for lm in self.lead_monomials)

    def is_reduced_basis(self) -> bool:
        for idx, (lm, terms) in enumerate(self._gb_terms):
            if terms[lm] != self.field.one:
                return False
            for j, (other, _) in enumerate(self._gb_terms):
                if j != idx and any(mono_divides(other, m) for m in terms):
                    return False
        return True

    def format(self, f: Poly) -> str:
        return f.format(self.variables)

    def describe(self) -> dict:
        return {
            'field': str(self.field),
            'variables': list(self.variables),
            'relations': [self.format(r) for r in self.relations],
            'order': self.order,
            'groebner_basis': [self.format(g) for g in self.gb],
        }


def normal_form(A: FPCommAlgebra, f: Poly) -> Poly:
    return A.normal_form(f)


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        m = [0] * nvars
        for v in combo:
            m[v] += 1
        out.append(tuple(m))
    return out


def standard_monomials(A: FPCommAlgebra, d: int) -> list[Monomial]:
    """Monomials of degree <= d outside the leading-monomial ideal, ascending degree then descending order."""
    out = []
    for k in range(d + 1):
        layer = [m for m in monomials_of_degree(A.nvars, k) if A.is_standard(m)]
        layer.sort(key=A._key, reverse=True)
        out.extend(layer)
    return out


@dataclass(frozen=True, eq=False)
class Workspace:
    """Coordinates on the span of the standard monomials of degree <= ``degree``."""

    algebra: FPCommAlgebra
    degree: int
    monomials: tuple

    @classmethod
    def build(cls, algebra: FPCommAlgebra, degree: int) -> 'Workspace':
        if degree < 0:
            raise ValueError(f"workspace degree must be non-negative, got {degree}")
        if not algebra.homogeneous:
            logger.warning("relations are not homogeneous; degree %d is a truncation, not a grading", degree)
        monomials = tuple(standard_monomials(algebra, degree))
        logger.debug("workspace of degree %d has dimension %d", degree, len(monomials))
        return cls(algebra, degree, monomials)

    @cached_property
    def index(self) -> dict:
        return {m: i for i, m in enumerate(self.monomials)}

    @property
    def dim(self) -> int:
        return len(self.monomials)

    @property
    def field(self) -> Field:
        return self.algebra.field

    def to_vector(self, f: Poly, reduce: bool = True) -> tuple:
        F = self.field
        if reduce:
            f = self.algebra.normal_form(f)
        v = [F.zero] * self.dim
        for m, c in f.terms.items():
            i = self.index.get(m)
            if i is None:
                raise WorkspaceOverflowError(
                    f"{format_monomial(m, self.algebra.variables) or '1'} lies outside the degree-{self.degree} "
                    f"workspace", sum(m))
            v[i] = c
        return tuple(v)

    def to_poly(self, v: Sequence) -> Poly:
        return Poly(self.field, self.algebra.nvars, {m: c for m, c in zip(self.monomials, v)}, self.algebra.order)

    def embed(self, v: Sequence, larger: 'Workspace') -> tuple:
        return larger.to_vector(self.to_poly(v), reduce=False)

    def subspace(self, polys: Iterable[Poly]) -> Subspace:
        return Subspace.span(self.field, self.dim, [self.to_vector(f) for f in polys])

    def restrict(self, S: Subspace, degree: int) -> Subspace:
        """The part of ``S`` spanned by standard monomials of degree <= ``degree``."""
        high = [i for i, m in enumerate(self.monomials) if sum(m) > degree]
        if not high:
            return S
        constraints = Subspace.span(self.field, self.dim,
                                    [tuple(self.field.one if k == i else self.field.zero for k in range(self.dim))
                                     for i in high])
        return S.intersection(constraints.annihilator())


def generator_products(A: FPCommAlgebra, gens: Sequence[Poly], max_count: int,
                       max_degree: Optional[int] = None) -> Iterator[tuple[tuple, Poly]]:
    """
    Yield (exponents, NF of the product) for products of at most ``max_count`` generators.

    Products whose degree bound sum(e_i * deg g_i) exceeds ``max_degree`` are skipped.
    Order: by number of factors, then lexicographically by generator multiset.
    """
    k = len(gens)
    degs = [max(g.total_degree, 0) for g in gens]
    yield (0,) * k, A.one()
    cache = {(): A.one()}
    for count in range(1, max_count + 1):
        for combo in combinations_with_replacement(range(k), count):
            if max_degree is not None and sum(degs[i] for i in combo) > max_degree:
                continue
            value = A.mul(cache[combo[:-1]], gens[combo[-1]])
            cache[combo] = value
            exps = [0] * k
            for i in combo:
                exps[i] += 1
            yield tuple(exps), value


def subalgebra_span(A: FPCommAlgebra, gens: Sequence[Poly], e: int,
                    workspace: Optional[Workspace] = None) -> Subspace:
    """
    Span of the normal forms of products of at most ``e`` generators, empty product included.

    Without a workspace, one of degree ``e * max deg(gens)`` is built.

    :raises WorkspaceOverflowError: when a product leaves the given workspace.
    """
    gens = [A.normal_form(g) for g in gens]
    if workspace is None:
        workspace = Workspace.build(A, e * max((g.total_degree for g in gens), default=0))
    return workspace.subspace(value for _, value in generator_products(A, gens, e))
