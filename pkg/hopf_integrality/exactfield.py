"""
Exact scalar arithmetic over the rationals, prime fields and cyclotomic fields.

Every other module computes through a :class:`Field` object. Elements are kept
in their native representation so that arithmetic stays cheap:

    * ``RationalField``     -- ``fractions.Fraction``
    * ``PrimeField(p)``     -- ``int`` in ``[0, p)``
    * ``CyclotomicField(N)`` -- tuple of ``Fraction`` of length phi(N), the
      coefficients of a representative of degree < phi(N) in Q[t]/Phi_N(t).
      The distinguished root of unity zeta_N is the class of t.

The module also holds the univariate polynomial helpers (:class:`UniPoly`,
:func:`cyclotomic_polynomial`, :func:`roots_in_field`) and the small
expression parser shared by scalar, polynomial and Hopf-element syntax.

Example:
    from hopf_integrality.exactfield import CyclotomicField

    k = CyclotomicField(3)
    xi = k.zeta
    assert k.power(xi, 3) == k.one
    assert k.format(k.parse("z^4")) == "z"
"""
from __future__ import annotations

import logging
import random
from math import lcm
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

from sympy import divisors, isprime, totient

logger = logging.getLogger('hopf_integrality.exactfield')

MAX_PRIME = 2 ** 31


class FieldError(ValueError):
    """Exception raised for an invalid field specification."""


class ScalarParseError(ValueError):
    """Exception raised when a scalar or expression string cannot be parsed."""


class MixedFieldError(ValueError):
    """Exception raised when a value does not belong to the field it is used with."""


class UnsupportedOperationError(RuntimeError):
    """Exception raised when an operation is not available for the given field."""


class Field(ABC):
    """Abstract exact field. Subclasses are frozen dataclasses, so fields compare by value."""

    kind = 'abstract'

    @property
    @abstractmethod
    def characteristic(self) -> int:
        ...

    @property
    @abstractmethod
    def zero(self):
        ...

    @property
    @abstractmethod
    def one(self):
        ...

    @abstractmethod
    def contains(self, a) -> bool:
        ...

    @abstractmethod
    def from_fraction(self, q: Fraction):
        ...

    @abstractmethod
    def add(self, a, b):
        ...

    @abstractmethod
    def neg(self, a):
        ...

    @abstractmethod
    def mul(self, a, b):
        ...

    @abstractmethod
    def inv(self, a):
        ...

    @abstractmethod
    def format(self, a) -> str:
        ...

    @abstractmethod
    def parse(self, text: str):
        ...

    @abstractmethod
    def random_element(self, rng: random.Random):
        ...

    @abstractmethod
    def to_spec(self) -> dict:
        ...

    # restriction of scalars to the prime field (Q or F_p)
    @abstractmethod
    def base_field(self) -> 'Field':
        ...

    @property
    def degree(self) -> int:
        return 1

    def components(self, a) -> tuple:
        return (a,)

    def from_components(self, values: Sequence):
        return values[0]

    def is_rational_value(self, a) -> bool:
        """True when ``a`` lies in the prime field (needs no parentheses in polynomial syntax)."""
        return True

    def format_signed(self, a) -> str:
        """Coefficient text used inside sums; defaults to ``format``."""
        return self.format(a)

    def sort_key(self, a) -> tuple:
        return tuple(self.components(a))

    def from_int(self, n: int):
        return self.from_fraction(Fraction(n))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def power(self, a, e: int):
        if e < 0:
            return self.power(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def sum(self, values: Iterable):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def coerce(self, value):
        """Convert a string, ``int`` or ``Fraction`` into a field element, validating existing elements."""
        if isinstance(value, str):
            return self.parse(value)
        if self.contains(value):
            return value
        if isinstance(value, bool):
            raise MixedFieldError(f"{value!r} is not an element of {self}")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        raise MixedFieldError(f"{value!r} is not an element of {self}")

    def check(self, value, where: str = 'value'):
        if not self.contains(value):
            raise MixedFieldError(f"{where} = {value!r} is not an element of {self}")
        return value


@dataclass(frozen=True)
class RationalField(Field):
    kind = 'rational'

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def contains(self, a) -> bool:
        return isinstance(a, Fraction)

    def from_fraction(self, q: Fraction):
        return Fraction(q)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        return _parse_constant(text, self)

    def random_element(self, rng: random.Random):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    def to_spec(self) -> dict:
        return {'kind': self.kind}

    def base_field(self) -> Field:
        return self

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int
    kind = 'prime'

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise FieldError(f"prime field characteristic must be an integer, got {self.p!r}")
        if not 2 <= self.p < MAX_PRIME:
            raise FieldError(f"prime field characteristic must lie in [2, 2^31), got {self.p}")
        if not isprime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def contains(self, a) -> bool:
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.p

    def from_int(self, n: int):
        return n % self.p

    def from_fraction(self, q: Fraction):
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(f"{q} has no image in F_{self.p}")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return pow(a, -1, self.p)

    def power(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def format(self, a) -> str:
        return str(a)

    # balanced residue: p - 1 prints as -1
    def format_signed(self, a) -> str:
        return f"-{self.p - a}" if a > self.p // 2 else str(a)

    def parse(self, text: str):
        return _parse_constant(text, self)

    def random_element(self, rng: random.Random):
        return rng.randrange(self.p)

    def to_spec(self) -> dict:
        return {'kind': self.kind, 'p': self.p}

    def base_field(self) -> Field:
        return self

    def elements(self) -> range:
        return range(self.p)

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class CyclotomicField(Field):
    """Q(zeta_N) realised as Q[t]/Phi_N(t); ``zeta`` is the class of t."""

    N: int
    kind = 'cyclotomic'

    def __post_init__(self):
        if isinstance(self.N, bool) or not isinstance(self.N, int) or self.N < 1:
            raise FieldError(f"cyclotomic order must be an integer >= 1, got {self.N!r}")

    @cached_property
    def modulus(self) -> 'UniPoly':
        return cyclotomic_polynomial(self.N)

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def characteristic(self) -> int:
        return 0

    @cached_property
    def zero(self):
        return (Fraction(0),) * self.degree

    @cached_property
    def one(self):
        return (Fraction(1),) + (Fraction(0),) * (self.degree - 1)

    @cached_property
    def zeta(self):
        return self._reduce([Fraction(0), Fraction(1)])

    def _reduce(self, coeffs: list) -> tuple:
        d = self.degree
        phi = self.modulus.coeffs
        coeffs = list(coeffs)
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c:
                for j in range(d):
                    coeffs[k - d + j] -= c * phi[j]
                coeffs[k] = Fraction(0)
        coeffs.extend([Fraction(0)] * (d - len(coeffs)))
        return tuple(coeffs[:d])

    def contains(self, a) -> bool:
        return (isinstance(a, tuple) and len(a) == self.degree
                and all(isinstance(c, Fraction) for c in a))

    def from_fraction(self, q: Fraction):
        return (Fraction(q),) + (Fraction(0),) * (self.degree - 1)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError(f"division by zero in Q(zeta_{self.N})")
        q = RationalField()
        g, s, _ = UniPoly(q, a).xgcd(self.modulus)
        # g is a nonzero constant because Phi_N is irreducible
        scale = q.inv(g.coeffs[0])
        return self._reduce([c * scale for c in s.coeffs])

    def components(self, a) -> tuple:
        return tuple(a)

    def from_components(self, values: Sequence):
        return tuple(Fraction(v) for v in values)

    def is_rational_value(self, a) -> bool:
        return all(c == 0 for c in a[1:])

    def format(self, a) -> str:
        terms = []
        for k in range(self.degree - 1, -1, -1):
            label = '' if k == 0 else ('z' if k == 1 else f"z^{k}")
            terms.append((a[k], label))
        return format_terms(RationalField(), terms)

    def parse(self, text: str):
        acc = self.zero
        for term in parse_terms(text, self, constants={'z': self.zeta}):
            acc = self.add(acc, term.coefficient)
        return acc

    def random_element(self, rng: random.Random):
        return tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(self.degree))

    def to_spec(self) -> dict:
        return {'kind': self.kind, 'N': self.N}

    def base_field(self) -> Field:
        return RationalField()

    def __str__(self):
        return f"Q(zeta_{self.N})"


def field_from_spec(spec: Mapping) -> Field:
    """Build a field from its JSON specification, e.g. ``{"kind": "prime", "p": 3}``."""
    if not isinstance(spec, Mapping):
        raise FieldError(f"field specification must be an object, got {spec!r}")
    kind = spec.get('kind')
    if kind == 'rational':
        return RationalField()
    if kind == 'prime':
        return PrimeField(spec.get('p'))
    if kind == 'cyclotomic':
        return CyclotomicField(spec.get('N'))
    raise FieldError(f"unknown field kind {kind!r}; expected rational, prime or cyclotomic")


def field_from_string(text: str) -> Field:
    """Parse the CLI field syntax: ``rational``, ``prime:P`` or ``cyclotomic:N``."""
    kind, _, arg = text.strip().partition(':')
    kind = kind.lower()
    try:
        if kind in ('rational', 'q'):
            return RationalField()
        if kind in ('prime', 'f'):
            return PrimeField(int(arg))
        if kind in ('cyclotomic', 'c'):
            return CyclotomicField(int(arg))
    except ValueError as e:
        raise FieldError(f"invalid field {text!r}: {e}") from e
    raise FieldError(f"invalid field {text!r}; expected rational, prime:P or cyclotomic:N")


def multiplicative_order(field: Field, a, bound: int) -> Optional[int]:
    """Smallest m in [1, bound] with a^m = 1, or None."""
    if field.is_zero(a):
        return None
    x = a
    for m in range(1, bound + 1):
        if x == field.one:
            return m
        x = field.mul(x, a)
    return None


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial, coefficients lowest degree first with trailing zeros stripped."""

    field: Field
    coeffs: tuple

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and self.field.is_zero(coeffs[-1]):
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def from_values(cls, field: Field, values: Iterable) -> 'UniPoly':
        return cls(field, tuple(field.coerce(v) for v in values))

    @classmethod
    def monomial(cls, field: Field, degree: int, coefficient=None) -> 'UniPoly':
        c = field.one if coefficient is None else coefficient
        return cls(field, (field.zero,) * degree + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __add__(self, other: 'UniPoly') -> 'UniPoly':
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (F.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (F.zero,) * (n - len(other.coeffs))
        return UniPoly(F, tuple(F.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> 'UniPoly':
        return UniPoly(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: 'UniPoly') -> 'UniPoly':
        return self + (-other)

    def __mul__(self, other: 'UniPoly') -> 'UniPoly':
        F = self.field
        if self.is_zero() or other.is_zero():
            return UniPoly(F, ())
        prod = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if F.is_zero(x):
                continue
            for j, y in enumerate(other.coeffs):
                prod[i + j] = F.add(prod[i + j], F.mul(x, y))
        return UniPoly(F, tuple(prod))

    def scale(self, c) -> 'UniPoly':
        return UniPoly(self.field, tuple(self.field.mul(c, x) for x in self.coeffs))

    def divmod(self, divisor: 'UniPoly') -> tuple['UniPoly', 'UniPoly']:
        F = self.field
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead_inv = F.inv(divisor.leading)
        quot = [F.zero] * max(len(rem) - dd, 1)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if F.is_zero(c):
                continue
            q = F.mul(c, lead_inv)
            quot[k - dd] = q
            for j, dc in enumerate(divisor.coeffs):
                rem[k - dd + j] = F.sub(rem[k - dd + j], F.mul(q, dc))
        return UniPoly(F, tuple(quot)), UniPoly(F, tuple(rem[:dd] if dd > 0 else ()))

    def monic(self) -> 'UniPoly':
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading))

    def xgcd(self, other: 'UniPoly') -> tuple['UniPoly', 'UniPoly', 'UniPoly']:
        """Return (g, s, t) with s*self + t*other = g (g not normalised)."""
        F = self.field
        zero, one = UniPoly(F, ()), UniPoly(F, (F.one,))
        r0, r1, s0, s1, t0, t1 = self, other, one, zero, zero, one
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        return r0, s0, t0

    def gcd(self, other: 'UniPoly') -> 'UniPoly':
        return self.xgcd(other)[0].monic()

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def format(self, var: str = 't') -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            label = '' if k == 0 else (var if k == 1 else f"{var}^{k}")
            terms.append((self.coeffs[k], label))
        return format_terms(self.field, terms)

    def __str__(self):
        return self.format()


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> UniPoly:
    """Phi_N over Q, obtained by dividing t^N - 1 by Phi_d for every proper divisor d of N."""
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise FieldError(f"cyclotomic order must be an integer >= 1, got {N!r}")
    q = RationalField()
    result = UniPoly(q, (Fraction(-1),) + (Fraction(0),) * (N - 1) + (Fraction(1),))
    for d in divisors(N):
        if d < N:
            result, rem = result.divmod(cyclotomic_polynomial(d))
            assert rem.is_zero(), f"Phi_{d} does not divide t^{N} - 1"
    assert result.degree == int(totient(N))
    return result


def roots_in_field(f: UniPoly, field: Optional[Field] = None) -> list:
    """
    All roots of ``f`` lying in the field (multiplicities dropped), in increasing order.

    Over Q the rational-root theorem is applied to the integer-cleared polynomial;
    over F_p every residue is tried.

    :raises UnsupportedOperationError: for cyclotomic fields.
    """
    field = field or f.field
    if isinstance(field, CyclotomicField):
        raise UnsupportedOperationError(
            "roots_in_field is not available over cyclotomic fields; restrict scalars to Q first")
    if f.is_zero():
        raise ValueError("the zero polynomial has every field element as a root")
    if isinstance(field, PrimeField):
        return [a for a in field.elements() if field.is_zero(f(a))]

    denominators = 1
    for c in f.coeffs:
        denominators = lcm(denominators, c.denominator)
    ints = [int(c * denominators) for c in f.coeffs]
    roots = set()
    while ints and ints[0] == 0:
        roots.add(Fraction(0))
        ints.pop(0)
    if len(ints) > 1:
        for num in divisors(abs(ints[0])):
            for den in divisors(abs(ints[-1])):
                for sign in (1, -1):
                    candidate = Fraction(sign * num, den)
                    if candidate not in roots and f(candidate) == 0:
                        roots.add(candidate)
    return sorted(roots)


# Expression syntax shared by scalars, polynomials and Hopf elements.
#   expr   := ['+'|'-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := INT ['/' INT] | NAME ['^' INT] | '(' expr ')' ['^' INT]

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


@dataclass(frozen=True)
class Term:
    """One parsed summand: a field coefficient times an ordered product of named factors."""

    coefficient: Any
    factors: tuple


def _normalise(text: str) -> str:
    return text.replace('−', '-').replace('·', '*')


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ScalarParseError(f"unexpected character {text[pos:].strip()[:1]!r} in {text!r}")
        if m.group(1) is not None:
            tokens.append(('int', m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(('name', m.group(2), m.start(2)))
        else:
            op = '^' if m.group(3) == '**' else m.group(3)
            tokens.append(('op', op, m.start(3)))
        pos = m.end()
    return tokens


class _TermParser:
    def __init__(self, text: str, field: Field, names: Sequence[str],
                 constants: Mapping[str, Any], group: Callable[[str], Any]):
        self.text = text
        self.field = field
        self.names = set(names)
        self.constants = constants
        self.group = group
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self):
        tok = self._peek()
        if tok is None:
            raise ScalarParseError(f"unexpected end of expression {self.text!r}")
        self.pos += 1
        return tok

    def _exponent(self) -> int:
        tok = self._peek()
        if tok and tok[0] == 'op' and tok[1] == '^':
            self.pos += 1
            kind, value, _ = self._take()
            if kind != 'int':
                raise ScalarParseError(f"exponent must be a non-negative integer in {self.text!r}")
            return int(value)
        return 1

    def parse(self) -> list[Term]:
        if not self.tokens:
            raise ScalarParseError("empty expression")
        terms = []
        sign = self.field.one
        tok = self._peek()
        if tok[0] == 'op' and tok[1] in '+-':
            self.pos += 1
            if tok[1] == '-':
                sign = self.field.neg(sign)
        while True:
            coefficient, factors = self._term()
            terms.append(Term(self.field.mul(sign, coefficient), tuple(factors)))
            tok = self._peek()
            if tok is None:
                return terms
            if tok[0] == 'op' and tok[1] in '+-':
                self.pos += 1
                sign = self.field.one if tok[1] == '+' else self.field.neg(self.field.one)
                continue
            raise ScalarParseError(f"unexpected {tok[1]!r} in {self.text!r}")

    def _term(self):
        F = self.field
        coefficient = F.one
        factors = []
        while True:
            kind, value, start = self._take()
            if kind == 'int':
                c = F.from_int(int(value))
                tok = self._peek()
                if tok and tok[0] == 'op' and tok[1] == '/':
                    self.pos += 1
                    dkind, dvalue, _ = self._take()
                    if dkind != 'int' or int(dvalue) == 0:
                        raise ScalarParseError(f"invalid denominator in {self.text!r}")
                    c = F.from_fraction(Fraction(int(value), int(dvalue)))
                coefficient = F.mul(coefficient, c)
            elif kind == 'name':
                e = self._exponent()
                if value in self.constants:
                    coefficient = F.mul(coefficient, F.power(self.constants[value], e))
                elif value in self.names:
                    factors.append((value, e))
                else:
                    raise ScalarParseError(f"unknown name {value!r} in {self.text!r}")
            elif kind == 'op' and value == '(':
                depth, end = 1, self.pos
                while end < len(self.tokens) and depth:
                    if self.tokens[end][0] == 'op':
                        depth += {'(': 1, ')': -1}.get(self.tokens[end][1], 0)
                    end += 1
                if depth:
                    raise ScalarParseError(f"unbalanced parentheses in {self.text!r}")
                inner = self.text[start + 1:self.tokens[end - 1][2]]
                self.pos = end
                value = self.group(inner)
                coefficient = F.mul(coefficient, F.power(value, self._exponent()))
            else:
                raise ScalarParseError(f"unexpected {value!r} in {self.text!r}")
            tok = self._peek()
            if tok and tok[0] == 'op' and tok[1] == '*':
                self.pos += 1
                continue
            return coefficient, factors


def parse_terms(text: str, field: Field, names: Sequence[str] = (),
                constants: Optional[Mapping[str, Any]] = None,
                group: Optional[Callable[[str], Any]] = None) -> list[Term]:
    """
    Parse a sum of products into :class:`Term` objects.

    :param names: identifiers kept symbolic (polynomial variables, basis names).
    :param constants: identifiers that denote field elements (``z`` for zeta_N).
    :param group: how a parenthesised sub-expression is turned into a field element;
        defaults to ``field.parse``.
    """
    if not isinstance(text, str):
        raise ScalarParseError(f"expected a string, got {type(text).__name__}")
    return _TermParser(_normalise(text), field, names, constants or {},
                       group or field.parse).parse()


def _parse_constant(text: str, field: Field):
    acc = field.zero
    for term in parse_terms(text, field):
        acc = field.add(acc, term.coefficient)
    return acc


def _is_compound(s: str) -> bool:
    return '+' in s[1:] or '-' in s[1:]


def format_terms(field: Field, terms: Iterable[tuple[Any, str]]) -> str:
    """
    Render ``coefficient*label`` summands in canonical text syntax, skipping zeros.

    An empty label stands for the constant term. Coefficients outside the prime
    field are parenthesised so that ``z`` never collides with a variable name.
    """
    parts = []
    for c, label in terms:
        if field.is_zero(c):
            continue
        s = field.format_signed(c)
        if _is_compound(s) or (label and not field.is_rational_value(c)):
            negative, s = False, f"({s})"
        else:
            negative = s.startswith('-')
            s = s[1:] if negative else s
        if label:
            body = label if s == '1' else f"{s}*{label}"
        else:
            body = s
        parts.append((negative, body))
    if not parts:
        return "0"
    out = ('-' if parts[0][0] else '') + parts[0][1]
    for negative, body in parts[1:]:
        out += (' - ' if negative else ' + ') + body
    return out
