"""
paleyclique.gf
~~~~~~~~~~~~~~

Finite fields F_{p^m} in discrete-log representation.

An element is coded by an integer in ``[0, p^m)``: code 0 is zero, code
``t + 1`` is g^t where g is the class of x modulo the canonical primitive
polynomial (see `paleyclique.polys.canonical_polynomial`).  Multiplication
adds exponents, addition goes through the Zech table z(t) defined by
1 + g^t = g^z(t).

Besides the table every field keeps the F_p-coordinates of its elements,
an element is ``sum(v_i x^i)`` and its *key* is ``sum(v_i p^i)``.  Keys
are only used to build the tables and to talk about F_p-linear structure.

Fields are immutable and cached, ``build_field(3, 2) is build_field(3, 2)``.
"""

import math
import logging
import functools
import dataclasses

import numpy as np

from . import polys
from . import config
from . import errors

logger = logging.getLogger(__name__)

ZERO = 0
ONE = 1


@dataclasses.dataclass(frozen=True)
class FieldSpec:
    """Characteristic, degree and the canonical primitive polynomial,
    coefficients lowest degree first."""

    p: int
    m: int
    poly: tuple

    @property
    def order(self):
        return self.p ** self.m


class Field:
    """F_{p^m} with Zech-logarithm addition.

    Scalar operations take and return element codes.  The ``*_many``
    variants work on numpy arrays of codes and are used wherever whole sets
    are shifted or scaled.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.m = spec.m
        self.order = spec.order
        self.n = self.order - 1

        p, m, n = self.p, self.m, self.n
        digits = _power_digits(spec.poly, p, m, n)
        keys = digits @ (p ** np.arange(m, dtype=np.int64))

        code_of_key = np.zeros(self.order, dtype=np.int64)
        code_of_key[keys] = np.arange(1, n + 1, dtype=np.int64)

        # 1 + g^t only changes the constant coefficient.
        plus_one = np.where(keys % p == p - 1, keys - (p - 1), keys + 1)
        zech = code_of_key[plus_one]

        self._digits = digits
        self._keys = keys
        self._code_of_key = code_of_key
        self._zech = zech
        self._zech_list = zech.tolist()
        self._half = n // 2 if p != 2 else 0

        assert len(set(self._keys.tolist())) == n, 'x is not primitive'

    def __reduce__(self):
        return _build, (self.p, self.m)

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return '<Field F_{}: {}>'.format(self.order, polys.to_string(self.spec.poly))

    def __len__(self):
        return self.order

    @property
    def g(self):
        """Code of the canonical generator."""
        return self.element(1)

    def codes(self):
        return range(self.order)

    def check(self, a):
        if not 0 <= a < self.order:
            raise errors.CodeOutOfRange(
                'code {} is not an element of F_{}'.format(a, self.order)
            )
        return a

    def element(self, t):
        """Code of g^t, any integer exponent."""
        return t % self.n + 1

    def log(self, a):
        """Discrete logarithm of a nonzero element, in ``[0, n)``."""
        self.check(a)
        if a == ZERO:
            raise errors.DivisionByZero('zero has no discrete logarithm')
        return a - 1

    def from_int(self, k):
        """The prime-field element k * 1."""
        return int(self._code_of_key[k % self.p])

    def to_vector(self, a):
        """F_p-coordinates of ``a``, lowest power of x first."""
        self.check(a)
        if a == ZERO:
            return [0] * self.m
        return self._digits[a - 1].tolist()

    def from_vector(self, vector):
        if len(vector) != self.m:
            raise errors.CodeOutOfRange(
                'vector {!r} has not {} coordinates'.format(vector, self.m)
            )
        key = sum((c % self.p) * self.p ** i for i, c in enumerate(vector))
        return int(self._code_of_key[key])

    def add(self, a, b):
        self.check(a)
        self.check(b)
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        z = self._zech_list[(b - a) % self.n]
        if z == ZERO:
            return ZERO
        return (a + z - 2) % self.n + 1

    def neg(self, a):
        self.check(a)
        if a == ZERO:
            return ZERO
        return (a - 1 + self._half) % self.n + 1

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        self.check(a)
        self.check(b)
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b - 2) % self.n + 1

    def inv(self, a):
        self.check(a)
        if a == ZERO:
            raise errors.DivisionByZero('zero is not invertible')
        return (1 - a) % self.n + 1

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e):
        self.check(a)
        if a == ZERO:
            if e < 0:
                raise errors.DivisionByZero('negative power of zero')
            return ONE if e == 0 else ZERO
        return ((a - 1) * e) % self.n + 1

    def frobenius(self, a, i=1):
        """a^(p^i)."""
        self.check(a)
        if i < 0:
            raise errors.CodeOutOfRange('frobenius iterate must be >= 0')
        if a == ZERO:
            return ZERO
        return ((a - 1) * pow(self.p, i, self.n)) % self.n + 1

    def add_many(self, a, b):
        """Elementwise sums of two code arrays (or an array and a code)."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64),
                                   np.asarray(b, dtype=np.int64))
        out = np.where(a == ZERO, b, a)
        both = (a != ZERO) & (b != ZERO)
        if both.any():
            ta, tb = a[both], b[both]
            z = self._zech[(tb - ta) % self.n]
            out[both] = np.where(z == ZERO, ZERO, (ta + z - 2) % self.n + 1)
        return out

    def neg_many(self, a):
        a = np.asarray(a, dtype=np.int64)
        return np.where(a == ZERO, ZERO, (a - 1 + self._half) % self.n + 1)

    def mul_many(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64),
                                   np.asarray(b, dtype=np.int64))
        return np.where((a == ZERO) | (b == ZERO), ZERO,
                        (a + b - 2) % self.n + 1)

    def inv_many(self, a):
        a = np.asarray(a, dtype=np.int64)
        if (a == ZERO).any():
            raise errors.DivisionByZero('zero is not invertible')
        return (1 - a) % self.n + 1

    def summary(self):
        return {'p': self.p, 'm': self.m,
                'poly': list(self.spec.poly), 'order': self.order}

    def to_json(self):
        return self.summary()

    @classmethod
    def from_json(cls, data):
        field = build_field(data['p'], data['m'])
        if list(field.spec.poly) != list(data['poly']):
            raise errors.FieldError(
                'polynomial {} is not the canonical one'.format(data['poly'])
            )
        return field


def _power_digits(poly, p, m, n):
    """Coordinates of g^0 .. g^(n-1), one row per power.

    Multiplication by x is the companion matrix ``c``; rows are produced by
    doubling: powers [0, 2k) are powers [0, k) times x^k.
    """
    c = np.zeros((m, m), dtype=np.int64)
    for i in range(m - 1):
        c[i, i + 1] = 1
    c[m - 1, :] = [(-coef) % p for coef in poly[:m]]

    rows = np.zeros((1, m), dtype=np.int64)
    rows[0, 0] = 1
    step = c
    while len(rows) < n:
        rows = np.concatenate((rows, rows @ step % p))
        step = step @ step % p
    return rows[:n]


@functools.lru_cache(maxsize=None)
def _build(p, m):
    poly = polys.canonical_polynomial(p, m)
    field = Field(FieldSpec(p, m, poly))
    logger.debug('built F_%d with %s', field.order, polys.to_string(poly))
    return field


def build_field(p, m, *, tower=1, settings=None):
    """Builds F_{p^m}.

    ``tower`` is the degree of the largest extension the caller is going to
    build on top of this field; the size cap applies to p^(m * tower).
    """
    if settings is None:
        settings = config.get_settings()
    if m < 1:
        raise errors.DegreeZero('extension degree must be >= 1, got {}'.format(m))
    if not polys.is_prime(p):
        raise errors.NonPrimeP('{} is not a prime'.format(p))
    if p ** (m * tower) > settings.max_field_size:
        raise errors.SizeCapExceeded(
            'F_{}^{} exceeds the cap of 2^{} elements'.format(
                p, m * tower, settings.max_field_bits)
        )
    return _build(p, m)


def field_of_order(r, *, tower=1, settings=None):
    pm = polys.prime_power(r)
    if pm is None:
        raise errors.NotPrimePower('{} is not a prime power'.format(r))
    return build_field(*pm, tower=tower, settings=settings)


def base_order(field):
    """q for a field of order q^2."""
    if field.m % 2:
        raise errors.NotSquareOrder(
            'F_{} is not a quadratic extension'.format(field.order)
        )
    return field.p ** (field.m // 2)


def add(field, a, b):
    return field.add(a, b)


def mul(field, a, b):
    return field.mul(a, b)


def inv(field, a):
    return field.inv(a)


def frobenius(field, a, i=1):
    return field.frobenius(a, i)


@dataclasses.dataclass(frozen=True)
class TowerMap:
    """Embedding of F_{p^s} (canonical polynomial) into F_{p^m}.

    Exponent t of the small field's generator goes to ``t * scale * twist``.
    ``scale`` alone lands in the right subfield; ``twist`` picks the power of
    that subgroup generator which is a root of the small field's polynomial.
    """

    big: Field
    small: Field
    small_degree: int
    scale: int
    twist: int

    def embed(self, a):
        self.small.check(a)
        if a == ZERO:
            return ZERO
        return ((a - 1) * self.scale * self.twist) % self.big.n + 1

    def embed_many(self, a):
        a = np.asarray(a, dtype=np.int64)
        return np.where(a == ZERO, ZERO,
                        ((a - 1) * self.scale * self.twist) % self.big.n + 1)

    def __contains__(self, a):
        self.big.check(a)
        return a == ZERO or (a - 1) % self.scale == 0

    def restrict(self, a):
        """Inverse of `embed` on the image."""
        if a not in self:
            raise errors.DegreeNotDividing(
                'code {} is not in the subfield F_{}'.format(a, self.small.order)
            )
        if a == ZERO:
            return ZERO
        untwist = pow(self.twist, -1, self.small.n) if self.small.n > 1 else 0
        return ((a - 1) // self.scale * untwist) % self.small.n + 1

    def image(self):
        """Sorted codes of the embedded subfield."""
        return [ZERO] + list(range(1, self.big.order, self.scale))


def _poly_at(field, poly, a):
    acc = ZERO
    for coef in reversed(poly):
        acc = field.add(field.mul(acc, a), field.from_int(coef))
    return acc


def subfield_embed(big, s):
    """The embedding of the canonical F_{p^s} into ``big``."""
    if s < 1 or big.m % s:
        raise errors.DegreeNotDividing(
            'F_{}^{} has no subfield of degree {}'.format(big.p, big.m, s)
        )
    small = _build(big.p, s)
    scale = big.n // small.n
    for twist in range(1, small.n + 1):
        if math.gcd(twist, small.n) != 1:
            continue
        root = big.element(scale * twist)
        if _poly_at(big, small.spec.poly, root) == ZERO:
            return TowerMap(big, small, s, scale, twist)
    raise AssertionError('no root of {} in {}'.format(small.spec.poly, big))
