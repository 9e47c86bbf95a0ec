"""
paleyclique.mulset
~~~~~~~~~~~~~~~~~~

Exact algebra of subsets of a finite field.

An `EltSet` is a bitset over element codes: bit 0 is zero, bit ``t + 1``
is g^t.  Shifted down by one, the nonzero part is a bitset over discrete
logarithms, so multiplying a set by g^s is a cyclic rotation by s.  Product
sets are unions of such rotations, one per element of the smaller operand.

Set specifications understood by `parse_set_spec`:

    * ``squares`` - same as ``cosets(2;0)``,
    * ``units`` - the whole multiplicative group, ``cosets(1;0)``,
    * ``subgroup(d)`` - the d-th powers, ``cosets(d;0)``,
    * ``cosets(d;j1,j2,...)`` - union of the cosets g^j H, H = <g^d>,
    * ``explicit:[c1,c2,...]`` - element codes.

"""

import re
import logging
import itertools
import fractions
import dataclasses

import numpy as np

from . import gf
from . import errors

logger = logging.getLogger(__name__)


def _popcount(bits):
    return bin(bits).count('1')


def _bits_from_codes(order, codes):
    codes = np.asarray(codes, dtype=np.int64).ravel()
    if codes.size and (codes.min() < 0 or codes.max() >= order):
        raise errors.CodeOutOfRange(
            'codes out of range for a field of order {}'.format(order)
        )
    present = np.zeros(order, dtype=bool)
    present[codes] = True
    return int.from_bytes(np.packbits(present, bitorder='little').tobytes(),
                          'little')


def _codes_from_bits(bits):
    codes = []
    while bits:
        low = bits & -bits
        codes.append(low.bit_length() - 1)
        bits ^= low
    return codes


def _rotate(mask, shift, n):
    """Cyclic left rotation of an n-bit mask."""
    shift %= n
    if not shift:
        return mask
    full = (1 << n) - 1
    return ((mask << shift) | (mask >> (n - shift))) & full


@dataclasses.dataclass(frozen=True)
class EltSet:
    """A subset of ``field``, immutable."""

    field: gf.Field
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.field.order:
            raise errors.CodeOutOfRange(
                'bitset does not fit F_{}'.format(self.field.order)
            )

    @classmethod
    def from_codes(cls, field, codes):
        return cls(field, _bits_from_codes(field.order, list(codes)))

    @classmethod
    def from_mask(cls, field, mask, zero=False):
        """Set of g^t for the bits t of ``mask``, plus zero if asked."""
        return cls(field, (mask << 1) | int(bool(zero)))

    @classmethod
    def units(cls, field):
        return cls.from_mask(field, (1 << field.n) - 1)

    @classmethod
    def whole(cls, field):
        return cls(field, (1 << field.order) - 1)

    @property
    def mask(self):
        """Bitset of the discrete logarithms of the nonzero elements."""
        return self.bits >> 1

    @property
    def contains_zero(self):
        return bool(self.bits & 1)

    def __len__(self):
        return _popcount(self.bits)

    def __bool__(self):
        return bool(self.bits)

    def __contains__(self, code):
        return 0 <= code < self.field.order and bool(self.bits >> code & 1)

    def __iter__(self):
        return iter(_codes_from_bits(self.bits))

    def codes(self):
        return _codes_from_bits(self.bits)

    def array(self):
        return np.array(_codes_from_bits(self.bits), dtype=np.int64)

    def exponents(self):
        return _codes_from_bits(self.mask)

    def nonzero(self):
        return EltSet(self.field, self.bits & ~1)

    def with_zero(self):
        return EltSet(self.field, self.bits | 1)

    def _other(self, other):
        _same_field(self, other)
        return other.bits

    def __or__(self, other):
        return EltSet(self.field, self.bits | self._other(other))

    def __and__(self, other):
        return EltSet(self.field, self.bits & self._other(other))

    def __sub__(self, other):
        return EltSet(self.field, self.bits & ~self._other(other))

    def __le__(self, other):
        return self.bits & ~self._other(other) == 0

    def issubset(self, other):
        return self <= other

    def __repr__(self):
        return '<EltSet F_{}: {}>'.format(self.field.order, self.codes())

    def to_json(self):
        return {'field': self.field.to_json(), 'codes': self.codes()}

    @classmethod
    def from_json(cls, data):
        return cls.from_codes(gf.Field.from_json(data['field']), data['codes'])


@dataclasses.dataclass(frozen=True)
class CosetSpec:
    """Union of the cosets g^j H over ``js`` where H = <g^d> has index d."""

    d: int
    js: tuple = (0,)


def _same_field(*sets):
    field = sets[0].field
    for other in sets[1:]:
        if other.field != field:
            raise errors.FieldMismatch(
                'F_{} and F_{} sets can not be combined'.format(
                    field.order, other.field.order)
            )
    return field


def _nonzero_operand(*sets):
    for s in sets:
        if s.contains_zero:
            raise errors.ZeroInOperand('{!r} contains zero'.format(s))


def product_set(s, t):
    """ST = {st : s in S, t in T} for S, T inside F^*."""
    field = _same_field(s, t)
    _nonzero_operand(s, t)
    small, large = sorted((s, t), key=len)
    acc = 0
    for shift in small.exponents():
        acc |= _rotate(large.mask, shift, field.n)
    return EltSet.from_mask(field, acc)


def inverse_set(s):
    _nonzero_operand(s)
    n = s.field.n
    mask = 0
    for t in s.exponents():
        mask |= 1 << (-t % n)
    return EltSet.from_mask(s.field, mask)


def power_product(s, plus, minus=0):
    """S^plus (S^-1)^minus, e.g. ``power_product(S, 3, 3)`` is
    SSSS^-1S^-1S^-1."""
    assert plus + minus >= 1
    factors = [s] * plus + [inverse_set(s)] * minus
    acc = factors[0]
    for factor in factors[1:]:
        acc = product_set(acc, factor)
    return acc


def quotient_set(a, b, include_zero=False):
    """{x / y : x in A \\ {0}, y in B \\ {0}}, optionally with 0 added for the
    zero numerators of direction quotients.
    """
    _same_field(a, b)
    result = product_set(a.nonzero(), inverse_set(b.nonzero()))
    return result.with_zero() if include_zero else result


def negate_set(a):
    return EltSet.from_codes(a.field, a.field.neg_many(a.array()))


def translate(a, b):
    """A + b."""
    return EltSet.from_codes(a.field, a.field.add_many(a.array(), b))


def dilate(a, c):
    """cA."""
    field = a.field
    field.check(c)
    if c == gf.ZERO:
        return EltSet(field, 1 if a else 0)
    return EltSet.from_mask(field, _rotate(a.mask, field.log(c), field.n),
                            zero=a.contains_zero)


def sum_set(a, b):
    field = _same_field(a, b)
    if not a or not b:
        return EltSet(field)
    x, y = a.array(), b.array()
    return EltSet.from_codes(field, field.add_many(x[:, None], y[None, :]))


def difference_set(a):
    """A - A."""
    field = a.field
    if not a:
        return EltSet(field)
    x = a.array()
    return EltSet.from_codes(
        field, field.add_many(x[:, None], field.neg_many(x)[None, :])
    )


def coset_union(field, spec):
    n = field.n
    if spec.d < 1 or n % spec.d:
        raise errors.IndexNotDividing(
            'index {} does not divide |F_{}^*| = {}'.format(spec.d, field.order, n)
        )
    h = 0
    for t in range(0, n, spec.d):
        h |= 1 << t
    mask = 0
    for j in spec.js:
        mask |= _rotate(h, j, n)
    return EltSet.from_mask(field, mask)


def subgroup(field, d):
    """(F^*)^d, the subgroup of index d."""
    return coset_union(field, CosetSpec(d, (0,)))


def doubling_constant(s):
    """|SS| / |S| as an exact fraction."""
    _nonzero_operand(s)
    if not s:
        raise errors.EmptySet('doubling constant of the empty set')
    return fractions.Fraction(len(product_set(s, s)), len(s))


def punctured_inverse(a):
    """{a^-1 : a in A \\ {0}} together with 0."""
    if not a.contains_zero:
        raise errors.ZeroNotInSet('{!r} does not contain zero'.format(a))
    return inverse_set(a.nonzero()).with_zero()


def _is_power_of(size, p):
    while size % p == 0:
        size //= p
    return size == 1


def is_subspace(a):
    """Contains 0 and is closed under addition, hence an F_p-subspace."""
    field = a.field
    if not a.contains_zero or not _is_power_of(len(a), field.p):
        return False
    x = a.array()
    member = np.zeros(field.order, dtype=bool)
    member[x] = True
    return bool(member[field.add_many(x[:, None], x[None, :])].all())


def multiplier_group(s):
    """M = {c in F^* : cS = S} as a set; a subgroup of F^*."""
    field = s.field
    n = field.n
    for period in range(1, n + 1):
        if n % period == 0 and _rotate(s.mask, period, n) == s.mask:
            return subgroup(field, period)
    raise AssertionError('rotation by n is the identity')


def subfield(field, s):
    """The unique subfield of order p^s, as a set."""
    return EltSet.from_codes(field, gf.subfield_embed(field, s).image())


def span(field, generators):
    """F_p-span of the given elements."""
    result = EltSet(field, 1)
    scalars = np.array([field.from_int(c) for c in range(field.p)], dtype=np.int64)
    for gen in generators:
        multiples = field.mul_many(scalars, gen)
        result = EltSet.from_codes(
            field, field.add_many(result.array()[:, None], multiples[None, :])
        )
    return result


def subspaces(field, dim):
    """Every F_p-subspace of ``field`` of dimension ``dim``, one per reduced
    row echelon basis."""
    m, p = field.m, field.p
    for pivots in itertools.combinations(range(m), dim):
        free = [(i, j) for i, piv in enumerate(pivots)
                for j in range(piv + 1, m) if j not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * m for _ in range(dim)]
            for i, piv in enumerate(pivots):
                rows[i][piv] = 1
            for (i, j), value in zip(free, values):
                rows[i][j] = value
            yield span(field, [field.from_vector(row) for row in rows])


_COSETS_RE = re.compile(r'^cosets\(\s*(\d+)\s*;\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)$')
_SUBGROUP_RE = re.compile(r'^subgroup\(\s*(\d+)\s*\)$')
_EXPLICIT_RE = re.compile(r'^explicit:\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]$')


def parse_set_spec(field, text):
    """Set described by the mini-grammar in the module docstring."""
    spec = spec_of(text)
    if spec is not None:
        return coset_union(field, spec)
    match = _EXPLICIT_RE.match(text.strip())
    if match:
        body = match.group(1)
        codes = [int(c) for c in body.split(',')] if body else []
        return EltSet.from_codes(field, codes)
    raise errors.BadSetSpec('can not parse set specification {!r}'.format(text))


def spec_of(text):
    """CosetSpec behind a coset-style specification string, or None."""
    text = text.strip()
    if text == 'squares':
        return CosetSpec(2, (0,))
    if text == 'units':
        return CosetSpec(1, (0,))
    match = _SUBGROUP_RE.match(text)
    if match:
        return CosetSpec(int(match.group(1)), (0,))
    match = _COSETS_RE.match(text)
    if match:
        js = tuple(int(j) for j in match.group(2).split(','))
        return CosetSpec(int(match.group(1)), js)
    return None
