"""
paleyclique.polys
~~~~~~~~~~~~~~~~~

Polynomials over F_p and the integer helpers field construction needs.

Polynomials are lists of coefficients in ``[0, p)``, lowest degree first,
so ``[2, 1, 1]`` is x^2 + x + 2.  The zero polynomial is ``[]``.  The
arithmetic itself is `sympy.polys.galoistools`, which keeps the leading
coefficient first; `_dense` and `_coefficients` convert between the two.
"""

import functools
import itertools

import sympy
from sympy.polys import galoistools as gt
from sympy.polys.domains import ZZ

_X = [ZZ.one, ZZ.zero]


def is_prime(n):
    return bool(sympy.isprime(n))


def prime_factors(n):
    """Distinct prime factors of ``n`` in ascending order."""
    return sorted(int(q) for q in sympy.factorint(n))


def prime_power(n):
    """Returns ``(p, m)`` with ``n == p ** m``, or None."""
    if n < 2:
        return None
    if sympy.isprime(n):
        return int(n), 1
    power = sympy.perfect_power(n)
    if not power:
        return None
    base, exponent = power
    factors = sympy.factorint(base)
    if len(factors) != 1:
        return None
    (p, e), = factors.items()
    return int(p), int(e * exponent)


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _dense(f, p):
    return gt.gf_from_int_poly(list(reversed(trim(f))), p)


def _coefficients(g):
    return [int(c) for c in reversed(g)]


def mulmod(f, g, modulus, p):
    """``f * g`` reduced modulo ``modulus``."""
    product = gt.gf_mul(_dense(f, p), _dense(g, p), p, ZZ)
    return _coefficients(gt.gf_rem(product, _dense(modulus, p), p, ZZ))


def is_irreducible(f, p):
    """Ben-Or's test; constants are not irreducible."""
    dense = _dense(f, p)
    if gt.gf_degree(dense) < 1:
        return False
    return bool(gt.gf_irred_p_ben_or(dense, p, ZZ))


def is_primitive(f, p):
    """True iff ``f`` is monic and the class of x has order p^m - 1 modulo
    ``f``.  That order forces F_p[x]/(f) to be a field, so primitive
    polynomials are irreducible.
    """
    f = trim(f)
    m = len(f) - 1
    if m < 1 or f[-1] != 1 or f[0] == 0:
        return False
    dense = _dense(f, p)
    n = p ** m - 1
    one = [ZZ.one]
    if gt.gf_pow_mod(_X, n, dense, p, ZZ) != one:
        return False
    return all(gt.gf_pow_mod(_X, n // ell, dense, p, ZZ) != one
               for ell in prime_factors(n))


def _monic_candidates(p, m):
    """Monic degree-m polynomials by increasing sum(c_i * p^i) over the
    lower coefficients."""
    for lower in itertools.product(range(p), repeat=m):
        yield list(reversed(lower)) + [1]


@functools.lru_cache(maxsize=None)
def canonical_polynomial(p, m):
    """The least monic primitive polynomial of degree ``m`` over F_p."""
    for f in _monic_candidates(p, m):
        if is_primitive(f, p):
            return tuple(f)
    raise AssertionError('no primitive polynomial of degree {} over F_{}'
                         .format(m, p))


def to_string(f):
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mono = {0: '', 1: 'x'}.get(i, 'x^{}'.format(i))
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append('{}{}'.format(c, mono))
    return ' + '.join(terms) or '0'
