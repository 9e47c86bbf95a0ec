"""
paleyclique.geometry
~~~~~~~~~~~~~~~~~~~~

Point sets of the affine plane AG(2, r) and the directions they determine.

A direction is a slope (y' - y) / (x' - x) in F_r, or the vertical
direction, which is kept as the separate ``has_infinity`` flag and never
as an element code.
"""

import logging
import itertools
import dataclasses

import numpy as np

from . import gf
from . import polys
from . import errors
from . import mulset

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class PointSet:
    """Duplicate-free points of AG(2, r), in insertion order."""

    field: gf.Field
    points: tuple

    def __post_init__(self):
        points = tuple((int(x), int(y)) for x, y in self.points)
        for x, y in points:
            self.field.check(x)
            self.field.check(y)
        if len(set(points)) != len(points):
            raise errors.DuplicatePoint('point set has repeated points')
        object.__setattr__(self, 'points', points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, point):
        return tuple(point) in self.points

    def __iter__(self):
        return iter(self.points)

    def coordinates(self):
        xs = np.array([x for x, _ in self.points], dtype=np.int64)
        ys = np.array([y for _, y in self.points], dtype=np.int64)
        return xs, ys

    def translate(self, dx, dy):
        xs, ys = self.coordinates()
        return PointSet(self.field, tuple(zip(self.field.add_many(xs, dx).tolist(),
                                              self.field.add_many(ys, dy).tolist())))

    def to_json(self):
        return {'r': self.field.order, 'points': [list(pt) for pt in self.points]}

    @classmethod
    def from_json(cls, data):
        field = gf.field_of_order(data['r'])
        return cls(field, tuple(tuple(pt) for pt in data['points']))


@dataclasses.dataclass(frozen=True)
class DirectionSet:

    finite: mulset.EltSet
    has_infinity: bool = False

    def __len__(self):
        return len(self.finite) + int(self.has_infinity)

    def to_json(self):
        return {'slopes': self.finite.codes(), 'infinity': self.has_infinity}

    @classmethod
    def from_json(cls, data, field):
        return cls(mulset.EltSet.from_codes(field, data['slopes']), data['infinity'])


def directions_of(points):
    """All slopes determined by pairs of ``points``."""
    if len(points) < 2:
        raise errors.TooFewPoints('directions need at least two points')
    field = points.field
    xs, ys = points.coordinates()
    i, j = np.triu_indices(len(xs), k=1)
    dx = field.add_many(xs[j], field.neg_many(xs[i]))
    dy = field.add_many(ys[j], field.neg_many(ys[i]))
    vertical = dx == gf.ZERO
    slopes = field.mul_many(dy[~vertical], field.inv_many(dx[~vertical]))
    return DirectionSet(mulset.EltSet.from_codes(field, slopes), bool(vertical.any()))


def grid_of(a):
    """A x A."""
    if not a:
        raise errors.EmptySet('grid of the empty set')
    codes = a.codes()
    return PointSet(a.field, tuple(itertools.product(codes, codes)))


def quadratic_tower(field, settings=None):
    """Embedding of ``field`` = F_r into F_{r^2}."""
    try:
        big = gf.build_field(field.p, 2 * field.m, settings=settings)
    except errors.SizeCapExceeded as exc:
        raise errors.TowerUnavailable(
            'F_{}^2 is not available: {}'.format(field.order, exc)
        ) from exc
    return gf.subfield_embed(big, field.m)


def beta_sequence(tower, count):
    """g, g^2, g^3, ... of the big field, skipping the embedded subfield.

    ``count='all'`` yields every element outside the subfield.
    """
    big = tower.big
    limit = big.n if count == 'all' else count
    betas = []
    for t in range(1, big.n + 1):
        if len(betas) >= limit:
            break
        beta = big.element(t)
        if beta not in tower:
            betas.append(beta)
    return betas


def linearity_check(points, beta=None, samples=1, *, settings=None):
    """True iff W = {x + beta * y : (x, y) in U} is an F_p-subspace of
    F_{r^2} for every sampled beta.

    With ``beta`` given it is checked first and further samples come from
    `beta_sequence`.
    """
    if (gf.ZERO, gf.ZERO) not in points:
        raise errors.OriginMissing('(0, 0) is not in the point set')
    tower = quadratic_tower(points.field, settings)
    if beta is not None:
        tower.big.check(beta)
        if beta in tower:
            raise errors.BetaInBaseField(
                'beta {} lies in F_{}'.format(beta, points.field.order)
            )
        wanted = tower.big.n if samples == 'all' else samples
        betas = [beta] + [b for b in beta_sequence(tower, 'all') if b != beta]
        betas = betas[:max(wanted, 1)]
    else:
        betas = beta_sequence(tower, samples)

    xs, ys = points.coordinates()
    big = tower.big
    ex, ey = tower.embed_many(xs), tower.embed_many(ys)
    for b in betas:
        w = mulset.EltSet.from_codes(big, big.add_many(ex, big.mul_many(ey, b)))
        if not mulset.is_subspace(w):
            logger.debug('W is not a subspace for beta = %d', b)
            return False
    return True


@dataclasses.dataclass(frozen=True)
class RedeiSweep:
    """Outcome of `redei_sweep`; ``violations`` lists non-collinear subsets
    with fewer than (p + 3) / 2 directions."""

    p: int
    size: int
    subsets: int
    collinear: int
    min_directions: int
    violations: tuple

    @property
    def bound(self):
        return (self.p + 3) // 2


def redei_sweep(p, size=None):
    """Direction counts of every ``size``-point subset of AG(2, p), p prime."""
    if not polys.is_prime(p):
        raise errors.NonPrimeP('{} is not a prime'.format(p))
    size = p if size is None else size
    if size < 2:
        raise errors.TooFewPoints('subsets need at least two points')
    field = gf.build_field(p, 1)
    plane = list(itertools.product(field.codes(), field.codes()))
    xs = np.array([x for x, _ in plane], dtype=np.int64)
    ys = np.array([y for _, y in plane], dtype=np.int64)

    # Slope of every ordered pair of plane points, p stands for the vertical.
    dx = field.add_many(xs[None, :], field.neg_many(xs)[:, None])
    dy = field.add_many(ys[None, :], field.neg_many(ys)[:, None])
    vertical = dx == gf.ZERO
    safe_dx = np.where(vertical, gf.ONE, dx)
    slope = np.where(vertical, p, field.mul_many(dy, field.inv_many(safe_dx)))

    subsets = np.array(list(itertools.combinations(range(len(plane)), size)),
                       dtype=np.int64)
    i, j = np.triu_indices(size, k=1)
    per_pair = np.sort(slope[subsets[:, i], subsets[:, j]], axis=1)
    counts = 1 + np.count_nonzero(np.diff(per_pair, axis=1), axis=1)

    collinear = counts == 1
    bound = (p + 3) // 2
    bad = np.flatnonzero(~collinear & (counts < bound))
    violations = tuple(tuple(plane[v] for v in subsets[b]) for b in bad)
    spread = counts[~collinear]
    logger.info('redei sweep p=%d size=%d: %d subsets, %d violations',
                p, size, len(subsets), len(violations))
    return RedeiSweep(p=p, size=size, subsets=len(subsets),
                      collinear=int(collinear.sum()),
                      min_directions=int(spread.min()) if spread.size else 0,
                      violations=violations)
