"""
paleyclique.cayley
~~~~~~~~~~~~~~~~~~

Cayley graphs Cay(F; S) and exact clique search.

Vertices are element codes, row v of the adjacency is the bitset of
``v + S``.  Clique search is branch and bound over bitset candidate sets
with greedy colouring bounds (Tomita's MCQ scheme): candidates are
coloured in ascending code order, expanded from the highest colour down,
and a branch is cut as soon as the colour number can't reach the target.

Two symmetries of every Cayley graph over a field are used:

    * translations x -> x + b, so every clique can be moved to contain 0,
    * multiplications x -> cx for c in the multiplier group
      M = {c : cS = S}, which fix 0 and permute the neighbours of 0.

A clique through 0 with another vertex s is therefore the image under M
of a clique through 0 and the representative of the M-orbit of s.  For
generalized Paley graphs M = S, every search is rooted at the edge {0, 1}.
"""

import time
import logging
import dataclasses
import concurrent.futures

import numpy as np

from . import gf
from . import errors
from . import mulset

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CliqueResult:
    """Clique number (or enumeration target) with witnesses.

    ``exhaustive`` is set when ``witnesses`` is the complete list.
    """

    omega: int
    witnesses: tuple
    exhaustive: bool
    elapsed_ms: int = 0

    def to_json(self):
        return {'omega': self.omega,
                'exhaustive': self.exhaustive,
                'witnesses': [list(w) for w in self.witnesses],
                'elapsed_ms': self.elapsed_ms}

    @classmethod
    def from_json(cls, data):
        return cls(omega=data['omega'],
                   witnesses=tuple(tuple(w) for w in data['witnesses']),
                   exhaustive=data['exhaustive'],
                   elapsed_ms=data.get('elapsed_ms', 0))


class CayleyGraph:
    """Cay(field; conn), immutable after `build_graph`."""

    def __init__(self, field, conn, rows, name=None):
        self.field = field
        self.conn = conn
        self.rows = rows
        self.name = name or 'Cay(F_{};S)'.format(field.order)
        self.multipliers = mulset.multiplier_group(conn)

    def __repr__(self):
        return '<CayleyGraph {}: degree {}>'.format(self.name, self.degree)

    @property
    def order(self):
        return self.field.order

    @property
    def degree(self):
        return len(self.conn)

    def adjacent(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def orbit_representatives(self):
        """Least code of every M-orbit on S, ascending."""
        reps = []
        covered = mulset.EltSet(self.field)
        for s in self.conn:
            if s not in covered:
                reps.append(s)
                covered |= mulset.dilate(self.multipliers, s)
        return reps

    def is_arc_transitive(self):
        return len(self.orbit_representatives()) <= 1

    def _symmetric_multipliers(self):
        """True when M is larger than {1, -1}."""
        return len(self.multipliers) > (2 if self.field.p != 2 else 1)


def build_graph(field, conn):
    if conn.field != field:
        raise errors.FieldMismatch(
            'connection set lives in F_{}, not F_{}'.format(
                conn.field.order, field.order)
        )
    if conn.contains_zero:
        raise errors.ZeroInConnectionSet('0 is in the connection set')
    if mulset.negate_set(conn) != conn:
        raise errors.NotSymmetric('connection set is not closed under negation')

    r = field.order
    adjacency = np.zeros((r, r), dtype=bool)
    if conn:
        vertices = np.arange(r, dtype=np.int64)
        targets = field.add_many(vertices[:, None], conn.array()[None, :])
        adjacency[vertices[:, None], targets] = True
    packed = np.packbits(adjacency, axis=1, bitorder='little')
    rows = tuple(int.from_bytes(row.tobytes(), 'little') for row in packed)
    return CayleyGraph(field, conn, rows)


def gp_graph(field, d):
    """The generalized Paley graph GP(r, d), S = (F_r^*)^d."""
    r = field.order
    if d < 2 or (r - 1) % d:
        raise errors.IndexNotDividing(
            'GP({}, {}) needs d > 1 dividing {}'.format(r, d, r - 1)
        )
    if r % 2 and (r - 1) % (2 * d):
        raise errors.BadResidueCondition(
            '{} is not 1 modulo {}, -1 is not a {}-th power'.format(r, 2 * d, d)
        )
    graph = build_graph(field, mulset.subgroup(field, d))
    graph.name = 'GP({},{})'.format(r, d)
    return graph


def is_clique(graph, a):
    if a.field != graph.field:
        raise errors.FieldMismatch('vertex set is not in the graph field')
    return mulset.difference_set(a) <= graph.conn.with_zero()


def _colour_classes(rows, cand):
    """Greedy sequential colouring of ``cand`` in ascending vertex order.

    Returns the vertices and their colour numbers, the latter
    non-decreasing; the first i vertices span at most colours[i-1]
    colour classes, so no clique among them is larger.
    """
    order = []
    colours = []
    colour = 0
    uncoloured = cand
    while uncoloured:
        colour += 1
        free = uncoloured
        while free:
            low = free & -free
            v = low.bit_length() - 1
            uncoloured ^= low
            free ^= low
            free &= ~rows[v]
            order.append(v)
            colours.append(colour)
    return order, colours


class _MaxSearch:

    def __init__(self, rows, best_size=0):
        self.rows = rows
        self.best_size = best_size
        self.best = None
        self.nodes = 0

    def expand(self, clique, cand):
        self.nodes += 1
        rows = self.rows
        order, colours = _colour_classes(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + colours[i] <= self.best_size:
                return
            v = order[i]
            clique.append(v)
            new = cand & rows[v]
            if new:
                self.expand(clique, new)
            elif len(clique) > self.best_size:
                self.best_size = len(clique)
                self.best = tuple(sorted(clique))
            clique.pop()
            cand &= ~(1 << v)


def _enumerate(rows, clique, cand, size, out):
    need = size - len(clique)
    if need == 0:
        out.append(tuple(sorted(clique)))
        return
    order, colours = _colour_classes(rows, cand)
    for i in range(len(order) - 1, -1, -1):
        if colours[i] < need:
            return
        v = order[i]
        clique.append(v)
        _enumerate(rows, clique, cand & rows[v], size, out)
        clique.pop()
        cand &= ~(1 << v)


def _top_level_tasks(rows, clique, cand, target):
    """Splits the root of the search into independent branches, same order
    and same colour cut-off as the sequential search."""
    tasks = []
    order, colours = _colour_classes(rows, cand)
    for i in range(len(order) - 1, -1, -1):
        if len(clique) + colours[i] < target:
            break
        v = order[i]
        tasks.append((clique + [v], cand & rows[v]))
        cand &= ~(1 << v)
    return tasks


def _max_task(args):
    rows, clique, cand = args
    search = _MaxSearch(rows)
    if cand:
        search.expand(list(clique), cand)
    else:
        search.best_size, search.best = len(clique), tuple(sorted(clique))
    return search.best_size, search.best


def _enumerate_task(args):
    rows, clique, cand, size = args
    out = []
    _enumerate(rows, list(clique), cand, size, out)
    return out


def parallel_map(fn, tasks, jobs):
    """``map`` over a process pool of ``jobs`` workers, results in input
    order."""
    if jobs <= 1 or len(tasks) <= 1:
        return list(map(fn, tasks))
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def _max_clique(rows, root, cand, jobs):
    if not cand:
        return len(root), tuple(sorted(root))
    if jobs <= 1:
        search = _MaxSearch(rows)
        search.expand(list(root), cand)
        logger.debug('max clique %d after %d nodes', search.best_size, search.nodes)
        return search.best_size, search.best
    tasks = _top_level_tasks(rows, list(root), cand, len(root) + 1)
    results = parallel_map(_max_task, [(rows, c, p) for c, p in tasks], jobs)
    # First branch reaching the maximum, as the sequential search reports.
    best_size = max(size for size, _ in results)
    witness = next(w for size, w in results if size == best_size)
    return best_size, witness


def _enumerate_from(rows, root, cand, size, jobs):
    if len(root) >= size:
        return [tuple(sorted(root))] if len(root) == size else []
    tasks = _top_level_tasks(rows, list(root), cand, size)
    chunks = parallel_map(_enumerate_task, [(rows, c, p, size) for c, p in tasks], jobs)
    return [clique for chunk in chunks for clique in chunk]


def _elapsed_ms(start):
    return int((time.perf_counter() - start) * 1000)


def translate_clique(field, clique, b):
    return tuple(sorted(field.add_many(np.asarray(clique, dtype=np.int64), b).tolist()))


def _all_translates(field, cliques):
    found = set()
    for clique in cliques:
        for b in field.codes():
            found.add(translate_clique(field, clique, b))
    return sorted(found)


def clique_number(graph, *, exhaustive=False, jobs=1):
    """Exact clique number.

    With ``exhaustive`` every maximum clique is listed, otherwise one
    witness containing 0.
    """
    start = time.perf_counter()
    rows = graph.rows
    reps = graph.orbit_representatives()
    if not reps:
        root, cand = [gf.ZERO], 0
    elif len(reps) == 1:
        root, cand = [gf.ZERO, reps[0]], rows[gf.ZERO] & rows[reps[0]]
    else:
        root, cand = [gf.ZERO], rows[gf.ZERO]
    omega, witness = _max_clique(rows, root, cand, jobs)
    logger.debug('omega(%s) = %d', graph.name, omega)

    if not exhaustive:
        return CliqueResult(omega, (witness,), False, _elapsed_ms(start))
    through_zero = cliques_through(
        graph, mulset.EltSet.from_codes(graph.field, [gf.ZERO]), omega, jobs=jobs
    )
    witnesses = _all_translates(graph.field, through_zero.witnesses)
    return CliqueResult(omega, tuple(witnesses), True, _elapsed_ms(start))


def cliques_through(graph, anchors, size, *, jobs=1, use_symmetry=True):
    """All cliques of exactly ``size`` vertices containing ``anchors``,
    sorted lexicographically."""
    start = time.perf_counter()
    if anchors.field != graph.field:
        raise errors.FieldMismatch('anchors are not in the graph field')
    if not is_clique(graph, anchors):
        raise errors.AnchorsNotClique('{!r} is not a clique'.format(anchors))
    if size < len(anchors):
        raise errors.GraphError(
            'size {} is smaller than the {} anchors'.format(size, len(anchors))
        )

    rows = graph.rows
    if (use_symmetry and anchors.codes() == [gf.ZERO] and size >= 2 and
            graph._symmetric_multipliers()):
        found = set()
        multipliers = graph.multipliers.array()
        for rep in graph.orbit_representatives():
            root = [gf.ZERO, rep]
            for clique in _enumerate_from(rows, root, rows[gf.ZERO] & rows[rep],
                                          size, jobs):
                clique = np.asarray(clique, dtype=np.int64)
                for c in multipliers:
                    found.add(tuple(sorted(graph.field.mul_many(clique, c).tolist())))
        witnesses = sorted(found)
    else:
        root = anchors.codes()
        cand = (1 << graph.order) - 1
        for v in root:
            cand &= rows[v]
        witnesses = sorted(_enumerate_from(rows, root, cand, size, jobs))

    omega = size if witnesses else 0
    logger.debug('%d cliques of size %d through %s in %s',
                 len(witnesses), size, anchors.codes(), graph.name)
    return CliqueResult(omega, tuple(witnesses), True, _elapsed_ms(start))
