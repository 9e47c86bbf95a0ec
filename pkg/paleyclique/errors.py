"""
paleyclique.errors
~~~~~~~~~~~~~~~~~~

Error classes.

Every error has a ``code`` which identifies it in JSON output, errors are
grouped by the module that raises them.

"""


class Error(Exception):
    """Base class for all paleyclique errors."""
    code = None

    def to_dict(self):
        return {'error': self.code, 'message': str(self)}


class FieldError(Error):
    """Field construction or element arithmetic failed."""
    code = 'field-error'


class SetError(Error):
    """An operation on field subsets got operands it can't handle."""
    code = 'set-error'


class GraphError(Error):
    """A Cayley graph or a clique query is malformed."""
    code = 'graph-error'


class GeometryError(Error):
    """A point set or a linearity check is malformed."""
    code = 'geometry-error'


class TheoremError(Error):
    """Preconditions of a theorem checker are not met."""
    code = 'theorem-error'


class CliError(Error):
    """Command line front end errors."""
    code = 'cli-error'


class NonPrimeP(FieldError):
    """The characteristic must be a prime."""
    code = 'non-prime-p'


class DegreeZero(FieldError):
    """The extension degree must be at least 1."""
    code = 'degree-zero'


class SizeCapExceeded(FieldError):
    """The requested field (or the tower above it) exceeds the configured
    maximum number of elements, see ``CAYLEY_MAX_FIELD_BITS``.
    """
    code = 'size-cap-exceeded'


class CodeOutOfRange(FieldError):
    """An element code is not in ``[0, order)``."""
    code = 'code-out-of-range'


class DivisionByZero(FieldError):
    """Zero has no multiplicative inverse."""
    code = 'division-by-zero'


class DegreeNotDividing(FieldError):
    """A subfield of degree s exists only when s divides m."""
    code = 'degree-not-dividing'


class NotPrimePower(FieldError):
    """Field orders are prime powers."""
    code = 'not-prime-power'


class NotSquareOrder(FieldError):
    """The field order is not of the form q**2."""
    code = 'not-square-order'


class ZeroInOperand(SetError):
    """Product and inverse sets live in the multiplicative group."""
    code = 'zero-in-operand'


class ZeroNotInSet(SetError):
    """The punctured inverse is defined for sets containing zero."""
    code = 'zero-not-in-set'


class FieldMismatch(SetError):
    """Operands belong to different fields."""
    code = 'field-mismatch'


class EmptySet(SetError):
    """The operation is undefined on the empty set."""
    code = 'empty-set'


class IndexNotDividing(SetError):
    """A subgroup index must divide the order of the multiplicative group."""
    code = 'index-not-dividing'


class BadSetSpec(SetError):
    """A set specification string could not be parsed."""
    code = 'bad-set-spec'


class ZeroInConnectionSet(GraphError):
    """A connection set must not contain zero."""
    code = 'zero-in-connection-set'


class NotSymmetric(GraphError):
    """A connection set must satisfy S = -S."""
    code = 'not-symmetric'


class BadResidueCondition(GraphError):
    """For odd r, GP(r, d) requires r = 1 (mod 2d) so that -1 is a d-th
    power.
    """
    code = 'bad-residue-condition'


class AnchorsNotClique(GraphError):
    """Clique enumeration anchors must themselves form a clique."""
    code = 'anchors-not-clique'


class TooFewPoints(GeometryError):
    """Directions are determined by at least two points."""
    code = 'too-few-points'


class DuplicatePoint(GeometryError):
    """Point sets are sets, duplicates are rejected."""
    code = 'duplicate-point'


class BetaInBaseField(GeometryError):
    """The linearity witness must lie outside the embedded base field."""
    code = 'beta-in-base-field'


class OriginMissing(GeometryError):
    """The linearity check requires (0, 0) in the point set."""
    code = 'origin-missing'


class TowerUnavailable(GeometryError):
    """The quadratic extension above the plane's field can't be built."""
    code = 'tower-unavailable'


class WrongSize(TheoremError):
    """The set doesn't have the size the statement is about."""
    code = 'wrong-size'


class MissingAnchors(TheoremError):
    """The set must contain both 0 and 1."""
    code = 'missing-anchors'


class PreconditionViolated(TheoremError):
    """A hypothesis of the checked statement does not hold."""
    code = 'precondition-violated'


class NotApplicable(TheoremError):
    """The parameters don't satisfy the theorem's applicability
    conditions.
    """
    code = 'not-applicable'


class BadOrder(TheoremError):
    """A character order must be > 1 and divide |F^*|."""
    code = 'bad-order'


class EvenQ(TheoremError):
    """The Van Lint-MacWilliams statement is about odd q."""
    code = 'even-q'


class UsageError(CliError):
    """Malformed command line or settings."""
    code = 'usage-error'


class IoError(CliError):
    """Reports could not be written."""
    code = 'io-error'
