"""
paleyclique.reports
~~~~~~~~~~~~~~~~~~~

Verification reports and their JSON/CSV renderings.

Output is byte-stable: keys keep declaration order, floats are written by
``json`` and CSV rows end with ``\\n``.
"""

import io
import csv
import json
import enum
import dataclasses

from . import errors


class Verdict(str, enum.Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    SKIP = 'SKIP'
    INFO = 'INFO'


CSV_COLUMNS = ('theorem', 'q', 'd', 'k', 'set', 'branch_a', 'branch_b',
               'verdict', 'omega', 'witness_count', 'elapsed_ms', 'reason')


@dataclasses.dataclass
class VerificationReport:
    """Outcome of one verification job.

    ``hypothesis`` holds the boolean hypothesis branches, ``quantities``
    every computed number worth recording; both must stay JSON-native.
    """

    theorem: str
    q: int
    verdict: Verdict = Verdict.PASS
    d: int = None
    k: int = None
    set: str = None
    hypothesis: dict = dataclasses.field(default_factory=dict)
    quantities: dict = dataclasses.field(default_factory=dict)
    witnesses: list = dataclasses.field(default_factory=list)
    omega: int = None
    seed: int = None
    elapsed_ms: int = 0
    reason: str = None

    def __post_init__(self):
        self.verdict = Verdict(self.verdict)
        self.witnesses = [list(w) for w in self.witnesses]

    @property
    def key(self):
        return (self.theorem, self.q, self.d or 0, self.k or 0, self.set or '')

    def fail(self, reason):
        self.verdict = Verdict.FAIL
        self.reason = reason

    def to_json(self):
        data = dataclasses.asdict(self)
        data['verdict'] = self.verdict.value
        return data

    @classmethod
    def from_json(cls, data):
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise errors.IoError('unknown report keys: {}'.format(sorted(unknown)))
        return cls(**data)

    def csv_row(self):
        def cell(value):
            if value is None:
                return ''
            if isinstance(value, bool):
                return 'true' if value else 'false'
            return str(value)

        values = {
            'theorem': self.theorem, 'q': self.q, 'd': self.d, 'k': self.k,
            'set': self.set,
            'branch_a': self.hypothesis.get('branch_a'),
            'branch_b': self.hypothesis.get('branch_b'),
            'verdict': self.verdict.value, 'omega': self.omega,
            'witness_count': len(self.witnesses),
            'elapsed_ms': self.elapsed_ms, 'reason': self.reason,
        }
        return [cell(values[column]) for column in CSV_COLUMNS]


def skipped(theorem, q, reason, **fields):
    return VerificationReport(theorem=theorem, q=q, verdict=Verdict.SKIP,
                              reason=reason, **fields)


def emit(reports, fmt='json'):
    """Serialises a nonempty list of reports."""
    reports = list(reports)
    if not reports:
        raise errors.IoError('EmptyReportList: nothing to emit')
    if fmt == 'json':
        return json.dumps([r.to_json() for r in reports], indent=2) + '\n'
    if fmt == 'csv':
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for report in reports:
            writer.writerow(report.csv_row())
        return buf.getvalue()
    raise errors.UsageError('unknown report format {!r}'.format(fmt))


def parse(text):
    """Inverse of ``emit(..., 'json')``."""
    try:
        data = json.loads(text)
    except ValueError as exc:
        raise errors.IoError('malformed report stream: {}'.format(exc)) from exc
    return [VerificationReport.from_json(item) for item in data]


def write(text, path=None, stream=None):
    if path is None:
        stream.write(text)
        return
    try:
        with open(path, 'w', encoding='utf-8', newline='') as fp:
            fp.write(text)
    except OSError as exc:
        raise errors.IoError('can not write {}: {}'.format(path, exc)) from exc
