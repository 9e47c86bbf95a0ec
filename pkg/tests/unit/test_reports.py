import json

import pytest

import paleyclique.reports as pr
import paleyclique.errors as pe


def sample_report(**fields):
    values = dict(theorem='thm-main', q=5, d=2, set='squares',
                  hypothesis={'branch_a': False, 'branch_b': True},
                  quantities={'size_s': 12, 'threshold_a': '11'},
                  witnesses=[(0, 1, 7, 12, 18)], omega=5)
    values.update(fields)
    return pr.VerificationReport(**values)


def test_csv_single_row():
    text = pr.emit([sample_report()], 'csv')
    header, row, tail = text.split('\n')
    assert header == ','.join(pr.CSV_COLUMNS)
    assert row == 'thm-main,5,2,,squares,false,true,PASS,5,1,0,'
    assert tail == ''


def test_emit_rejects():
    with pytest.raises(pe.IoError):
        pr.emit([], 'json')
    with pytest.raises(pe.UsageError):
        pr.emit([sample_report()], 'yaml')


def test_json_round_trip():
    reports = [sample_report(), sample_report(q=7, verdict='INFO', reason='hypotheses-unmet')]
    text = pr.emit(reports, 'json')
    parsed = pr.parse(text)
    assert parsed == reports
    assert parsed[1].verdict is pr.Verdict.INFO
    assert pr.emit(parsed, 'json') == text


def test_json_layout():
    data = json.loads(pr.emit([sample_report()], 'json'))
    assert list(data[0]) == ['theorem', 'q', 'verdict', 'd', 'k', 'set', 'hypothesis',
                             'quantities', 'witnesses', 'omega', 'seed', 'elapsed_ms', 'reason']
    assert data[0]['verdict'] == 'PASS'
    assert data[0]['witnesses'] == [[0, 1, 7, 12, 18]]


def test_parse_rejects():
    with pytest.raises(pe.IoError):
        pr.parse('not json')
    with pytest.raises(pe.IoError):
        pr.parse('[{"theorem": "vlm", "q": 3, "colour": "red"}]')


def test_skipped_rows():
    reports = [
        sample_report(),
        pr.skipped('thm-gp', 6, 'not-prime-power', d=5, k=0),
        pr.skipped('thm-gp', 5, 'd does not divide q^2 - 1', d=7, k=0),
    ]
    rows = pr.emit(reports, 'csv').splitlines()[1:]
    assert [r.split(',')[7] for r in rows] == ['PASS', 'SKIP', 'SKIP']
    assert rows[1].endswith(',not-prime-power')
    assert reports[2].key == ('thm-gp', 5, 7, 0, '')


def test_fail_marks_report():
    report = sample_report()
    report.fail('clique through 0, 1 other than the subfield')
    assert report.verdict is pr.Verdict.FAIL
    assert report.csv_row()[-1] == 'clique through 0, 1 other than the subfield'


def test_output_is_byte_stable():
    first = pr.emit([sample_report(), sample_report(q=3)], 'json')
    second = pr.emit([sample_report(), sample_report(q=3)], 'json')
    assert first == second
    assert first.endswith(']\n')


def test_write(tmp_path):
    target = tmp_path / 'out.csv'
    pr.write('a,b\n', str(target))
    assert target.read_text(encoding='utf-8') == 'a,b\n'

    with pytest.raises(pe.IoError):
        pr.write('a,b\n', str(tmp_path / 'missing' / 'out.csv'))
