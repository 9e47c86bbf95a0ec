import math

import numpy as np

import pytest
import hypothesis as h
import hypothesis.strategies as hs

import paleyclique.gf as pg
import paleyclique.mulset as pm
import paleyclique.errors as pe
import paleyclique.reports as pr
import paleyclique.theorems as pt

from . import strategies


def square_field(q):
    return pg.field_of_order(q * q)


def fq_codes(field):
    return tuple(pm.subfield(field, field.m // 2).codes())


def test_hypotheses_for_paley_squares():
    f25 = square_field(5)
    hyp = pt.check_main_hypotheses(f25, pm.subgroup(f25, 2))
    assert hyp.size_six_fold == 12
    assert hyp.threshold_a == 11
    assert not hyp.branch_a_holds
    assert hyp.size_three_fold_fq == 12
    assert hyp.threshold_b == 12
    assert hyp.branch_b_holds
    assert hyp.doubling == 1
    assert not hyp.doubling_branch_holds


def test_hypotheses_for_subgroups():
    f25 = square_field(5)
    hyp = pt.check_main_hypotheses(f25, pm.subgroup(f25, 3))
    assert hyp.size_s == hyp.size_six_fold == 8
    assert hyp.branch_a_holds

    f16 = square_field(4)
    cubes = pt.check_main_hypotheses(f16, pm.subgroup(f16, 3))
    assert cubes.size_six_fold == cubes.size_s == 5
    assert cubes.branch_a_holds and cubes.doubling_branch_holds
    assert cubes.size_three_fold_fq == 15 and not cubes.branch_b_holds


def test_hypotheses_fail_for_all_units():
    f9 = square_field(3)
    hyp = pt.check_main_hypotheses(f9, pm.EltSet.units(f9))
    assert hyp.size_six_fold == hyp.size_three_fold_fq == 8
    assert not hyp.holds
    assert hyp.hypothesis() == {'branch_a': False, 'branch_b': False, 'doubling': False}


def test_hypotheses_reject_bad_sets():
    f9 = square_field(3)
    with pytest.raises(pe.NotSymmetric):
        pt.check_main_hypotheses(f9, pm.EltSet.from_codes(f9, [f9.g]))
    with pytest.raises(pe.ZeroInConnectionSet):
        pt.check_main_hypotheses(f9, pm.EltSet.whole(f9))
    f27 = pg.build_field(3, 3)
    with pytest.raises(pe.NotSquareOrder):
        pt.check_main_hypotheses(f27, pm.EltSet.units(f27))


@pytest.mark.parametrize('q,d', [(5, 2), (9, 5), (5, 3), (5, 6), (7, 4), (7, 8)])
def test_main_conclusion_singles_out_subfield(q, d):
    field = square_field(q)
    report = pt.verify_main_conclusion(field, pm.subgroup(field, d), label='subgroup({})'.format(d))
    assert report.verdict is pr.Verdict.PASS
    assert report.witnesses == [list(fq_codes(field))]
    assert report.quantities['only_subfield']


@pytest.mark.slow
@pytest.mark.parametrize('q,d', [(11, 3), (11, 4), (13, 7)])
def test_main_conclusion_for_larger_fields(q, d):
    field = square_field(q)
    report = pt.verify_main_conclusion(field, pm.subgroup(field, d))
    assert report.verdict is pr.Verdict.PASS
    assert report.witnesses == [list(fq_codes(field))]


def test_main_conclusion_vacuous_without_subfield_clique():
    f16 = square_field(4)
    report = pt.verify_main_conclusion(f16, pm.subgroup(f16, 3))
    assert report.verdict is pr.Verdict.PASS
    assert report.witnesses == []


def test_main_conclusion_unmet_hypotheses_is_info():
    f9 = square_field(3)
    report = pt.verify_main_conclusion(f9, pm.EltSet.units(f9))
    assert report.verdict is pr.Verdict.INFO
    assert report.reason == 'hypotheses-unmet'
    assert len(report.witnesses) == 7
    assert not report.quantities['only_subfield']


def test_subfield_criterion_examples():
    f25 = square_field(5)
    verdict = pt.subfield_criterion(f25, pm.subfield(f25, 1))
    assert verdict.both_subspaces and verdict.is_subfield and verdict.holds

    f16 = square_field(4)
    assert pt.subfield_criterion(f16, pm.subfield(f16, 2)).is_subfield

    g = f16.g
    a = pm.EltSet.from_codes(f16, [pg.ZERO, pg.ONE, g, f16.add(g, pg.ONE)])
    verdict = pt.subfield_criterion(f16, a)
    assert pm.is_subspace(a)
    assert not verdict.both_subspaces
    assert verdict.holds


def test_subfield_criterion_rejects():
    f25 = square_field(5)
    with pytest.raises(pe.WrongSize):
        pt.subfield_criterion(f25, pm.EltSet.from_codes(f25, [0, 1]))
    with pytest.raises(pe.MissingAnchors):
        pt.subfield_criterion(f25, pm.dilate(pm.subfield(f25, 1), f25.g))


def test_claim_x2_property():
    f25 = square_field(5)
    assert pt.claim_x2_property(f25, pm.subfield(f25, 1))

    f4 = square_field(2)
    assert pt.claim_x2_property(f4, pm.EltSet.from_codes(f4, [0, 1]))

    f9 = square_field(3)
    with pytest.raises(pe.PreconditionViolated):
        pt.claim_x2_property(f9, pm.EltSet.from_codes(f9, [1]))
    with pytest.raises(pe.PreconditionViolated):
        pt.claim_x2_property(f9, pm.EltSet.from_codes(f9, [0, 1, f9.g]))


@pytest.mark.parametrize('q,d,k,case', [
    (5, 6, 0, 1), (3, 2, 0, 1), (4, 5, 0, 1), (7, 8, 1, 1),
    (4, 3, 0, 2), (5, 4, 0, 2), (7, 3, 0, 2), (8, 7, 0, 2), (9, 8, 0, 2),
    (5, 3, 1, None), (4, 15, 0, None),
])
def test_gp_case_classification(q, d, k, case):
    assert pt.GpCaseInput(q, d, k).case == case


def test_gp_case_input_properties():
    inp = pt.GpCaseInput(5, 6, 0)
    assert inp.d_prime == 6
    assert inp.divides_q_plus_1
    assert inp.label == 'cosets(6;0)'
    assert pt.GpCaseInput(7, 8, 1).label == 'cosets(8;0,1)'

    near = pt.GpCaseInput(4, 15, 0)
    assert near.near_threshold
    assert near.unmet() == ['q^2 - 1 >= 2d']
    assert pt.GpCaseInput(5, 3, 1).unmet() == ['d >= 6k + 2']
    assert pt.GpCaseInput(5, 4, 0).unmet() == []


@pytest.mark.parametrize('args,error', [
    ((6, 5, 0), pe.NotPrimePower),
    ((5, 7, 0), pe.NotApplicable),
    ((5, 1, 0), pe.NotApplicable),
    ((5, 6, 6), pe.NotApplicable),
])
def test_gp_case_input_rejects(args, error):
    with pytest.raises(error):
        pt.GpCaseInput(*args)


def test_gp_theorem_case_one():
    report = pt.verify_gp_theorem(pt.GpCaseInput(5, 6, 0))
    assert report.verdict is pr.Verdict.PASS
    assert report.omega == 5
    assert report.quantities['max_cliques'] == 5
    f25 = square_field(5)
    fq = pm.subfield(f25, 1)
    expected = sorted({tuple(pm.translate(fq, b).codes()) for b in f25.codes()})
    assert sorted(tuple(w) for w in report.witnesses) == expected
    checks = report.quantities['checks']
    assert all(checks.values())
    assert report.quantities['expected_three_fold_fq'] == 4


@pytest.mark.parametrize('q,d', [(4, 3), (5, 4), (7, 3), (8, 7), (9, 8)])
def test_gp_theorem_case_two(q, d):
    report = pt.verify_gp_theorem(pt.GpCaseInput(q, d, 0))
    assert report.verdict is pr.Verdict.PASS
    assert report.hypothesis['case2']
    assert report.omega <= q - 1
    assert report.quantities['checks']['fq_not_in_shift']


def test_gp_theorem_rejects_asymmetric_cosets():
    with pytest.raises(pe.NotSymmetric):
        pt.verify_gp_theorem(pt.GpCaseInput(5, 8, 0))


def test_gp_theorem_outside_both_cases():
    report = pt.verify_gp_theorem(pt.GpCaseInput(5, 3, 1))
    assert report.verdict is pr.Verdict.INFO
    assert report.reason == 'unmet: d >= 6k + 2'
    assert report.omega >= 1


@pytest.mark.parametrize('q,d,k', [
    (3, 2, 0), (3, 4, 0), (4, 5, 0), (5, 2, 0), (5, 3, 0), (7, 4, 0), (7, 8, 0), (7, 8, 1),
])
def test_gp_theorem_case_one_grid(q, d, k):
    inp = pt.GpCaseInput(q, d, k)
    report = pt.verify_gp_theorem(inp)
    assert report.verdict is pr.Verdict.PASS
    assert report.omega == q
    size_h = (q * q - 1) // d
    assert report.quantities['size_three_fold_fq'] == (3 * k + 1) * size_h
    assert report.quantities['max_cliques'] == q * (k + 1) * size_h // (q - 1)


@pytest.mark.slow
@pytest.mark.parametrize('q,d,k', [(8, 3, 0), (8, 9, 0), (8, 9, 1), (9, 2, 0), (9, 5, 0), (9, 10, 0), (9, 10, 1)])
def test_gp_theorem_case_one_grid_larger(q, d, k):
    report = pt.verify_gp_theorem(pt.GpCaseInput(q, d, k))
    assert report.verdict is pr.Verdict.PASS
    assert report.omega == q


def test_gp_shift_records():
    report = pt.verify_gp_theorem(pt.GpCaseInput(7, 8, 1))
    shifts = report.quantities['shifts']
    assert [sh['ell'] for sh in shifts] == [0, 1]
    six = report.quantities['size_six_fold']
    assert all(sh['size_six_fold'] == six for sh in shifts)
    assert report.quantities['fq_coset_sizes'] == [6]


def test_character_margin_examples():
    f25 = square_field(5)
    h_ = pm.subgroup(f25, 6)
    margin = pt.character_margin(f25, h_, 6)
    assert margin.margin == pytest.approx(1.0, abs=pt.MARGIN_TOLERANCE)
    assert margin.residues == (0,)
    assert margin.certifies(1.0)

    two = pm.coset_union(f25, pm.CosetSpec(6, (0, 1)))
    margin = pt.character_margin(f25, two, 6)
    assert margin.margin == pytest.approx(math.cos(math.pi / 6), abs=pt.MARGIN_TOLERANCE)
    assert not margin.certifies(0.9)


@pytest.mark.parametrize('q,d', [(5, 2), (5, 3), (5, 6), (7, 2), (7, 4), (7, 8)])
def test_subgroup_margin_is_one(q, d):
    field = square_field(q)
    margin = pt.character_margin(field, pm.subgroup(field, d), d)
    assert margin.margin == pytest.approx(1.0, abs=pt.MARGIN_TOLERANCE)
    assert margin.average == pytest.approx(1.0, abs=pt.MARGIN_TOLERANCE)


@pytest.mark.parametrize('q,m', [(5, 2), (5, 3), (7, 2), (7, 3)])
def test_full_group_margin_is_zero(q, m):
    field = square_field(q)
    margin = pt.character_margin(field, pm.EltSet.units(field), m)
    assert margin.margin == 0.0
    assert margin.average == pytest.approx(0.0, abs=pt.MARGIN_TOLERANCE)


@h.given(hs.data())
def test_margin_is_dilation_invariant(data):
    field = data.draw(strategies.square_fields)
    s = data.draw(strategies.unit_subsets(field, min_size=1))
    m = data.draw(hs.sampled_from([m for m in range(2, field.n + 1) if field.n % m == 0]))
    c = data.draw(strategies.units(field))
    before = pt.character_margin(field, s, m)
    after = pt.character_margin(field, pm.dilate(s, c), m)
    assert after.margin == pytest.approx(before.margin, abs=pt.MARGIN_TOLERANCE)
    assert before.margin <= before.average + pt.MARGIN_TOLERANCE


def test_character_margin_rejects():
    f25 = square_field(5)
    with pytest.raises(pe.BadOrder):
        pt.character_margin(f25, pm.subgroup(f25, 2), 7)
    with pytest.raises(pe.BadOrder):
        pt.character_margin(f25, pm.subgroup(f25, 2), 1)
    with pytest.raises(pe.ZeroInOperand):
        pt.character_margin(f25, pm.EltSet.whole(f25), 2)
    with pytest.raises(pe.EmptySet):
        pt.character_margin(f25, pm.EltSet(f25), 2)


@pytest.mark.parametrize('q', [3, 5, 7, 9])
def test_vlm(q):
    report = pt.vlm_verify(q)
    assert report.verdict is pr.Verdict.PASS
    assert report.omega == q
    assert report.witnesses == [list(fq_codes(square_field(q)))]
    assert report.quantities['max_cliques'] == q * (q + 1) // 2
    assert report.quantities['all_affine_subfields']


@pytest.mark.slow
@pytest.mark.parametrize('q', [11, 13])
def test_vlm_larger(q):
    assert pt.vlm_verify(q).verdict is pr.Verdict.PASS


def test_vlm_rejects():
    with pytest.raises(pe.EvenQ):
        pt.vlm_verify(4)
    with pytest.raises(pe.NotPrimePower):
        pt.vlm_verify(15)


@pytest.mark.parametrize('q', [3, 4, 5])
def test_plunnecke(q):
    report = pt.verify_plunnecke(q, samples=1000, seed=12345)
    assert report.verdict is pr.Verdict.PASS
    assert report.quantities['violations'] == 0
    assert report.quantities['chain_violations'] == 0
    assert report.seed == 12345


def test_plunnecke_is_seeded():
    one = pt.verify_plunnecke(5, samples=50, seed=7)
    two = pt.verify_plunnecke(5, samples=50, seed=7)
    assert one.quantities == two.quantities


def test_random_symmetric_sets_are_symmetric():
    field = square_field(5)
    rng = np.random.default_rng(3)
    for _ in range(20):
        s = pt.random_symmetric_set(field, rng)
        assert s and not s.contains_zero
        assert pm.negate_set(s) == s


def test_symmetric_coset_unions_are_distinct():
    field = square_field(3)
    seen = [s.bits for _, s in pt.symmetric_coset_unions(field)]
    assert len(seen) == len(set(seen))
    labels = dict((s.bits, label) for label, s in pt.symmetric_coset_unions(field))
    assert labels[pm.EltSet.units(field).bits] == 'cosets(1;0)'


@pytest.mark.parametrize('q,total,with_one', [(3, 4, 1), (4, 35, 7), (5, 6, 1), (7, 8, 1), (9, 130, 13)])
def test_subfield_sweep(q, total, with_one):
    report = pt.verify_subfield_sweep(q)
    assert report.verdict is pr.Verdict.PASS
    assert report.quantities == {'subspaces': total, 'subspaces_with_one': with_one,
                                 'both_subspaces': 1}


@pytest.mark.slow
def test_subfield_sweep_at_eight():
    report = pt.verify_subfield_sweep(8)
    assert report.verdict is pr.Verdict.PASS
    assert report.quantities['subspaces'] == 1395
    assert report.quantities['subspaces_with_one'] == 155


def test_subspace_props_for_paley_squares():
    f25 = square_field(5)
    report = pt.verify_subspace_props(f25, pm.subgroup(f25, 2), label='squares')
    assert report.verdict is pr.Verdict.PASS
    assert report.hypothesis == {'difference_branch': False, 'coset_branch': True}
    assert report.quantities['cliques'] == 3
    assert report.quantities['few_directions'] == 3


def test_subspace_props_unmet_is_info():
    f9 = square_field(3)
    report = pt.verify_subspace_props(f9, pm.EltSet.units(f9))
    assert report.verdict is pr.Verdict.INFO


@pytest.mark.parametrize('q', [3, 4, 5])
def test_grid_linearity(q):
    report = pt.verify_grid_linearity(q)
    assert report.verdict is pr.Verdict.PASS
    assert report.quantities['directions'] == q + 1
    assert report.quantities['linear']
    assert report.hypothesis == {'few_directions': True}


def test_redei():
    report = pt.verify_redei(5)
    assert report.verdict is pr.Verdict.PASS
    assert report.k == 5
    assert report.quantities['subsets'] == 53130
    assert report.quantities['bound'] == 4


def test_small_main_sweep():
    report = pt.sweep_main_theorem(3, samples=20, seed=1)
    assert report.verdict is pr.Verdict.PASS
    assert report.quantities['random'] == 20
    assert report.quantities['applicable'] >= 1


@pytest.mark.slow
@pytest.mark.parametrize('q', [2, 3, 4, 5, 7, 8, 9])
def test_main_sweep(q):
    report = pt.sweep_main_theorem(q, samples=1000, seed=12345)
    assert report.verdict is pr.Verdict.PASS
    assert report.quantities['sets'] >= 1000
    assert report.witnesses == []
