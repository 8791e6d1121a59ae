import os

import click
from dotenv import load_dotenv, find_dotenv

from hopf_integrality.action import (
    IntegralityWitness,
    frobenius_chain,
    integrality_witness,
    pth_power_bound_check,
    verify_action,
    verify_witness,
)
from hopf_integrality.checks import CheckReport, CheckResult
from hopf_integrality.commands.cmd_act import invariant_generators
from hopf_integrality.commands.common import emit_report, guarded, json_option
from hopf_integrality.definitions import dump_action, dump_algebra, dump_hopf, write_definition
from hopf_integrality.exactfield import CyclotomicField, PrimeField, RationalField, field_from_string
from hopf_integrality.findim import HopfAlgebraData, verify_hopf_axioms
from hopf_integrality.models import (
    MODEL_NAMES,
    ModelBundle,
    counterexample_closed_forms,
    named_model,
    taft_dual_numbers_model,
)
from hopf_integrality.report import Report
from hopf_integrality.utils.const import DEFAULT_COEFF_DEGREE, DEFAULT_DEGREE_BOUND, DEFAULT_MONIC_DEGREE


_ = load_dotenv(find_dotenv())

CLOSED_FORM_RANGE = 12


@click.group('demo')
def demo():
    """Built-in models: the non-integral counterexample and its characteristic-p variant."""


def _bundle_report(report: Report, bundle: ModelBundle, degree: int):
    report.section('model').update({
        'name': bundle.name,
        'field': str(bundle.hopf.field),
        'hopf_dim': bundle.hopf.dim,
        'algebra': bundle.algebra.describe(),
    })
    report.add_checks('hopf_axioms', verify_hopf_axioms(bundle.hopf))
    report.add_checks('action', verify_action(bundle.action, degree))
    report.add_checks('closed_forms', counterexample_closed_forms(bundle, CLOSED_FORM_RANGE))


def _invariants_section(report: Report, bundle: ModelBundle, subset: str, degree: int, expected) -> list:
    A = bundle.algebra
    _, basis, gens = invariant_generators(bundle.action, subset, degree)
    entries = report.section(f"invariants_{subset}")
    entries.update({
        'basis': [A.format(f) for f in basis],
        'generators': [A.format(g) for g in gens],
    })
    if expected is not None:
        matches = sorted(A.format(f) for f in basis) == sorted(A.format(f) for f in expected)
        entries['matches_expected'] = matches
        if not matches:
            report.fail()
    return gens


def _witness_section(report: Report, bundle: ModelBundle, title: str, element: str, gens: list,
                     monic_deg: int, coeff_deg: int, expect_witness: bool):
    A = bundle.algebra
    result = integrality_witness(A, element, gens, monic_deg, coeff_deg)
    found = isinstance(result, IntegralityWitness)
    entries = report.section(title)
    entries.update({
        'element': element,
        'generators': [A.format(g) for g in gens],
        'result': result.format(A) if found else result.format(),
        'as_expected': found == expect_witness,
    })
    if found:
        entries['verified'] = verify_witness(A, result)
    if found != expect_witness or (found and not entries['verified']):
        report.fail()


@demo.command('counterexample')
@click.option('--N', 'N', type=click.IntRange(min=2), default=2, show_default=True, help='Taft parameter N.')
@click.option('--degree', '-d', type=click.IntRange(min=1), default=DEFAULT_DEGREE_BOUND, show_default=True)
@click.option('--field', 'field_name', default=None,
              help='rational, prime:P or cyclotomic:M. Default: rational for N=2, cyclotomic:N otherwise.')
@click.option('--monic-deg', type=click.IntRange(min=1), default=DEFAULT_MONIC_DEGREE, show_default=True)
@click.option('--coeff-deg', type=click.IntRange(min=0), default=DEFAULT_COEFF_DEGREE, show_default=True)
@json_option
@guarded
def counterexample(N: int, degree: int, field_name: str, monic_deg: int, coeff_deg: int, as_json: bool):
    """Taft algebra acting on k[y,z]/(z^2): A^H = k, so y is not integral over A^H."""
    field = field_from_string(field_name) if field_name else (RationalField() if N == 2 else CyclotomicField(N))
    bundle = taft_dual_numbers_model(N, field, degree)
    report = Report('demo counterexample')
    _bundle_report(report, bundle, degree)
    expected = bundle.expected
    grouplike_gens = _invariants_section(report, bundle, 'G', degree, expected.grouplike_invariants)
    hopf_gens = _invariants_section(report, bundle, 'H', degree, expected.hopf_invariants)
    _witness_section(report, bundle, 'integrality_over_H', 'y', hopf_gens, monic_deg, coeff_deg,
                     field.characteristic != 0)
    _witness_section(report, bundle, 'integrality_over_G', 'y', grouplike_gens, monic_deg, coeff_deg, True)
    return emit_report(report, as_json)


@demo.command('charp')
@click.option('--p', 'p', type=click.IntRange(min=2), default=3, show_default=True, help='Characteristic.')
@click.option('--N', 'N', type=click.IntRange(min=2), default=2, show_default=True, help='Taft parameter N.')
@click.option('--degree', '-d', type=click.IntRange(min=1), default=DEFAULT_DEGREE_BOUND, show_default=True)
@click.option('--depth', type=click.IntRange(min=0), default=1, show_default=True,
              help='Last level of the Frobenius chain.')
@click.option('--monic-deg', type=click.IntRange(min=1), default=DEFAULT_MONIC_DEGREE, show_default=True)
@click.option('--coeff-deg', type=click.IntRange(min=0), default=DEFAULT_COEFF_DEGREE, show_default=True)
@json_option
@guarded
def charp(p: int, N: int, degree: int, depth: int, monic_deg: int, coeff_deg: int, as_json: bool):
    """The same action over F_p, where A over A^H becomes integral."""
    bundle = taft_dual_numbers_model(N, PrimeField(p), degree)
    A = bundle.algebra
    report = Report('demo charp')
    _bundle_report(report, bundle, degree)
    expected = bundle.expected
    _invariants_section(report, bundle, 'G', degree, expected.grouplike_invariants)
    hopf_gens = _invariants_section(report, bundle, 'H', degree, expected.hopf_invariants)
    _witness_section(report, bundle, 'integrality_over_H', 'y', hopf_gens, monic_deg, coeff_deg, True)

    chain = frobenius_chain(bundle.action, depth, degree)
    levels = report.section('frobenius_chain')
    levels['levels'] = [{'level': level.index, 'generators': [A.format(g) for g in level.generators]}
                        for level in chain.levels]
    report.add_checks('frobenius_chain', CheckReport(tuple(
        CheckResult(f"level_{level.index}_{c.name}", c.passed, c.witness, c.detail)
        for level in chain.levels for c in level.checks)))

    verdict = pth_power_bound_check(bundle.action, degree)
    entries = report.section('power_bound')
    entries.update({
        'exponent': verdict.exponent,
        'checked': [name for name, _ in verdict.checked],
        'skipped': [f"{name}: {reason}" for name, reason in verdict.skipped],
    })
    failed = [name for name, ok in verdict.checked if not ok]
    report.add_checks('power_bound', CheckReport((
        CheckResult('powers_in_invariants', verdict.applicable and not failed,
                    {'elements': failed} if failed else None),)))
    return emit_report(report, as_json)


@demo.command('emit')
@click.argument('model', type=click.Choice(MODEL_NAMES))
@click.option('--out', '-o', 'out_dir', type=click.Path(file_okay=False), required=True,
              help='Directory receiving the definition files.')
@click.option('--field', 'field_name', default=None, help='Field override: rational, prime:P or cyclotomic:M.')
@json_option
@guarded
def emit(model: str, out_dir: str, field_name: str, as_json: bool):
    """Write a built-in model as JSON definition files."""
    built = named_model(model, field_from_string(field_name) if field_name else None)
    os.makedirs(out_dir, exist_ok=True)
    written = []
    hopf_path = os.path.join(out_dir, f"{model}.hopf.json")
    H = built if isinstance(built, HopfAlgebraData) else built.hopf
    write_definition(dump_hopf(H), hopf_path)
    written.append(hopf_path)
    if isinstance(built, ModelBundle):
        algebra_path = os.path.join(out_dir, f"{model}.algebra.json")
        action_path = os.path.join(out_dir, f"{model}.action.json")
        write_definition(dump_algebra(built.algebra), algebra_path)
        write_definition(dump_action(built.action, os.path.basename(hopf_path), os.path.basename(algebra_path)),
                         action_path)
        written.extend([algebra_path, action_path])
    report = Report('demo emit')
    report.section('files').update({'model': model, 'written': written})
    return emit_report(report, as_json)
