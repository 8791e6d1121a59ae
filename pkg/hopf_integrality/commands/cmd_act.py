import click
from dotenv import load_dotenv, find_dotenv

from hopf_integrality.action import (
    IntegralityWitness,
    algebra_generators,
    integrality_witness,
    invariants,
    trace_image,
    verify_action,
    verify_witness,
)
from hopf_integrality.checks import CheckReport, CheckResult
from hopf_integrality.commalg import Workspace
from hopf_integrality.commands.common import emit_report, guarded, json_option
from hopf_integrality.definitions import load_action, load_algebra, load_hopf
from hopf_integrality.report import Report
from hopf_integrality.utils.const import (
    DEFAULT_COEFF_DEGREE,
    DEFAULT_DEGREE_BOUND,
    DEFAULT_MONIC_DEGREE,
)


_ = load_dotenv(find_dotenv())


def action_arguments(f):
    f = click.argument('action_file', type=click.Path(exists=True, dir_okay=False))(f)
    f = click.argument('algebra_file', type=click.Path(exists=True, dir_okay=False))(f)
    return click.argument('hopf_file', type=click.Path(exists=True, dir_okay=False))(f)


degree_option = click.option('--degree', '-d', type=click.IntRange(min=0), default=DEFAULT_DEGREE_BOUND,
                             show_default=True, help='Degree bound of the truncated workspace.')


def _load(hopf_file: str, algebra_file: str, action_file: str):
    return load_action(action_file, load_hopf(hopf_file), load_algebra(algebra_file))


def invariant_generators(spec, subset: str, degree: int) -> tuple:
    """(invariant subspace, its basis as polynomials, degree-bounded algebra generators)."""
    W = Workspace.build(spec.algebra, degree)
    S = invariants(spec, subset, degree)
    return S, [W.to_poly(v) for v in S.basis], algebra_generators(spec.algebra, S, W)


@click.group('act')
def act():
    """H-module-algebra actions on finitely presented commutative algebras."""


@act.command('verify')
@action_arguments
@degree_option
@json_option
@guarded
def verify(hopf_file: str, algebra_file: str, action_file: str, degree: int, as_json: bool):
    """Check the module-algebra axioms on monomials up to the degree bound."""
    spec = _load(hopf_file, algebra_file, action_file)
    report = Report('act verify')
    report.section('action').update({
        'algebra': spec.algebra.describe(),
        'degree': degree,
        'jump': spec.jump,
    })
    report.add_checks('action', verify_action(spec, degree))
    return emit_report(report, as_json)


@act.command('invariants')
@action_arguments
@click.option('--sub', type=click.Choice(['H', 'G']), default='H', show_default=True,
              help='Invariants of the whole Hopf algebra or of its group-likes only.')
@degree_option
@json_option
@guarded
def invariants_command(hopf_file: str, algebra_file: str, action_file: str, sub: str, degree: int,
                       as_json: bool):
    """Basis and generators of the invariant truncation."""
    spec = _load(hopf_file, algebra_file, action_file)
    A = spec.algebra
    S, basis, gens = invariant_generators(spec, sub, degree)
    report = Report('act invariants')
    report.section('invariants').update({
        'subset': sub,
        'degree': degree,
        'dimension': S.dim,
        'basis': [A.format(f) for f in basis],
        'generators': [A.format(g) for g in gens],
    })
    if sub == 'H':
        image = trace_image(spec, degree)
        report.section('trace_image').update({
            'dimension': image.image.dim,
            'equal_to_invariants': image.equal,
        })
        report.add_checks('trace_image', CheckReport((CheckResult('trace_in_invariants', image.included),)))
    return emit_report(report, as_json)


@act.command('integrality')
@action_arguments
@click.option('--element', '-e', required=True, help='Element of the algebra, e.g. "y".')
@click.option('--over', type=click.Choice(['H', 'G', 'gens']), default='H', show_default=True,
              help='Subalgebra: invariants of H, of the group-likes, or generated by --gens.')
@click.option('--gens', multiple=True, help='Subalgebra generator for --over gens. Repeatable.')
@click.option('--monic-deg', type=click.IntRange(min=1), default=DEFAULT_MONIC_DEGREE, show_default=True,
              help='Largest degree of the monic dependence.')
@click.option('--coeff-deg', type=click.IntRange(min=0), default=DEFAULT_COEFF_DEGREE, show_default=True,
              help='Largest number of generator factors in a coefficient.')
@degree_option
@click.option('--expect', type=click.Choice(['witness', 'none', 'any']), default='witness', show_default=True,
              help='Outcome that counts as success for the exit code.')
@json_option
@guarded
def integrality(hopf_file: str, algebra_file: str, action_file: str, element: str, over: str, gens: tuple,
                monic_deg: int, coeff_deg: int, degree: int, expect: str, as_json: bool):
    """Search a monic dependence of ELEMENT over a subalgebra within explicit bounds."""
    spec = _load(hopf_file, algebra_file, action_file)
    A = spec.algebra
    if over == 'gens':
        sub_gens = [A.parse(g) for g in gens]
    else:
        _, _, sub_gens = invariant_generators(spec, over, degree)
    result = integrality_witness(A, element, sub_gens, monic_deg, coeff_deg)
    found = isinstance(result, IntegralityWitness)
    report = Report('act integrality')
    entries = report.section('integrality')
    entries.update({
        'element': A.format(A.normal_form(A.parse(element))),
        'over': over,
        'generators': [A.format(g) for g in sub_gens],
        'bounds': [monic_deg, coeff_deg],
        'result': result.format(A) if found else result.format(),
    })
    if found:
        entries['verified'] = verify_witness(A, result)
        if not entries['verified']:
            report.fail()
    if (expect == 'witness' and not found) or (expect == 'none' and found):
        report.fail()
    return emit_report(report, as_json)
