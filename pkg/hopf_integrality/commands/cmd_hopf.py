import click
from dotenv import load_dotenv, find_dotenv

from hopf_integrality.checks import CheckReport
from hopf_integrality.commands.common import emit_report, guarded, json_option
from hopf_integrality.definitions import dump_hopf, load_hopf, write_definition
from hopf_integrality.findim import format_element, parse_element, structure_summary, verify_hopf_axioms
from hopf_integrality.report import Report
from hopf_integrality.structure import (
    check_filtration,
    check_grouplike_epimorphism,
    classify,
    coradical_filtration,
    grouplikes,
    ideal_generated,
    is_semisimple,
    quotient_hopf,
    verify_hopf_ideal,
)


_ = load_dotenv(find_dotenv())


def _axioms(report: Report, H) -> bool:
    axioms = verify_hopf_axioms(H)
    report.add_checks('axioms', axioms)
    return axioms.passed


@click.group('hopf')
def hopf():
    """Finite-dimensional Hopf algebras given by structure constants."""


@hopf.command('verify')
@click.argument('hopf_file', type=click.Path(exists=True, dir_okay=False))
@json_option
@guarded
def verify(hopf_file: str, as_json: bool):
    """Check the Hopf algebra axioms on basis elements."""
    H = load_hopf(hopf_file)
    report = Report('hopf verify')
    report.section('structure').update(structure_summary(H))
    _axioms(report, H)
    return emit_report(report, as_json)


@hopf.command('analyze')
@click.argument('hopf_file', type=click.Path(exists=True, dir_okay=False))
@json_option
@guarded
def analyze(hopf_file: str, as_json: bool):
    """Group-likes, integrals, semisimplicity, coradical filtration, pointedness."""
    H = load_hopf(hopf_file)
    F = H.field
    report = Report('hopf analyze')
    report.section('structure').update(structure_summary(H))
    if not _axioms(report, H):
        return emit_report(report, as_json)

    G = grouplikes(H)
    report.section('grouplikes').update({
        'count': G.size,
        'elements': [format_element(H, g) for g in G.elements],
        'orders': [G.order(i) for i in range(G.size)],
    })

    verdict = is_semisimple(H)
    report.section('integrals').update({
        'left_integral': format_element(H, verdict.integral),
        'counit_of_integral': F.format(verdict.counit_value),
        'semisimple': verdict.semisimple,
    })

    filtration = coradical_filtration(H)
    checked = check_filtration(H, filtration)
    classification = classify(H, grouplike_set=G)
    entries = report.section('coradical_filtration')
    entries.update({
        'dimensions': filtration.dims(),
        'length': filtration.length,
        'coradical_sub_hopf': checked.coradical_subhopf,
        'pointed': classification.pointed,
        'connected': classification.connected,
    })
    report.add_checks('coradical_filtration', checked.checks)
    return emit_report(report, as_json)


@hopf.command('quotient')
@click.argument('hopf_file', type=click.Path(exists=True, dir_okay=False))
@click.option('--gens', '-g', multiple=True, required=True,
              help='Generator of the ideal as an expression in basis names, e.g. "g - 1". Repeatable.')
@click.option('--out', '-o', type=click.Path(dir_okay=False), default=None,
              help='Write the quotient Hopf algebra definition to this file.')
@json_option
@guarded
def quotient(hopf_file: str, gens: tuple, out: str, as_json: bool):
    """Quotient by the two-sided ideal generated by GENS, when it is a Hopf ideal."""
    H = load_hopf(hopf_file)
    report = Report('hopf quotient')
    J = ideal_generated(H, [parse_element(H, g) for g in gens])
    ideal = verify_hopf_ideal(H, J)
    report.section('ideal').update({
        'generators': list(gens),
        'dimension': J.dim,
        'basis': [format_element(H, v) for v in J.basis],
    })
    report.add_checks('ideal', ideal.checks)
    if not ideal.hopf_ideal:
        return emit_report(report, as_json)

    Q = quotient_hopf(H, J)
    classification = classify(Q.hopf)
    report.section('quotient').update({
        'dimension': Q.hopf.dim,
        'basis': list(Q.hopf.basis_names),
        'pointed': classification.pointed,
        'connected': classification.connected,
        'grouplike_count': classification.grouplike_count,
    })
    axioms = verify_hopf_axioms(Q.hopf)
    report.add_checks('quotient', CheckReport(axioms.checks + (check_grouplike_epimorphism(H, Q),)))
    if out:
        write_definition(dump_hopf(Q.hopf), out)
        report.section('quotient')['written'] = out
    return emit_report(report, as_json)
