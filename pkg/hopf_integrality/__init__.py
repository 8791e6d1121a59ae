# -*- coding: utf-8 -*-

"""Exact computations with finite-dimensional Hopf algebras acting on commutative algebras"""

import logging
import sys
from typing import Optional, Sequence

import click
from .commands import hopf, act, demo
from .utils.const import EXIT_INPUT_ERROR, EXIT_MATH_FAILURE


@click.group()
@click.option('--verbose', '-v', is_flag=True, default=False, help='Debug logging on standard error.')
def cli(verbose: bool):
    """Hopf algebra actions, invariants and integrality"""
    if verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr,
                            format='%(asctime)s %(name)s %(levelname)s %(message)s')


cli.add_command(hopf)
cli.add_command(act)
cli.add_command(demo)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit code instead of exiting."""
    try:
        code = cli.main(args=list(argv) if argv is not None else None, prog_name='hopf_integrality',
                        standalone_mode=False)
    except click.exceptions.Abort:
        click.echo(click.style('Aborted!', fg='red'), err=True)
        return EXIT_MATH_FAILURE
    except click.ClickException as e:
        e.show()
        return e.exit_code if e.exit_code else EXIT_INPUT_ERROR
    return code if isinstance(code, int) else 0
