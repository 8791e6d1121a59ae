import functools
import sys

import click

from hopf_integrality.action import ActionSpecError
from hopf_integrality.commalg import BudgetExceededError, PolynomialParseError, WorkspaceOverflowError
from hopf_integrality.definitions import DefinitionError
from hopf_integrality.exactfield import FieldError, MixedFieldError, ScalarParseError, UnsupportedOperationError
from hopf_integrality.findim import CoalgebraAxiomError, HopfDataError
from hopf_integrality.models import ModelError
from hopf_integrality.report import Report, get_writer
from hopf_integrality.structure import UnsupportedConfigurationError
from hopf_integrality.utils.config import ConfigError
from hopf_integrality.utils.const import EXIT_INPUT_ERROR, EXIT_MATH_FAILURE, EXIT_OK, EXIT_RESOURCE_BOUND


# errors caused by what the user supplied; anything else is a failure of the computation
INPUT_ERRORS = (
    ActionSpecError,
    CoalgebraAxiomError,
    ConfigError,
    DefinitionError,
    FieldError,
    HopfDataError,
    MixedFieldError,
    ModelError,
    PolynomialParseError,
    ScalarParseError,
    UnsupportedConfigurationError,
    UnsupportedOperationError,
    ZeroDivisionError,
)


def echo_error(message: str):
    click.echo(click.style(f"Error: {message}", fg='red'), err=True)


def guarded(f):
    """Run a command body and turn its outcome or exception into the exit-code contract."""
    @functools.wraps(f)
    @click.pass_context
    def wrapper(ctx, *args, **kwargs):
        try:
            code = f(*args, **kwargs)
        except (BudgetExceededError, WorkspaceOverflowError) as e:
            echo_error(f"resource bound exceeded: {e}")
            code = EXIT_RESOURCE_BOUND
        except INPUT_ERRORS as e:
            echo_error(str(e))
            code = EXIT_INPUT_ERROR
        except (RuntimeError, ValueError) as e:
            echo_error(f"{type(e).__name__}: {e}")
            code = EXIT_MATH_FAILURE
        ctx.exit(code or EXIT_OK)
    return wrapper


json_option = click.option('--json', 'as_json', is_flag=True, default=False,
                           help='Machine-readable JSON report instead of text.')


def emit_report(report: Report, as_json: bool) -> int:
    writer = get_writer('json' if as_json else 'text', sys.stdout)
    writer(report)
    return EXIT_OK if report.ok else EXIT_MATH_FAILURE
