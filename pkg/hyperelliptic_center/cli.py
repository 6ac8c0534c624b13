import json
import logging
import sys
from functools import wraps
from typing import Callable, Optional

import click

from hyperelliptic_center import config, render
from hyperelliptic_center.automorphisms import (
    UndeterminedAutomorphismGroup,
    classify_group,
    group_elements,
)
from hyperelliptic_center.central_rep import (
    rep_from_profile,
    trace_closed_form,
    u_trace,
)
from hyperelliptic_center.curve import InvalidCurveError
from hyperelliptic_center.decomposition import MultiplicityError, decompose
from hyperelliptic_center.groups import (
    Family,
    InvalidGroupParameter,
    NotACharacterError,
    build_group,
    character_table,
    conjugacy_classes,
)
from hyperelliptic_center.linalg import InternalConsistencyError, trace
from hyperelliptic_center.reduction import p_table, q_table
from hyperelliptic_center.selftest import run_selftest
from hyperelliptic_center.specfile import CurveSpec, SpecParseError, read_spec

logger = logging.getLogger(__name__)

_LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


@click.group(epilog=config.EXIT_CODES_HELP)
@click.option("--verbose", "-v", count=True, help="Log more; repeat for debug output.")
def center(verbose: int):
    """Automorphisms of hyperelliptic rings and their action on Omega/dR."""
    logging.basicConfig(
        level=_LOG_LEVELS[min(verbose, len(_LOG_LEVELS) - 1)],
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def format_option(function: Callable):
    return click.option(
        "--format",
        "output_format",
        type=click.Choice(["json", "text"]),
        default=None,
        help="Report format; defaults to the curve file's setting, else json.",
    )(function)


def outfile_option(function: Callable):
    return click.option(
        "--outfile",
        "-o",
        type=click.Path(dir_okay=False, writable=True),
        help="Output CSV file for the report's table (text format).",
    )(function)


def curve_arg(function: Callable):
    function.__doc__ = (
        function.__doc__ or ""
    ) + "\n\nCURVE: JSON or TOML curve spec file, or '-' for standard input."
    return click.argument("curve", type=click.Path(allow_dash=True))(function)


def validate_param(ctx, param, value):
    if value < 1:
        raise click.BadParameter("Must be a positive integer.")
    return value


def group_args(function: Callable):
    function.__doc__ = (function.__doc__ or "") + (
        "\n\nFAMILY: cyclic, dihedral, dicyclic or u."
        "\n\nPARAM: Cyclic(m) and Dihedral(m) take the rotation order m, "
        "Dicyclic(n) and U(n) take n (order 4n)."
    )
    function = click.argument("param", type=int, callback=validate_param)(function)
    return click.argument(
        "family",
        type=click.Choice([f.value for f in Family], case_sensitive=False),
    )(function)


def _fail(error: str, message: str, code: int, **details) -> None:
    click.echo(json.dumps({"error": error, "message": message, **details}), err=True)
    sys.exit(code)


def exit_codes(function: Callable):
    """Turn library errors into the documented exit codes."""

    @wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except SpecParseError as e:
            _fail("parse", str(e), config.EXIT_PARSE, **e.as_dict())
        except InvalidCurveError as e:
            _fail("invalid_curve", str(e), config.EXIT_INVALID_CURVE, kind=type(e).__name__)
        except InvalidGroupParameter as e:
            _fail("usage", str(e), config.EXIT_USAGE)
        except UndeterminedAutomorphismGroup as e:
            _fail("undetermined", str(e), config.EXIT_UNDETERMINED, candidates=e.candidates)
        except MultiplicityError as e:
            _fail("internal", str(e), config.EXIT_INTERNAL, diagnostics=e.diagnostics)
        except NotACharacterError as e:
            _fail("internal", str(e), config.EXIT_INTERNAL, diagnostics=e.diagnostics)
        except InternalConsistencyError as e:
            _fail("internal", str(e), config.EXIT_INTERNAL, kind=type(e).__name__)

    return wrapper


@center.command()
@format_option
@outfile_option
@curve_arg
@exit_codes
def aut(output_format: Optional[str], outfile: Optional[str], curve: str):
    """Print the automorphism group, its generators and every element."""
    spec = read_spec(curve)
    _output(aut_document(spec), _format(output_format, spec), outfile)


@center.command()
@format_option
@outfile_option
@group_args
@exit_codes
def classes(output_format: Optional[str], outfile: Optional[str], family: str, param: int):
    """Print the conjugacy classes of a group."""
    group = build_group(family, param)
    document = {
        "command": "classes",
        "group": group.name,
        "order": group.order,
        "alias": group.alias,
        "classes": [
            {
                "representative": c.representative.label(),
                "size": c.size,
                "members": [m.label() for m in c.members],
            }
            for c in conjugacy_classes(group)
        ],
    }
    _output(document, output_format or "json", outfile)


@center.command()
@format_option
@outfile_option
@group_args
@exit_codes
def chartab(output_format: Optional[str], outfile: Optional[str], family: str, param: int):
    """Print the character table of a group."""
    document = {"command": "chartab", **character_table(build_group(family, param)).as_dict()}
    _output(document, output_format or "json", outfile)


@center.command()
@format_option
@outfile_option
@curve_arg
@exit_codes
def action(output_format: Optional[str], outfile: Optional[str], curve: str):
    """Print the generator matrices on Omega/dR and their traces."""
    spec = read_spec(curve)
    _output(action_document(spec), _format(output_format, spec), outfile)


@center.command(name="decompose")
@format_option
@outfile_option
@click.argument("curves", nargs=-1, required=True, type=click.Path(allow_dash=True))
@exit_codes
def decompose_command(output_format: Optional[str], outfile: Optional[str], curves: tuple[str]):
    """Decompose Omega/dR into irreducible representations.

    CURVES: One or more curve spec files, or '-' for standard input. Several
    files give a JSON list in input order.
    """
    if outfile and len(curves) > 1:
        raise click.BadParameter("--outfile takes a single curve.", param_hint="--outfile")
    specs = [read_spec(path) for path in curves]
    documents = [decompose_document(spec) for spec in specs]
    fmt = _format(output_format, specs[0])
    if len(documents) == 1:
        _output(documents[0], fmt, outfile)
    elif fmt == "json":
        click.echo(_dumps(documents))
    else:
        click.echo("\n\n".join(render.render_text(d) for d in documents))


@center.command(name="pq-table")
@format_option
@outfile_option
@click.option(
    "--m-max",
    default=config.PQ_TABLE_M_MAX,
    type=click.IntRange(min=1),
    show_default=True,
    help="Last row index of both tables.",
)
@curve_arg
@exit_codes
def pq_table(output_format: Optional[str], outfile: Optional[str], m_max: int, curve: str):
    """Print the P and Q reduction tables."""
    spec = read_spec(curve)
    document = {
        "command": "pq-table",
        "curve": spec.curve.as_dict(),
        "curve_digest": spec.curve.digest,
        "m_max": m_max,
        "p": p_table(spec.curve, m_max).as_dict(),
        "q": q_table(spec.curve, m_max).as_dict(),
    }
    _output(document, _format(output_format, spec), outfile)


@center.command()
@format_option
@outfile_option
def selftest(output_format: Optional[str], outfile: Optional[str]):
    """Run the built-in invariant checks at small parameters."""
    document = run_selftest()
    _output(document, output_format or "json", outfile)
    if document["failed"]:
        sys.exit(config.EXIT_INTERNAL)


def aut_document(spec: CurveSpec) -> dict:
    profile = classify_group(spec.curve)
    return {
        "command": "aut",
        "curve": spec.curve.as_dict(),
        "profile": profile.as_dict(),
        "elements": [
            {"element": g.label(), "map": phi.as_dict()}
            for g, phi in group_elements(spec.curve, profile)
        ],
    }


def action_document(spec: CurveSpec) -> dict:
    profile = classify_group(spec.curve)
    rep = rep_from_profile(spec.curve, profile)
    return {
        "command": "action",
        "curve": spec.curve.as_dict(),
        "group": profile.group.name,
        "generators": {
            name: {
                "map": profile.generators[name].as_dict(),
                "matrix": [[c.as_dict() for c in row] for row in matrix],
                "trace": trace(matrix).as_dict(),
                "u_trace": u_trace(matrix).as_dict(),
            }
            for name, matrix in rep.generators.items()
        },
        "traces": [t.as_dict() for t in trace_closed_form(spec.curve, profile)],
        "character": [c.as_dict() for c in rep.character],
    }


def decompose_document(spec: CurveSpec) -> dict:
    return {"command": "decompose", **decompose(spec.curve).as_dict()}


def _format(output_format: Optional[str], spec: CurveSpec) -> str:
    return output_format or spec.format or "json"


def _dumps(document) -> str:
    return json.dumps(document, indent=2, sort_keys=False, ensure_ascii=False)


def _output(document: dict, output_format: str, outfile: Optional[str] = None):
    if outfile:
        df = render.table_frame(document)
        df.to_csv(outfile, index=False, lineterminator="\n", encoding="utf-8")
        return
    if output_format == "json":
        click.echo(_dumps(document))
    else:
        click.echo(render.render_text(document))
