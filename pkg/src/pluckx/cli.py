"""CLI commands for pluckx."""

from __future__ import annotations

import functools
from typing import Any, Callable, Optional

import typer
from rich.console import Console

from pluckx.config import RunConfig
from pluckx.demos import DEMOS, DemoResult
from pluckx.exceptions import PluckxError
from pluckx.grass import SymplecticForm, fiber_partners, is_decomposable, pluecker
from pluckx.logger import logger, setup_logger
from pluckx.orbits import classify_line, classify_orbit, o5_decompose
from pluckx.selfadj import detect_self_adjoint, verify_double_cover
from pluckx.syscon import (
    hermann_martin,
    is_minimal,
    pole_placement_poly,
    pole_placement_poly_via_transfer,
    pp_center,
    wedge_pairing,
)
from pluckx.utils import (
    center_from_json,
    center_to_json,
    curve_to_json,
    double_cover_to_json,
    fundamental_system_from_json,
    line_report_to_json,
    matrix_from_json,
    multivector_from_json,
    multivector_to_json,
    o5_to_json,
    odo_from_json,
    odo_to_json,
    orbit_report_to_json,
    poly_to_json,
    rational_function_to_json,
    read_json,
    realization_from_json,
    subspace_from_json,
    subspace_to_json,
    verdict_to_json,
    write_json,
)
from pluckx.version import SCHEMA_VERSION, __version__
from pluckx.wronski import (
    build_center,
    formal_adjoint,
    is_self_adjoint_op,
    odo_from_fundamental_system,
    schubert_degree,
)

app = typer.Typer()
grass_app = typer.Typer(help="Plücker vectors, decomposability and fibers of projections from a point.")
orbits_app = typer.Typer(help="Orbits of 3-forms in dimension 6.")
selfadj_app = typer.Typer(help="Self-adjoint centers of projection.")
wronski_app = typer.Typer(help="Differential operators with polynomial solutions and their Wronski centers.")
syscon_app = typer.Typer(help="Pole placement by static output feedback.")
demo_app = typer.Typer(help="Reproducible worked examples.")

app.add_typer(grass_app, name="grass")
app.add_typer(orbits_app, name="orbits")
app.add_typer(selfadj_app, name="selfadj")
app.add_typer(wronski_app, name="wronski")
app.add_typer(syscon_app, name="syscon")
app.add_typer(demo_app, name="demo")

setup_logger()

SEED = typer.Option(0, "--seed", help="Seed of the pseudo-random sampler.")
TRIALS = typer.Option(100, "--trials", help="Number of random trials.")
SAMPLES = typer.Option(20, "--samples", help="Number of random samples per check.")
OUTPUT = typer.Option(None, "--output", help="Write the JSON report to this file instead of stdout.")


def emit(report: dict[str, Any], config: RunConfig) -> None:
    """Prints the report as JSON, or writes it to ``config.output``."""
    report = {"schema": SCHEMA_VERSION, **report}
    if config.output:
        write_json(report, config.output)
    else:
        Console().print_json(data=report)


def reports_errors(command: Callable[..., None]) -> Callable[..., None]:
    """Logs a PluckxError raised by a command and exits with its status code."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            command(*args, **kwargs)
        except PluckxError as e:
            logger.error(e.format_message())
            raise typer.Exit(e.exit_code) from e

    return wrapper


def version_callback(value: bool) -> None:
    if value:
        Console().print(f"pluckx {__version__} (report schema {SCHEMA_VERSION})")
        raise typer.Exit


@app.callback()
def main(
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        callback=version_callback,
        is_eager=True,
        help="Print the version and the report schema revision.",
    ),
) -> None:
    """Exact computation with Plücker embeddings and linear projections of Grassmannians."""


#####################################
#                                   #
#           GRASSMANNIANS           #
#                                   #
#####################################


@grass_app.command("pluecker")
@reports_errors
def grass_pluecker(
    basis: str = typer.Option(..., "--basis", help="JSON list of vectors, or '-' for stdin."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Prints the normalized Plücker vector of the span of the given vectors.

    Args:
    ----
        basis (str): Path of a JSON document holding m independent vectors.
        output (Optional[str]): Report file. Defaults to stdout.

    Example:
    -------
        ```bash
        echo '[[1, 0, 0, 0], [0, 1, 0, 0]]' | pluckx grass pluecker --basis -
        ```
    """
    plane = subspace_from_json(read_json(basis))
    point = pluecker(plane.vectors())
    emit({"plane": subspace_to_json(plane), "pluecker": multivector_to_json(point.vector)}, RunConfig(output=output))


@grass_app.command("decomposable")
@reports_errors
def grass_decomposable(
    point: str = typer.Option(..., "--point", help="JSON multivector, or '-' for stdin."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Decides whether a multivector is the Plücker vector of a plane, and recovers the plane.

    Args:
    ----
        point (str): Path of a JSON multivector.
        output (Optional[str]): Report file. Defaults to stdout.
    """
    w = multivector_from_json(read_json(point))
    plane = is_decomposable(w)
    report = {
        "point": multivector_to_json(w),
        "decomposable": plane is not None,
        "plane": subspace_to_json(plane) if plane is not None else None,
    }
    emit(report, RunConfig(output=output))


@grass_app.command("fiber-partners")
@reports_errors
def grass_fiber_partners(
    plane: str = typer.Option(..., "--plane", help="JSON multivector of a decomposable point."),
    point: str = typer.Option(..., "--point", help="JSON multivector of the projection point."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Lists the other points of the Grassmannian on the line through a plane and the projection point.

    Args:
    ----
        plane (str): Path of the Plücker vector of the plane.
        point (str): Path of the point projected from, which must lie off the Grassmannian.
        output (Optional[str]): Report file. Defaults to stdout.

    Example:
    -------
        ```bash
        pluckx grass fiber-partners --plane e123.json --point o0.json
        ```
    """
    base = multivector_from_json(read_json(plane))
    w = multivector_from_json(read_json(point))
    fiber = fiber_partners(base, w)
    report = {
        "partners": [multivector_to_json(p.vector) for p in fiber.partners],
        "partner_planes": [subspace_to_json(p.subspace()) for p in fiber.partners],
        "base_multiplicity": fiber.base_multiplicity,
        "nonrational_roots": fiber.nonrational,
        "gcd": poly_to_json(fiber.gcd),
    }
    emit(report, RunConfig(output=output))


#####################################
#                                   #
#               ORBITS              #
#                                   #
#####################################


@orbits_app.command("classify")
@reports_errors
def orbits_classify(
    form: str = typer.Option(..., "--form", help="JSON 3-form in dimension 6, or '-' for stdin."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Classifies a 3-form into O0, O1, O5 or O10, with kernel and invariant certificates.

    Args:
    ----
        form (str): Path of a JSON multivector of grade 3 in dimension 6.
        output (Optional[str]): Report file. Defaults to stdout.
    """
    w = multivector_from_json(read_json(form))
    emit(orbit_report_to_json(w, classify_orbit(w)), RunConfig(output=output))


@orbits_app.command("decompose")
@reports_errors
def orbits_decompose(
    form: str = typer.Option(..., "--form", help="JSON 3-form in the orbit O5."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Writes a form of O5 as α∧σ and reports the line α, the hyperplane A and σ.

    Args:
    ----
        form (str): Path of a JSON multivector in O5.
        output (Optional[str]): Report file. Defaults to stdout.
    """
    w = multivector_from_json(read_json(form))
    emit({"form": multivector_to_json(w), **o5_to_json(o5_decompose(w))}, RunConfig(output=output))


@orbits_app.command("line-type")
@reports_errors
def orbits_line_type(
    first: str = typer.Option(..., "--first", help="JSON 3-form in O5."),
    second: str = typer.Option(..., "--second", help="Another JSON 3-form in O5."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Decides which of the three kinds of line in O5 two forms span.

    Args:
    ----
        first (str): Path of the first form.
        second (str): Path of the second form.
        output (Optional[str]): Report file. Defaults to stdout.
    """
    report = classify_line(multivector_from_json(read_json(first)), multivector_from_json(read_json(second)))
    emit(line_report_to_json(report), RunConfig(output=output))


#####################################
#                                   #
#        SELF-ADJOINT CENTERS       #
#                                   #
#####################################


@selfadj_app.command("detect")
@reports_errors
def selfadj_detect(
    center: str = typer.Option(..., "--center", help="JSON center, or '-' for stdin."),
    seed: int = SEED,
    output: Optional[str] = OUTPUT,
) -> None:
    """Decides whether a center contains σ∧(all multivectors) for a symplectic σ.

    Exits with status 1 when the verdict is anything but SelfAdjoint.

    Args:
    ----
        center (str): Path of a JSON center in the second exterior power of Q^4 or the third of Q^6.
        seed (int): Seed of the sampler. Defaults to 0.
        output (Optional[str]): Report file. Defaults to stdout.

    Example:
    -------
        ```bash
        pluckx selfadj detect --center z.json --seed 7
        ```
    """
    config = RunConfig(seed=seed, input=center, output=output)
    z = center_from_json(read_json(center))
    verdict = detect_self_adjoint(z, config.seed)
    emit({"center": center_to_json(z), "verdict": verdict_to_json(verdict)}, config)
    if not verdict.is_self_adjoint:
        raise typer.Exit(1)


@selfadj_app.command("verify")
@reports_errors
def selfadj_verify(
    center: str = typer.Option(..., "--center", help="JSON center."),
    sigma: str = typer.Option(..., "--sigma", help="JSON symplectic 2-form."),
    trials: int = TRIALS,
    seed: int = SEED,
    output: Optional[str] = OUTPUT,
) -> None:
    """Checks that a plane and its skew complement project to the same point.

    Exits with status 1 when any trial fails.

    Args:
    ----
        center (str): Path of a JSON center of 3-forms in dimension 6.
        sigma (str): Path of the 2-form whose complement is taken.
        trials (int): Number of random planes. Defaults to 100.
        seed (int): Seed of the sampler. Defaults to 0.
        output (Optional[str]): Report file. Defaults to stdout.

    Example:
    -------
        ```bash
        pluckx selfadj verify --center z.json --sigma s.json --trials 100 --seed 7
        ```
    """
    config = RunConfig(seed=seed, trials=trials, input=center, output=output)
    z = center_from_json(read_json(center))
    form = SymplecticForm(multivector_from_json(read_json(sigma)))
    if form.dim != z.n:
        logger.error(f"The 2-form lives in dimension {form.dim} but the center in dimension {z.n}")
        raise typer.Exit(2)
    result = verify_double_cover(z, form, config.trials, config.seed)
    emit({"sigma": multivector_to_json(form.sigma), **double_cover_to_json(result)}, config)
    if result.failures:
        raise typer.Exit(1)


#####################################
#                                   #
#              WRONSKI              #
#                                   #
#####################################


@wronski_app.command("build-center")
@reports_errors
def wronski_build_center(
    fs: str = typer.Option(..., "--fs", help="JSON fundamental system {'polys': [...]}."),
    m: int = typer.Option(..., "-m", help="Dimension of the planes of solutions."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Builds X and its annihilator Z, the center of the Wronski map.

    Args:
    ----
        fs (str): Path of a JSON polynomial fundamental system.
        m (int): Plane dimension, between 1 and n - 1.
        output (Optional[str]): Report file. Defaults to stdout.

    Example:
    -------
        ```bash
        pluckx wronski build-center --fs fs.json -m 3
        ```
    """
    config = RunConfig(input=fs, output=output)
    built = build_center(fundamental_system_from_json(read_json(fs)), m)
    report = {
        "m": m,
        "dim_X": built.x.dim,
        "X": subspace_to_json(built.x),
        "center": center_to_json(built.center),
    }
    emit(report, config)


@wronski_app.command("degree")
@reports_errors
def wronski_degree(
    m: int = typer.Option(..., "-m", help="Dimension of the planes."),
    n: int = typer.Option(..., "-n", help="Dimension of the ambient space."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Prints the degree of the Grassmannian of m-planes in n-space.

    Example:
    -------
        ```bash
        pluckx wronski degree -m 3 -n 6  # 42
        ```
    """
    emit({"m": m, "n": n, "degree": schubert_degree(m, n)}, RunConfig(output=output))


@wronski_app.command("adjoint")
@reports_errors
def wronski_adjoint(
    op: Optional[str] = typer.Option(None, "--op", help="JSON operator {'coeffs': [...], 'sign': 1}."),
    fs: Optional[str] = typer.Option(None, "--fs", help="JSON fundamental system, used instead of --op."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Prints the formal adjoint of an operator and whether the operator is formally self-adjoint.

    Exits with status 1 when it is not.

    Args:
    ----
        op (Optional[str]): Path of a JSON operator.
        fs (Optional[str]): Path of a fundamental system; the operator is the one it determines.
        output (Optional[str]): Report file. Defaults to stdout.
    """
    if (op is None) == (fs is None):
        logger.error("Please give exactly one of --op and --fs.")
        raise typer.Exit(2)
    if op is not None:
        operator = odo_from_json(read_json(op))
    else:
        operator = odo_from_fundamental_system(fundamental_system_from_json(read_json(fs)))
    self_adjoint = is_self_adjoint_op(operator)
    report = {
        "operator": odo_to_json(operator),
        "adjoint": odo_to_json(formal_adjoint(operator)),
        "self_adjoint": self_adjoint,
    }
    emit(report, RunConfig(input=op or fs, output=output))
    if not self_adjoint:
        raise typer.Exit(1)


#####################################
#                                   #
#           POLE PLACEMENT          #
#                                   #
#####################################


@syscon_app.command("pp")
@reports_errors
def syscon_pp(
    realization: str = typer.Option(..., "--realization", help="JSON realization {'A': ..., 'B': ..., 'C': ...}."),
    gain: str = typer.Option(..., "--gain", help="JSON m×p gain matrix."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Prints the closed-loop characteristic polynomial det(sI - A - BKC), computed three ways.

    Args:
    ----
        realization (str): Path of a JSON realization.
        gain (str): Path of the JSON gain K.
        output (Optional[str]): Report file. Defaults to stdout.

    Example:
    -------
        ```bash
        pluckx syscon pp --realization r.json --gain k.json
        ```
    """
    system = realization_from_json(read_json(realization))
    k = matrix_from_json(read_json(gain))
    report = {
        "pole_polynomial": poly_to_json(pole_placement_poly(system, k)),
        "via_transfer": rational_function_to_json(pole_placement_poly_via_transfer(system, k)),
        "wedge_pairing": poly_to_json(wedge_pairing(hermann_martin(system), k)),
    }
    emit(report, RunConfig(input=realization, output=output))


@syscon_app.command("center")
@reports_errors
def syscon_center(
    realization: str = typer.Option(..., "--realization", help="JSON realization."),
    seed: int = SEED,
    output: Optional[str] = OUTPUT,
) -> None:
    """Builds the center of the pole placement map and decides self-adjointness where supported.

    Args:
    ----
        realization (str): Path of a JSON realization.
        seed (int): Seed of the sampler. Defaults to 0.
        output (Optional[str]): Report file. Defaults to stdout.
    """
    config = RunConfig(seed=seed, input=realization, output=output)
    system = realization_from_json(read_json(realization))
    built = pp_center(system, config.seed)
    report: dict[str, Any] = {
        "minimal": is_minimal(system),
        "dim_X": built.x.dim,
        "proper": built.proper,
        "center": center_to_json(built.center),
    }
    if (built.center.m, built.center.n) in {(2, 4), (3, 6)}:
        report["verdict"] = verdict_to_json(detect_self_adjoint(built.center, config.seed))
    else:
        logger.info(f"No self-adjointness verdict for m={system.m}, p={system.p}")
    emit(report, config)


@syscon_app.command("hm-curve")
@reports_errors
def syscon_hm_curve(
    realization: str = typer.Option(..., "--realization", help="JSON realization."),
    output: Optional[str] = OUTPUT,
) -> None:
    """Prints the Hermann-Martin curve of a realization as a list of coefficient multivectors.

    Args:
    ----
        realization (str): Path of a JSON realization.
        output (Optional[str]): Report file. Defaults to stdout.
    """
    system = realization_from_json(read_json(realization))
    emit(curve_to_json(hermann_martin(system)), RunConfig(input=realization, output=output))


#####################################
#                                   #
#               DEMOS               #
#                                   #
#####################################

DEMO_HELP = {
    "segre-normal-forms": "Classifies the four normal forms and random translates of each.",
    "kernels": "Kernels of wedge and contraction for a form in O5 and for decomposable forms.",
    "schubert-degrees": "Degree table of Grassmannians, cross-checked against fibers in dimension 4.",
    "fiber-partners": "Partners of a plane through points of O0, O1 and O5.",
    "double-cover": "A plane and its skew complement project to the same point.",
    "line-types": "The three kinds of line inside O5.",
    "self-adjoint-detection": "Recovers σ from random centers V∧σ and rejects perturbations.",
    "wronski-centers": "Centers of Wronski maps of operators with monomial solutions.",
    "pole-placement": "Pole placement identities and self-adjoint centers of symmetric systems.",
}


def register_demo(name: str, runner: Callable[[RunConfig], DemoResult]) -> None:
    @demo_app.command(name, help=f"{DEMO_HELP[name]} Exits with status 1 when a check fails.")
    @reports_errors
    def command(
        seed: int = SEED,
        trials: int = TRIALS,
        samples: int = SAMPLES,
        output: Optional[str] = OUTPUT,
    ) -> None:
        config = RunConfig(seed=seed, trials=trials, samples=samples, output=output)
        result = runner(config)
        emit({**result.report, "ok": result.ok}, config)
        if not result.ok:
            logger.error(f"Demo {name} failed a check")
            raise typer.Exit(1)


for _name, _runner in DEMOS.items():
    register_demo(_name, _runner)


if __name__ == "__main__":
    app()
