"""JSON codecs and file helpers shared by the CLI commands.

Scalars travel as "p/q" strings with a positive denominator, and terms are emitted in
lexicographic order, so equal objects always serialize to identical text.
"""

from __future__ import annotations

import json
import pathlib
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Iterator

from pluckx.exactla import Matrix, Poly, RationalFunction, Subspace, to_scalar
from pluckx.exalg import Multivector
from pluckx.exceptions import MalformedInputError
from pluckx.grass import Center
from pluckx.logger import logger
from pluckx.orbits import HitchinData, LineReport, O5Data, OrbitReport
from pluckx.selfadj import DoubleCoverReport, SelfAdjointVerdict
from pluckx.syscon import HermannMartinCurve, Realization
from pluckx.wronski import FundamentalSystem, Odo


@contextmanager
def schema(name: str) -> Iterator[None]:
    """Turns lookup and type errors while decoding into a MalformedInputError."""
    try:
        yield
    except (AttributeError, KeyError, TypeError, ValueError, IndexError, ZeroDivisionError) as e:
        msg = f"Malformed {name} document: {e!r}"
        raise MalformedInputError(msg) from e


def read_json(path: str) -> Any:
    """Reads a JSON document from a file, or from stdin when ``path`` is "-"."""
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as file:
                text = file.read()
    except OSError as e:
        msg = f"Cannot read {path}: {e.strerror}"
        raise MalformedInputError(msg) from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        msg = f"{path} is not valid JSON: {e.msg} (line {e.lineno})"
        raise MalformedInputError(msg) from e


def write_json(data: Any, path: str) -> None:
    target = pathlib.Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    logger.info(f"Report written to {target}")


#####################################
#                                   #
#              SCALARS              #
#                                   #
#####################################


def scalar_to_json(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def scalar_from_json(value: Any) -> Fraction:
    if isinstance(value, float):
        msg = f"Floating-point value {value} is not exact; write it as a \"p/q\" string"
        raise MalformedInputError(msg)
    with schema("scalar"):
        return to_scalar(value)


#####################################
#                                   #
#          ALGEBRAIC OBJECTS        #
#                                   #
#####################################


def multivector_to_json(w: Multivector) -> dict[str, Any]:
    data: dict[str, Any] = {
        "dim": w.dim,
        "grade": w.grade,
        "terms": [{"idx": list(idx), "coef": scalar_to_json(c)} for idx, c in w.items()],
    }
    if w.dual:
        data["dual"] = True
    return data


def multivector_from_json(data: Any) -> Multivector:
    with schema("multivector"):
        terms: dict[tuple[int, ...], Fraction] = {}
        for term in data["terms"]:
            idx = tuple(int(i) for i in term["idx"])
            terms[idx] = terms.get(idx, Fraction(0)) + scalar_from_json(term["coef"])
        return Multivector(int(data["dim"]), int(data["grade"]), terms, bool(data.get("dual", False)))


def matrix_to_json(matrix: Matrix) -> dict[str, Any]:
    return {"rows": matrix.rows, "cols": matrix.cols, "data": [scalar_to_json(x) for x in matrix.data]}


def matrix_from_json(data: Any) -> Matrix:
    with schema("matrix"):
        return Matrix(int(data["rows"]), int(data["cols"]), tuple(scalar_from_json(x) for x in data["data"]))


def poly_to_json(p: Poly) -> dict[str, Any]:
    return {"coeffs": [scalar_to_json(c) for c in p.coeffs]}


def poly_from_json(data: Any) -> Poly:
    with schema("polynomial"):
        return Poly(tuple(scalar_from_json(c) for c in data["coeffs"]))


def rational_function_to_json(r: RationalFunction) -> dict[str, Any]:
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def rational_function_from_json(data: Any) -> RationalFunction:
    with schema("rational function"):
        den = poly_from_json(data["den"]) if "den" in data else Poly.constant(1)
        return RationalFunction(poly_from_json(data["num"]), den)


def subspace_to_json(space: Subspace) -> dict[str, Any]:
    return {
        "ambient": space.ambient,
        "dim": space.dim,
        "basis": [[scalar_to_json(x) for x in v] for v in space.vectors()],
    }


def subspace_from_json(data: Any) -> Subspace:
    """Accepts {"ambient": n, "basis": [[...], ...]} or a bare list of vectors."""
    with schema("subspace"):
        vectors = data["basis"] if isinstance(data, dict) else data
        ambient = int(data["ambient"]) if isinstance(data, dict) and "ambient" in data else len(vectors[0])
        return Subspace.span([[scalar_from_json(x) for x in v] for v in vectors], ambient)


def center_to_json(center: Center) -> dict[str, Any]:
    return {
        "n": center.n,
        "m": center.m,
        "dim": center.dim,
        "basis": [multivector_to_json(w) for w in center.elements()],
    }


def center_from_json(data: Any) -> Center:
    """Accepts {"generators": [...]} (or "basis"), with "n" and "m" needed only for an empty center."""
    with schema("center"):
        if not isinstance(data, (dict, list)):
            msg = f"expected an object or a list, got {type(data).__name__}"
            raise TypeError(msg)
        generators = data if isinstance(data, list) else data.get("generators", data.get("basis"))
        elements = [multivector_from_json(w) for w in generators]
        if isinstance(data, dict) and not elements:
            return Center.span([], int(data["n"]), int(data["m"]))
        return Center.span(elements)


def realization_from_json(data: Any) -> Realization:
    with schema("realization"):
        return Realization(matrix_from_json(data["A"]), matrix_from_json(data["B"]), matrix_from_json(data["C"]))


def realization_to_json(system: Realization) -> dict[str, Any]:
    return {"A": matrix_to_json(system.a), "B": matrix_to_json(system.b), "C": matrix_to_json(system.c)}


def fundamental_system_from_json(data: Any) -> FundamentalSystem:
    with schema("fundamental system"):
        return FundamentalSystem(tuple(poly_from_json(p) for p in data["polys"]))


def odo_to_json(op: Odo) -> dict[str, Any]:
    return {"order": op.order, "sign": op.sign, "coeffs": [rational_function_to_json(a) for a in op.coeffs]}


def odo_from_json(data: Any) -> Odo:
    """Accepts {"coeffs": [a_0, ..., a_(n-1)], "sign": ±1}, each a_i a rational function or polynomial."""
    with schema("operator"):
        coeffs = tuple(
            rational_function_from_json(a) if "num" in a else RationalFunction(poly_from_json(a))
            for a in data["coeffs"]
        )
        return Odo(coeffs, int(data.get("sign", 1)))


#####################################
#                                   #
#              REPORTS              #
#                                   #
#####################################


def hitchin_to_json(data: HitchinData) -> dict[str, Any]:
    return {"K": matrix_to_json(data.K), "lambda": scalar_to_json(data.lam)}


def o5_to_json(data: O5Data) -> dict[str, Any]:
    return {
        "alpha": subspace_to_json(data.alpha),
        "hyperplane": subspace_to_json(data.hyperplane),
        "sigma": multivector_to_json(data.sigma),
    }


def orbit_report_to_json(form: Multivector, report: OrbitReport) -> dict[str, Any]:
    data: dict[str, Any] = {
        "form": multivector_to_json(form),
        "orbit": report.label.value,
        "wedge_kernel": subspace_to_json(report.wedge_kernel),
        "contraction_kernel": subspace_to_json(report.contraction_kernel),
        "hitchin": hitchin_to_json(report.hitchin),
    }
    if report.o5 is not None:
        data["o5"] = o5_to_json(report.o5)
    return data


def line_report_to_json(report: LineReport) -> dict[str, Any]:
    data: dict[str, Any] = {"type": report.line_type.value}
    if report.alpha is not None:
        data["alpha"] = subspace_to_json(report.alpha)
    if report.hyperplane is not None:
        data["hyperplane"] = subspace_to_json(report.hyperplane)
    if report.sigma is not None:
        data["sigma"] = multivector_to_json(report.sigma)
    if report.alpha_vectors is not None:
        data["alpha_vectors"] = [multivector_to_json(a) for a in report.alpha_vectors]
    return data


def verdict_to_json(verdict: SelfAdjointVerdict) -> dict[str, Any]:
    data: dict[str, Any] = {"status": verdict.status.value, "route": verdict.route.value}
    if verdict.sigma is not None:
        data["sigma"] = multivector_to_json(verdict.sigma)
    if verdict.witness is not None:
        data["witness"] = multivector_to_json(verdict.witness)
        data["witness_orbit"] = verdict.witness_label.value if verdict.witness_label else None
    if verdict.reason is not None:
        data["reason"] = verdict.reason.value
    if verdict.labels:
        data["basis_orbits"] = [label.value for label in verdict.labels]
    if verdict.e_spans is not None:
        data["E_spans"] = verdict.e_spans
        data["F_spans"] = verdict.f_spans
    if verdict.solution_dim is not None:
        data["solution_dim"] = verdict.solution_dim
    return data


def double_cover_to_json(report: DoubleCoverReport) -> dict[str, Any]:
    return {
        "trials": len(report.trials),
        "passes": report.passes,
        "failures": report.failures,
        "lagrangian": report.lagrangian,
        "failed_trials": [t.index for t in report.trials if not t.passed],
    }


def curve_to_json(curve: HermannMartinCurve) -> dict[str, Any]:
    return {
        "m": curve.m,
        "p": curve.p,
        "degree": curve.degree,
        "coefficients": [multivector_to_json(w) for w in curve.coefficients],
    }
