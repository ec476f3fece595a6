"""Reproducible runs of the worked examples, one function per ``pluckx demo`` command.

Each demo returns a JSON-ready report and whether every check in it held.
"""

from __future__ import annotations

from typing import Any, Callable, NamedTuple

from pluckx.config import RunConfig
from pluckx.exactla import Matrix, Subspace, charpoly, kernel
from pluckx.exalg import Multivector, act, basis_index_sets
from pluckx.grass import (
    SymplecticForm,
    contraction_map,
    fiber_partners,
    pluecker_of,
    skew_complement,
    wedge_map,
)
from pluckx.orbits import (
    NORMAL_FORMS,
    LineType,
    O5Data,
    OrbitLabel,
    classify_line,
    classify_orbit,
    in_schubert,
    o5_decompose,
    schubert_partner,
)
from pluckx.sampling import Lcg64, derive_seed
from pluckx.selfadj import (
    VerdictRoute,
    VerdictStatus,
    detect_self_adjoint,
    perturbed_center,
    recover_symplectic,
    sigma_wedge_center,
    verify_double_cover,
)
from pluckx.syscon import (
    Realization,
    curve_transform_matrix,
    curves_equivalent,
    feedback_transform,
    hermann_martin,
    is_symmetric,
    pole_placement_poly,
    pole_placement_poly_via_transfer,
    pp_center,
    symmetric_realization,
    wedge_pairing,
)
from pluckx.utils import (
    double_cover_to_json,
    line_report_to_json,
    multivector_to_json,
    orbit_report_to_json,
    poly_to_json,
    subspace_to_json,
    verdict_to_json,
)
from pluckx.wronski import FundamentalSystem, build_center, schubert_degree


class DemoResult(NamedTuple):
    report: dict[str, Any]
    ok: bool


def e(n: int, *idx: int) -> Multivector:
    return Multivector.monomial(n, idx)


def standard_plane(n: int, *axes: int) -> Subspace:
    return Subspace.span([[1 if j == a - 1 else 0 for j in range(n)] for a in axes], n)


STANDARD_SIGMA_4 = e(4, 1, 2) + e(4, 3, 4)
STANDARD_SIGMA_6 = e(6, 1, 2) + e(6, 3, 4) + e(6, 5, 6)

LINE_FIXTURES: dict[LineType, tuple[Multivector, Multivector]] = {
    LineType.TYPE1: (e(6, 1, 2, 3) + e(6, 1, 4, 5), e(6, 1, 2, 4) + e(6, 1, 3, 6)),
    LineType.TYPE2: (e(6, 1, 3, 4) + e(6, 1, 5, 6), e(6, 2, 3, 4) + e(6, 2, 5, 6)),
    LineType.TYPE3: (e(6, 1, 2, 5) + e(6, 1, 3, 4), -e(6, 1, 2, 4) + e(6, 2, 3, 5)),
}

# exponents of monomial fundamental systems, with the expected center dimension for m = n/2
WRONSKI_FIXTURES: dict[str, tuple[tuple[int, ...], int]] = {
    "x''''": ((0, 1, 2, 3), 2),
    "order 4, generic": ((0, 1, 2, 4), 2),
    "x^(6)": ((0, 1, 2, 3, 4, 5), 3),
    "order 6, dim Z = 6": ((0, 1, 2, 3, 5, 8), 3),
    "order 6, Z = 0": ((0, 1, 2, 4, 8, 16), 3),
}

SISO_EXAMPLE = Realization(
    Matrix.from_rows([[0, 1], [0, 0]]),
    Matrix.from_rows([[0], [1]]),
    Matrix.from_rows([[1, 0]]),
)

SYMMETRIC_2X2 = symmetric_realization([1, 2, 3, 4], Matrix.from_rows([[1, 0], [0, 1], [1, 1], [1, -1]]))


def random_schubert_plane(rng: Lcg64, data: O5Data) -> Subspace:
    """Random 3-plane between the line and the hyperplane of an O5 certificate."""
    basis = data.hyperplane.vectors()
    while True:
        extra = [
            [sum((c * x for c, x in zip(coeffs, column)), 0) for column in zip(*basis)]
            for coeffs in (rng.vector(len(basis)) for _ in range(2))
        ]
        plane = data.alpha + Subspace.span(extra, data.alpha.ambient)
        if plane.dim == 3:
            return plane


def symmetric_3x3(states: int, seed: int = 0) -> Realization:
    """Symmetric realization with eigenvalues 1..N and a seeded integer B.

    B is redrawn until the curve coefficients span min(N + 1, 20) dimensions, the most a
    curve of degree N in the 20-dimensional third exterior power of Q^6 can reach.
    Structured choices such as rows (1, i, i²) collapse that span.
    """
    rng = Lcg64(seed)
    ambient = len(basis_index_sets(6, 3))
    target = min(states + 1, ambient)
    while True:
        system = symmetric_realization(list(range(1, states + 1)), rng.matrix(states, 3, 3))
        curve = hermann_martin(system)
        if Subspace.span([w.coordinates() for w in curve.coefficients], ambient).dim == target:
            return system


#####################################
#                                   #
#          GRASSMANNIAN DEMOS       #
#                                   #
#####################################


def segre_normal_forms(config: RunConfig) -> DemoResult:
    rng = Lcg64(config.seed)
    forms, ok = [], True
    for expected, w in NORMAL_FORMS.items():
        report = classify_orbit(w)
        translates = sum(
            classify_orbit(act(rng.invertible_matrix(6), w)).label is expected for _ in range(config.samples)
        )
        ok &= report.label is expected and translates == config.samples
        forms.append({
            "expected": expected.value,
            "report": orbit_report_to_json(w, report),
            "translates": config.samples,
            "translates_matching": translates,
        })
    return DemoResult({"demo": "segre-normal-forms", "forms": forms}, ok)


def kernels(config: RunConfig) -> DemoResult:
    w5 = NORMAL_FORMS[OrbitLabel.O5]
    wedge_kernel, contraction_kernel = kernel(wedge_map(w5)), kernel(contraction_map(w5))
    rng = Lcg64(config.seed)
    o10 = NORMAL_FORMS[OrbitLabel.O10]
    decomposable = [kernel(wedge_map(act(rng.invertible_matrix(6), o10))).dim for _ in range(config.samples)]
    ok = (
        wedge_kernel == standard_plane(6, 1)
        and contraction_kernel == standard_plane(6, 6)
        and all(d == 3 for d in decomposable)
    )
    report = {
        "demo": "kernels",
        "form": multivector_to_json(w5),
        "wedge_kernel": subspace_to_json(wedge_kernel),
        "contraction_kernel": subspace_to_json(contraction_kernel),
        "decomposable_wedge_kernel_dims": sorted(set(decomposable)),
    }
    return DemoResult(report, ok)


def schubert_degrees(config: RunConfig) -> DemoResult:
    table = [
        {"m": m, "n": n, "degree": schubert_degree(m, n)} for n in range(2, 11) for m in range(1, n)
    ]
    rng = Lcg64(config.seed)
    sigma = SymplecticForm(STANDARD_SIGMA_4)
    preimages, tried = [], 0
    while len(preimages) < config.trials:
        plane = rng.subspace(4, 2)
        tried += 1
        partner = skew_complement(plane, sigma)
        if partner == plane:
            continue
        fiber = fiber_partners(pluecker_of(plane), STANDARD_SIGMA_4)
        matches = len(fiber.partners) == 1 and fiber.partners[0] == pluecker_of(partner)
        preimages.append(1 + len(fiber.partners) if matches else -1)
    ok = (
        schubert_degree(2, 4) == 2
        and schubert_degree(3, 6) == 42
        and all(schubert_degree(1, n) == 1 == schubert_degree(n - 1, n) for n in range(2, 11))
        and all(p == schubert_degree(2, 4) for p in preimages)
    )
    report = {
        "demo": "schubert-degrees",
        "table": table,
        "cross_check": {"planes": len(preimages), "drawn": tried, "preimage_counts": sorted(set(preimages))},
    }
    return DemoResult(report, ok)


def fiber_partner_examples(config: RunConfig) -> DemoResult:
    base = pluecker_of(standard_plane(6, 1, 2, 3))
    o0 = fiber_partners(base, NORMAL_FORMS[OrbitLabel.O0])
    o5 = fiber_partners(base, NORMAL_FORMS[OrbitLabel.O5])
    ok = [p.vector for p in o0.partners] == [e(6, 4, 5, 6)] and [p.vector for p in o5.partners] == [e(6, 1, 4, 5)]

    rng = Lcg64(config.seed)
    empty = 0
    for _ in range(config.samples):
        empty += not fiber_partners(pluecker_of(rng.subspace(6, 3)), NORMAL_FORMS[OrbitLabel.O1]).partners
    ok &= empty == config.samples

    w = act(rng.invertible_matrix(6), NORMAL_FORMS[OrbitLabel.O5])
    data = o5_decompose(w)
    schubert_ok = 0
    for _ in range(config.samples):
        plane = random_schubert_plane(rng, data)
        fiber = fiber_partners(pluecker_of(plane), w)
        expected = schubert_partner(plane, data)
        if expected == plane:
            schubert_ok += not fiber.partners
            continue
        found = [p.subspace() for p in fiber.partners]
        schubert_ok += found == [expected] and in_schubert(expected, data.alpha, data.hyperplane)
    ok &= schubert_ok == config.samples
    report = {
        "demo": "fiber-partners",
        "O0": [multivector_to_json(p.vector) for p in o0.partners],
        "O5": [multivector_to_json(p.vector) for p in o5.partners],
        "O1_empty": f"{empty}/{config.samples}",
        "O5_schubert_law": f"{schubert_ok}/{config.samples}",
    }
    return DemoResult(report, ok)


def double_cover(config: RunConfig) -> DemoResult:
    center = sigma_wedge_center(STANDARD_SIGMA_6)
    result = verify_double_cover(center, SymplecticForm(STANDARD_SIGMA_6), config.trials, config.seed)
    report = {"demo": "double-cover", "sigma": multivector_to_json(STANDARD_SIGMA_6), **double_cover_to_json(result)}
    return DemoResult(report, result.failures == 0)


def line_types(config: RunConfig) -> DemoResult:
    lines, ok = [], True
    for expected, (first, second) in LINE_FIXTURES.items():
        report = classify_line(first, second)
        ok &= report.line_type is expected
        lines.append({"expected": expected.value, **line_report_to_json(report)})
    return DemoResult({"demo": "line-types", "lines": lines}, ok)


#####################################
#                                   #
#        SELF-ADJOINT CENTERS       #
#                                   #
#####################################


def self_adjoint_detection(config: RunConfig) -> DemoResult:
    recovered = rejected = 0
    statuses: dict[str, int] = {}
    for index in range(config.samples):
        seed = derive_seed(config.seed, index)
        rng = Lcg64(seed)
        sigma = rng.nondegenerate_two_form(6)
        center = sigma_wedge_center(sigma)
        verdict = recover_symplectic(center, seed)
        recovered += (
            verdict.is_self_adjoint
            and verdict.sigma is not None
            and verdict.sigma.is_proportional(sigma)
            and sigma_wedge_center(verdict.sigma) == center
        )
        negative = recover_symplectic(perturbed_center(center, rng), seed)
        statuses[negative.status.value] = statuses.get(negative.status.value, 0) + 1
        rejected += not negative.is_self_adjoint
    report = {
        "demo": "self-adjoint-detection",
        "centers": config.samples,
        "recovered": recovered,
        "perturbed_rejected": rejected,
        "perturbed_verdicts": dict(sorted(statuses.items())),
    }
    return DemoResult(report, recovered == rejected == config.samples)


def wronski_centers(config: RunConfig) -> DemoResult:
    rows, ok = [], True
    for name, (exponents, m) in WRONSKI_FIXTURES.items():
        built = build_center(FundamentalSystem.monomials(exponents), m)
        verdict = detect_self_adjoint(built.center, config.seed)
        witness = built.center.decomposable_witness(Lcg64(config.seed), config.samples)
        ok &= witness is None
        rows.append({
            "operator": name,
            "exponents": list(exponents),
            "m": m,
            "dim_X": built.x.dim,
            "dim_Z": built.center.dim,
            "verdict": verdict_to_json(verdict),
        })
    by_name = {r["operator"]: r for r in rows}
    ok &= by_name["x''''"]["dim_Z"] == 1 and by_name["x''''"]["verdict"]["status"] == VerdictStatus.SELF_ADJOINT.value
    ok &= by_name["x^(6)"]["dim_Z"] == 10 and by_name["x^(6)"]["verdict"]["status"] == VerdictStatus.SELF_ADJOINT.value
    ok &= by_name["order 6, Z = 0"]["verdict"]["status"] == VerdictStatus.DEGREE_ONE_EVIDENCE.value
    return DemoResult({"demo": "wronski-centers", "operators": rows}, ok)


def pole_placement(config: RunConfig) -> DemoResult:
    rng = Lcg64(config.seed)
    siso = hermann_martin(SISO_EXAMPLE)
    ok = siso.degree == 2 and pole_placement_poly(SISO_EXAMPLE, Matrix.zeros(1, 1)) == charpoly(SISO_EXAMPLE.a)

    identities = symmetric_ok = pairing_ok = 0
    curve = hermann_martin(SYMMETRIC_2X2)
    for _ in range(config.samples):
        gain = rng.matrix(2, 2, 3)
        target = pole_placement_poly(SYMMETRIC_2X2, gain)
        identities += pole_placement_poly_via_transfer(SYMMETRIC_2X2, gain).num == target
        symmetric_ok += pole_placement_poly(SYMMETRIC_2X2, gain.T) == target
        pairing_ok += wedge_pairing(curve, gain).is_proportional(target)
    ok &= identities == symmetric_ok == pairing_ok == config.samples

    center = pp_center(SYMMETRIC_2X2, config.seed)
    verdict = detect_self_adjoint(center.center, config.seed)
    ok &= is_symmetric(SYMMETRIC_2X2) and center.proper and verdict.is_self_adjoint

    larger = pp_center(symmetric_3x3(9), config.seed)
    larger_verdict = detect_self_adjoint(larger.center, config.seed)
    ok &= larger_verdict.is_self_adjoint

    longest = pp_center(symmetric_3x3(13), config.seed)
    longest_verdict = detect_self_adjoint(longest.center, config.seed)
    ok &= (
        longest.center.dim == 6
        and longest_verdict.route is VerdictRoute.VERTEX
        and longest_verdict.is_self_adjoint
    )

    transformed_ok = equivalent = 0
    for _ in range(config.samples):
        r, w, t, q = rng.invertible_matrix(4), rng.invertible_matrix(2), rng.invertible_matrix(2), rng.matrix(2, 2, 3)
        moved = feedback_transform(SYMMETRIC_2X2, r, w, t, q)
        transformed_ok += detect_self_adjoint(pp_center(moved, config.seed).center, config.seed).is_self_adjoint
        equivalent += curves_equivalent(curve, hermann_martin(moved), curve_transform_matrix(w, t, q))
    ok &= transformed_ok == equivalent == config.samples

    report = {
        "demo": "pole-placement",
        "siso_curve_degree": siso.degree,
        "siso_pole_polynomial": poly_to_json(pole_placement_poly(SISO_EXAMPLE, Matrix.zeros(1, 1))),
        "symmetric_center_dim": center.center.dim,
        "symmetric_verdict": verdict_to_json(verdict),
        "symmetric_3x3_center_dim": larger.center.dim,
        "symmetric_3x3_verdict": verdict_to_json(larger_verdict),
        "symmetric_3x3_long_center_dim": longest.center.dim,
        "symmetric_3x3_long_verdict": verdict_to_json(longest_verdict),
        "transfer_identity": f"{identities}/{config.samples}",
        "transpose_symmetry": f"{symmetric_ok}/{config.samples}",
        "wedge_pairing": f"{pairing_ok}/{config.samples}",
        "feedback_self_adjoint": f"{transformed_ok}/{config.samples}",
        "curve_equivalence": f"{equivalent}/{config.samples}",
    }
    return DemoResult(report, ok)


DEMOS: dict[str, Callable[[RunConfig], DemoResult]] = {
    "segre-normal-forms": segre_normal_forms,
    "kernels": kernels,
    "schubert-degrees": schubert_degrees,
    "fiber-partners": fiber_partner_examples,
    "double-cover": double_cover,
    "line-types": line_types,
    "self-adjoint-detection": self_adjoint_detection,
    "wronski-centers": wronski_centers,
    "pole-placement": pole_placement,
}
