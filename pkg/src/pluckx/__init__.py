from pluckx.cli import app
from pluckx.exalg import Multivector, act, contract, top_pairing, wedge
from pluckx.grass import Center, SymplecticForm, fiber_partners, is_decomposable, pluecker, project
from pluckx.orbits import OrbitLabel, classify_orbit, o5_decompose
from pluckx.selfadj import detect_self_adjoint, recover_symplectic, verify_double_cover
from pluckx.syscon import Realization, hermann_martin, pp_center
from pluckx.wronski import FundamentalSystem, Odo, build_center, schubert_degree

__all__ = [
    "Center",
    "FundamentalSystem",
    "Multivector",
    "Odo",
    "OrbitLabel",
    "Realization",
    "SymplecticForm",
    "act",
    "app",
    "build_center",
    "classify_orbit",
    "contract",
    "detect_self_adjoint",
    "fiber_partners",
    "hermann_martin",
    "is_decomposable",
    "o5_decompose",
    "pluecker",
    "pp_center",
    "project",
    "recover_symplectic",
    "schubert_degree",
    "top_pairing",
    "verify_double_cover",
    "wedge",
]
