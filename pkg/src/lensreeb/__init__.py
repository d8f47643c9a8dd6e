"""Exact invariants of Reeb dynamics on lens spaces.

The package computes, in exact rational arithmetic:

* orbifold degree tables of cyclic quotient singularities (`chen_ruan`),
* toric models of lens spaces with their Conley-Zehnder spectra (`toric`),
* closed-form ellipsoid spectra as ground truth (`ellipsoid`),
* finite counting certificates for orbit budgets (`certify`),
* bulk invariant sweeps (`sweep`) and a CLI (`lensreeb`).
"""

__version__ = "0.1.0"

from .arith import det_int, ext_gcd, frac_part, mod_inverse, parse_rat, rat_floor, rat_str
from .certify import (
    BudgetOrbit,
    CarrierSequence,
    OrbitBudget,
    carrier_density,
    carrier_density_estimate,
    check_final_inequality,
    iterate_mean_relation,
    matching_feasibility,
    orbit_budget,
    orbit_density,
    single_orbit_contradiction,
)
from .chen_ruan import GradedTable, Sector, age, cr_max_degree, cr_table, existence_report, sector
from .ellipsoid import (
    EllipsoidModel,
    check_dynamical_convexity,
    class_budget,
    ellipsoid_cz,
    ellipsoid_mean_index,
    ellipsoid_model,
    orbit_class,
    symmetric_spectrum,
)
from .lens import (
    LensSpace,
    first_chern_mod_p,
    generator_classes,
    is_normalized,
    normalize,
    validate,
)
from .sweep import SweepConfig, load_sweep_config, run_sweep, sweep_config
from .toric import (
    CzSpectrum,
    ToricModel,
    bezout_pairs,
    build_toric_model,
    class_min_index,
    cz_index,
    cz_spectrum,
    hc_table,
    k0_threshold,
    mean_index,
    verify_basis_identity,
    verify_determinant,
    verify_kernel_generator,
    verify_periodicity,
    with_bezout_pair,
)
from . import errors

__all__ = [
    "__version__",
    "errors",
    "det_int",
    "ext_gcd",
    "frac_part",
    "mod_inverse",
    "parse_rat",
    "rat_floor",
    "rat_str",
    "BudgetOrbit",
    "CarrierSequence",
    "OrbitBudget",
    "carrier_density",
    "carrier_density_estimate",
    "check_final_inequality",
    "iterate_mean_relation",
    "matching_feasibility",
    "orbit_budget",
    "orbit_density",
    "single_orbit_contradiction",
    "GradedTable",
    "Sector",
    "age",
    "cr_max_degree",
    "cr_table",
    "existence_report",
    "sector",
    "EllipsoidModel",
    "check_dynamical_convexity",
    "class_budget",
    "ellipsoid_cz",
    "ellipsoid_mean_index",
    "ellipsoid_model",
    "orbit_class",
    "symmetric_spectrum",
    "LensSpace",
    "first_chern_mod_p",
    "generator_classes",
    "is_normalized",
    "normalize",
    "validate",
    "SweepConfig",
    "load_sweep_config",
    "run_sweep",
    "sweep_config",
    "CzSpectrum",
    "ToricModel",
    "bezout_pairs",
    "build_toric_model",
    "class_min_index",
    "cz_index",
    "cz_spectrum",
    "hc_table",
    "k0_threshold",
    "mean_index",
    "verify_basis_identity",
    "verify_determinant",
    "verify_kernel_generator",
    "verify_periodicity",
    "with_bezout_pair",
]
