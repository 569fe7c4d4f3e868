"""Exact equivariant volumes for linearized actions on products of
projective spaces: isotypic section counts, invariant exponents, moment
images, GIT stability classes, compatibility certificates and the
closed-form volume predictor, all in exact arithmetic."""

from .model import (
    GroupSpec,
    LinearizedBundle,
    ProjectiveFactor,
    Rational,
    Scenario,
    ScenarioError,
    UnsupportedScenario,
    circle_scenario,
    scenario_from_dict,
    scenario_power,
    scenario_to_dict,
    su2_scenario,
    tensor_power,
    tensor_product,
    validate_scenario,
    weight_of_monomial,
    with_bundle,
)
from .counting import (
    EngineLimit,
    IsotypicTable,
    brute_force_oracle,
    full_weight_distribution,
    isotypic_multiplicity,
    isotypic_table,
    section_dimension,
    total_dimension,
)
from .geometry import (
    CompatibilityCertificate,
    MomentImage,
    StabilityReport,
    StabilizerData,
    classify_stability,
    dh_slice_volume,
    dim_V_mu,
    generic_stabilizer,
    moment_image,
    numerically_compatible,
    predicted_volume,
    vanishing_certificate,
)
from .volumes import (
    ExponentResult,
    FitParams,
    ResidueVolume,
    VolumeEstimate,
    equivariant_volume,
    g_exponent,
    g_semigroup,
    homogeneity_transform,
    mu_semigroup,
    residue_volume,
)
from .corpus import corpus_scenario, default_corpus, scenario_path

__all__ = [name for name in dir() if not name.startswith("_")]
