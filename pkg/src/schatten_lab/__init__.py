"""Orthogonality and parallelism of matrices under Schatten and induced norms.

The package provides: complex-matrix primitives (polar/modulus/spectral
factorizations), Schatten and induced norm evaluation with numerical radii,
Birkhoff-James / isosceles orthogonality predicates with trace-form
shortcuts, norm-parallelism predicates with witnesses, seeded randomized law
suites with failure replay, and a command-line interface.
"""

from .cmatrix import (
    ConvergenceFailure,
    PolarFactors,
    SvdFactors,
    abs_power,
    eigenvalues,
    hermitian_eigensystem,
    loewner_geq,
    modulus,
    null_space,
    polar,
    singular_values,
    support_projection,
    svd,
)
from .norms import (
    FROBENIUS,
    INF,
    NormSpec,
    RadiusResult,
    SPECTRAL,
    TRACE,
    induced_norm,
    norm_value,
    numerical_radius_banach,
    numerical_radius_hilbert,
    operator_norm,
    schatten_norm,
    vector_norm,
)
from .ortho import (
    LoewnerDominationReport,
    SupportReport,
    Verdict,
    bj_definitional,
    bj_trace,
    clarkson_gap,
    default_gamma_samples,
    disjoint_supports,
    isosceles,
    loewner_domination,
    loewner_identity_test,
    norm_additivity,
    semi_inner_product,
)
from .parallel import (
    IsometryTransferReport,
    NormingSet,
    ParallelVerdict,
    WitnessReport,
    eigen_parallel_identity,
    epsilon_isometry_transfer,
    hilbert_parallel_witness,
    linearly_dependent,
    norming_set,
    parallel_definitional,
    parallel_identity_radius,
    parallel_identity_trace,
    parallel_trace_class,
    parallel_trace_p,
    vector_parallel,
)
from .laws import (
    EnsembleConfig,
    EnsembleMiscalibration,
    FailureRecord,
    Fixture,
    FixtureResult,
    SUITES,
    SuiteReport,
    fixtures,
    replay_failure,
    run_fixtures,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceFailure",
    "PolarFactors",
    "SvdFactors",
    "abs_power",
    "eigenvalues",
    "hermitian_eigensystem",
    "loewner_geq",
    "modulus",
    "null_space",
    "polar",
    "singular_values",
    "support_projection",
    "svd",
    "FROBENIUS",
    "INF",
    "NormSpec",
    "RadiusResult",
    "SPECTRAL",
    "TRACE",
    "induced_norm",
    "norm_value",
    "numerical_radius_banach",
    "numerical_radius_hilbert",
    "operator_norm",
    "schatten_norm",
    "vector_norm",
    "LoewnerDominationReport",
    "SupportReport",
    "Verdict",
    "bj_definitional",
    "bj_trace",
    "clarkson_gap",
    "default_gamma_samples",
    "disjoint_supports",
    "isosceles",
    "loewner_domination",
    "loewner_identity_test",
    "norm_additivity",
    "semi_inner_product",
    "IsometryTransferReport",
    "NormingSet",
    "ParallelVerdict",
    "WitnessReport",
    "eigen_parallel_identity",
    "epsilon_isometry_transfer",
    "hilbert_parallel_witness",
    "linearly_dependent",
    "norming_set",
    "parallel_definitional",
    "parallel_identity_radius",
    "parallel_identity_trace",
    "parallel_trace_class",
    "parallel_trace_p",
    "vector_parallel",
    "EnsembleConfig",
    "EnsembleMiscalibration",
    "FailureRecord",
    "Fixture",
    "FixtureResult",
    "SUITES",
    "SuiteReport",
    "fixtures",
    "replay_failure",
    "run_fixtures",
    "run_suite",
    "__version__",
]
