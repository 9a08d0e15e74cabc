"""Entropy of finite distributions and density operators through the
ball-separation region and its piecewise-linear boundary curve."""

from .contractions import (
    BlockStructure,
    MonotonicityReport,
    Partition,
    SequenceMap,
    Unitary,
    apply_map,
    apply_transform,
    cond_exp_partition,
    conjugate,
    induced_norm_1,
    induced_norm_inf,
    monotonicity_report,
    permutation_unitary,
    pinch,
    project_blocks,
    project_partition,
    random_doubly_stochastic,
)
from .entropy import entropy_boundary, entropy_direct, entropy_quadrature
from .errors import *  # noqa: F401,F403
from .oracle import (
    Decomposition,
    SeparationVerdict,
    clip_decomposition,
    oracle_consistency,
    random_split_norms,
    witness_search,
)
from .profile import EntropyProfile, build_profile, eval_F, in_region, profile_dominates
from .spectral import EigenDecomposition, Spectrum, eigen_hermitian, jacobi_eigh, spectrum_of
from .states import (
    DensityOperator,
    DiscreteDistribution,
    HermitianMatrix,
    JordanParts,
    RealSequence,
    hermitian,
    jordan_decompose,
    make_density,
    make_distribution,
    norm_inf,
    norm_one,
    pairing,
    sequence,
)

__version__ = "0.1.0"
