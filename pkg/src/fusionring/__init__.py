"""Exact-arithmetic engine for fusion rings of compact-type quantum groups.

The core objects are irreducible labels with integer dimensions and a
provider interface producing exact product decompositions.  On top of
that sit closure computations (tensor-generated, conjugation-stable,
normality-forced), torsion certification, identity-component analysis,
ascending-chain probes, dimension-ideal recovery, and a numerical module
that builds concrete matrix models for the sign-graded ladder ring at
real q < 0 and verifies them against the symbolic fusion rules.
"""

from .axioms import AxiomReport, AxiomViolation, check_axioms
from .components import (
    ComponentReport,
    ConnectednessReport,
    connectedness_probe,
    factor_restriction,
    identity_component_report,
    restriction_hom_dim,
    s_part,
)
from .core import (
    Budget,
    Decomposition,
    FusionProvider,
    IrrLabel,
    VirtualElement,
    canonical_key,
    canonical_sort,
)
from .errors import (
    BadParameter,
    FusionError,
    IllConditioned,
    InvalidRing,
    NotAGroup,
    NotFinite,
    NotSaturated,
    ParseError,
    UnknownLabel,
    UnsupportedProvider,
)
from .lattice import IntegerLattice
from .rings import (
    AuProvider,
    DirectProductProvider,
    FiniteGroupProvider,
    FiniteTableProvider,
    FreeProductProvider,
    SO3Provider,
    SU2Provider,
    UqSU11Provider,
    WordGroupProvider,
    WordGroupSpec,
    au_ring,
    builtin_finite_rings,
    character_ring,
    direct_product,
    dump_ring_json,
    finite_group_ring,
    free_product,
    load_ring_json,
    so3_ring,
    suq2_ring,
    uq_su11_ring,
    word_group,
)
from .torsion import (
    ChainProbeReport,
    DimensionIdealReport,
    NormalityViolation,
    NSequenceReport,
    Subcategory,
    TorsionScanReport,
    TorsionVerdict,
    ascending_chain_probe,
    central_closure,
    dimension_ideal_recover,
    enumerate_saturated_subrings,
    generated_subring,
    is_torsion,
    n_sequence_cocommutative,
    normal_forcing_closure,
    normality_consistency,
    torsion_subcategory,
)
from .uqnumeric import (
    RESIDUAL_TOL,
    SV_GAP,
    RepMatrices,
    build_pi,
    build_u,
    check_star,
    full_verification,
    fusion_crosscheck,
    intertwiner_space,
    q_int,
    tensor_rep,
    unitarizability_witness,
    verify_conjugate_equations,
    verify_permutation_intertwiner,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
