"""Exact-arithmetic toolkit for matrix-tuple brane morphisms.

Scalars live in Q(i); morphisms from an Azumaya point are commuting
matrix tuples; their images, Chan-Paton pushforwards, orbit-closure
order, Higgsing deformations, spectral curves, noncommutative 1-forms and
torus A-brane class arithmetic are all computed without floating point.
"""

from .scalars import GaussianRational, Rational, gr
from .poly import MultiPoly, UniPoly
from .linalg import Matrix, char_poly, commutator, kernel_basis, min_poly, rank
from .roots import split_roots
from .errors import (
    DomainError,
    NonConstantA,
    ProfileError,
    SolvabilityViolated,
    SpectrumNotSplit,
)
from .azpoint import (
    AffinePresentation,
    PushforwardModule,
    RepPoint,
    SupportLengthData,
    conjugacy,
    hilbert_chow,
    image_ideal_univar,
    intertwiner_space,
    is_conjugate,
    pushforward,
    rep_check,
    support_length,
    vanishing_ideal,
)
from .orbits import (
    JordanData,
    OrbitLabel,
    filtration_ranks,
    jordan_data,
    maximal_orbit,
    minimal_orbit,
    orbit_closure_contains,
    precede,
)
from .higgsing import (
    BranchReport,
    HiggsProblem,
    HiggsSolution,
    PolyMatrix,
    WeylTrunc,
    classify_deformation,
    fundamental_solutions,
    ode_residual,
    solvability_check,
    spectral_curve,
    weyl_commutator_check,
)
from .torus import (
    AzCircleMorphism,
    Component,
    HomologyClass,
    SurrogateClass,
    TorusGeometry,
    WeightedCycle,
    amalgamate,
    direction,
    intersection,
    is_special_lagrangian,
    pushforward_cycle,
    slag_representative,
    total_class,
    validate_profile,
)
from .kahler import (
    ClassicalForm,
    FormalForm,
    MorphismToAffine,
    MPolyMatrix,
    classical_d,
    d,
    leibniz_expand,
    pullback,
    pullback_form,
    tensor,
    trace_form,
)

__version__ = "0.1.0"
