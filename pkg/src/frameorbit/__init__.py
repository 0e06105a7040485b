"""Frame calculus and operator-orbit representability for finite frames in C^d."""
from .exceptions import *  # noqa: F401,F403
from .frames import (
    Frame,
    FrameDiagnostics,
    IndexKind,
    IndexModel,
    canonical_dual,
    canonical_tight,
    cross_gram,
    diagnostics,
    dual_cross_gram,
    excess_kernel,
    excess_sum,
    frame_bounds,
    frame_operator,
    gram,
    is_frame,
    synthesis_matrix,
)
from .linalg import (
    Tolerance,
    hermitian_eig,
    inv_sqrt_hermitian,
    nullspace,
    solve_exact_or_reject,
)
from .orbits import (
    DecompositionReport,
    RepresentabilityVerdict,
    build_generator,
    circulant_cross_gram_test,
    classify_operator,
    imprimitivity_obstruction,
    kernel_shift_invariance,
    necessary_conditions,
    orthogonality_components,
    represent,
    verify_orbit,
)
from .search import OrderingSearchResult, ordering_search
from .structured import (
    BandSpec,
    GaborParams,
    block_harmonic_frame,
    dyadic_band_frame,
    exponential_frame,
    gabor_dual_window,
    gabor_system,
    harmonic_frame,
    modulation_op,
    translation_op,
    union_onb_frame,
    weyl_phase_check,
)

__version__ = "0.1.0"
