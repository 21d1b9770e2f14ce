"""t-scaled hypercomplex numbers: ring arithmetic, 2x2 realizations, spectra
and free-probability moments."""
from .errors import (
    BadScaleError,
    ClassificationMismatchError,
    HypercomplexError,
    NonFiniteError,
    NotClosedError,
    NotInRealizationError,
    ParseError,
    SimilarityNotEstablishedError,
    SingularError,
    ZeroBError,
    ZeroElementError,
    ZeroInputError,
)
from .freeprob import (
    OperatorClass,
    PolarForm,
    StarWord,
    all_word_moments,
    all_words,
    classify_operator,
    moment_sequence,
    normalized_trace,
    polar_decompose,
    trace,
    word_moment_closed,
    word_moment_oracle,
)
from .realization import (
    IDENTITY,
    Matrix2C,
    MembershipReport,
    adjoint_in_ring,
    mat_add,
    mat_adjoint,
    mat_det,
    mat_inverse,
    mat_mul,
    mat_trace,
    membership,
    realize,
    unrealize,
)
from .ring import (
    DEFAULT_TOL,
    ONE,
    ZERO,
    AlgebraicClass,
    Hypercomplex,
    add,
    classify_algebraic,
    det,
    inverse,
    mul,
)
from .spectral import (
    RealPoly,
    SpectralClass,
    SpectralValue,
    char_poly,
    classify_spectral,
    conjugator,
    poly_eval_matrix,
    radicand,
    similarity_residual,
    spectral_form,
    spectral_mapping,
    spectral_related,
    spectralize,
    spectrum,
)
from .textio import parse_complex, parse_hypercomplex, render_complex, render_hypercomplex
from .verify import run_verify

__version__ = "0.1.0"
