"""Weight distributions of the cyclic codes C(p, m) via Hermitian forms graph spectra."""

from .cayley_spectrum import (
    build_connection_set,
    character_value,
    moore_matrix_nonsingular,
    phi,
    spectrum_of_cayley,
    verify_isomorphism,
)
from .code_construct import (
    CoefficientTuple,
    WeightDistribution,
    brute_force_weight_distribution,
    build_code,
    codeword,
)
from .exp_sums import (
    closed_form_weight_distribution,
    exp_sum_T,
    t_value_distribution,
    weight_from_T,
    weights_from_spectrum,
)
from .finite_field import ZERO, CodeParams, FieldCtx, build_field, minimal_polynomial, trace
from .hermitian_graph import closed_form_spectrum, enumerate_rank1, gaussian_binomial, hermitian_rank

__version__ = "0.1.0"
