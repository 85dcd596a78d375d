"""Fourier transforms of sampled functions as weighted sums of complex error functions."""
from gaussft._backend import available_backends, get_backend, set_backend
from gaussft.errors import FaddeevaOverflowError, NumericalError, QuadratureError
from gaussft.faddeeva import (
    dawson,
    erf_complex,
    fresnel,
    normal_cdf,
    voigt,
    w,
    w_quadrature_oracle,
    w_weighted,
)
from gaussft.reference import (
    analytic_G,
    analytic_H,
    delta_envelope,
    example_even,
    example_f,
    example_odd,
    quadrature_ft_oracle,
)
from gaussft.sampling import SampledFunction, TransformConfig, oscillation_metric, reconstruct
from gaussft.transform import (
    Direction,
    EvaluationGrid,
    Spectrum,
    WeightTable,
    forward_even,
    forward_harmonic,
    forward_odd,
    forward_truncated,
    forward_weighted,
    forward_with_table,
    inverse_harmonic,
    inverse_truncated,
    inverse_weighted,
    inverse_with_table,
    precompute_weights,
)

__version__ = "0.1.0"
