"""Prime sifting, eta/zeta numerics and zero-ordinate predictions."""

from fractions import Fraction

from ._zetaforge import (
    CacheError,
    CompletenessError,
    ConvergenceError,
    DomainError,
    NumericalError,
    PoleError,
    SelfCheckError,
    SingularityError,
    __version__,
    empirical_sift,
    eta2_accelerated,
    eta_m_partial,
    euler_product_partial,
    functional_equation_residual,
    hardy_z,
    lambda_partial,
    lambda_relative_error,
    predicted_y_asymptotic,
    predicted_y_prime_pair,
    scan_zeros,
    sieve_primes,
    validate,
    zero_count_estimate,
    zeta,
    zeta_partial_corrected,
)
from ._zetaforge import removal_ratios as _removal_ratios


def removal_ratios(count):
    """Exact removal ratios as Fractions."""
    return [Fraction(int(num), int(den)) for num, den in _removal_ratios(count)]


__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
