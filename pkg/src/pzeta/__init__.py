"""Prime zeta function P(s) for Re(s) > 1/2.

Evaluates P(s) by a truncated prime sum plus a complex exponential
integral, and checks it against Moebius inversion of log zeta and the
direct prime sum.
"""

from .errors import (
    CapacityError,
    ConvergenceError,
    DomainError,
    E1OverflowError,
    PoleError,
    PZetaError,
    RangeError,
)
from .primes import MobiusTable, PrimeTable, mobius_sieve, prime_count, sieve
from .primezeta import (
    Evaluation,
    Method,
    deviation,
    error_bound,
    prime_zeta_direct,
    prime_zeta_mobius,
    prime_zeta_rh,
    prime_zeta_rh_corrected,
)
from .specfun import (
    SeriesControl,
    exp_integral_e1,
    exp_integral_ei,
    log_integral,
    riemann_zeta,
)

__version__ = "0.1.0"
