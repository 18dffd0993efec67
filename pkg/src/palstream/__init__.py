"""Streaming longest palindromic substring in sublinear space."""

from .additive import AdditiveEngine, abasic_run
from .estimators import AdditiveLPS, CombinedLPS, ExactWindowLPS, MultiplicativeLPS
from .exact_window import ExactResult, ResultKind, WindowedManacher, ebasic_run
from .fingerprint import DNA_COMPLEMENT, MERSENNE_61, HashConfig, make_config
from .generators import gen_nu, gen_planted, gen_random
from .mult_large import MultLargeEngine, make_multiplicative_engine
from .mult_small import MultSmallEngine, mbasic_run
from .oracle import oracle_lps, oracle_lps_naive

__version__ = "0.1.0"

__all__ = [
    "AdditiveEngine",
    "AdditiveLPS",
    "CombinedLPS",
    "DNA_COMPLEMENT",
    "ExactResult",
    "ExactWindowLPS",
    "HashConfig",
    "MERSENNE_61",
    "MultLargeEngine",
    "MultSmallEngine",
    "MultiplicativeLPS",
    "ResultKind",
    "WindowedManacher",
    "abasic_run",
    "ebasic_run",
    "gen_nu",
    "gen_planted",
    "gen_random",
    "make_config",
    "make_multiplicative_engine",
    "mbasic_run",
    "oracle_lps",
    "oracle_lps_naive",
]
