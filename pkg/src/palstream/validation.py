"""Input and parameter validation shared by the estimators and the CLI."""

from __future__ import annotations

import numbers
from collections.abc import Iterable

import numpy as np
from sklearn.utils.validation import check_scalar

from .fingerprint import MERSENNE_61


def check_symbols(X, *, alphabet=None, upper: int = MERSENNE_61) -> list[int]:
    """Convert a stream-like object to a list of non-negative integer symbols.

    ``str`` maps each character to its code point, ``bytes`` to byte values,
    and 1-D integer arrays or iterables are taken as they are.  ``alphabet``
    (any iterable of allowed symbols, or a ``str``/``bytes`` of them)
    restricts the accepted values.
    """
    if isinstance(X, str):
        symbols = [ord(ch) for ch in X]
    elif isinstance(X, (bytes, bytearray, memoryview)):
        symbols = list(bytes(X))
    elif isinstance(X, np.ndarray):
        if X.ndim != 1:
            raise ValueError(f"expected a 1-D symbol array, got shape {X.shape}")
        if X.size and not np.issubdtype(X.dtype, np.integer):
            raise ValueError(f"expected integer symbols, got dtype {X.dtype}")
        symbols = [int(v) for v in X]
    elif isinstance(X, Iterable):
        symbols = []
        for v in X:
            if isinstance(v, bool) or not isinstance(v, numbers.Integral):
                raise ValueError(f"symbols must be integers, got {v!r}")
            symbols.append(int(v))
    else:
        raise ValueError(f"cannot interpret {type(X).__name__} as a symbol stream")
    if symbols and (min(symbols) < 0 or max(symbols) >= upper):
        raise ValueError(f"symbols must lie in [0, {upper})")
    if alphabet is not None:
        allowed = set(check_symbols(alphabet))
        bad = {v for v in symbols if v not in allowed}
        if bad:
            raise ValueError(f"symbols outside the alphabet: {sorted(bad)[:8]}")
    return symbols


def check_error(E) -> int:
    return check_scalar(E, "error", numbers.Integral, min_val=2)


def check_epsilon(eps) -> float:
    return check_scalar(eps, "epsilon", numbers.Real, min_val=0, include_boundaries="neither")


def check_window(m) -> int:
    return check_scalar(m, "window", numbers.Integral, min_val=1)
