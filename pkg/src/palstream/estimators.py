"""scikit-learn style front ends for the streaming engines.

``fit`` consumes one stream from scratch, ``partial_fit`` continues it (so a
stream can be fed chunk by chunk), and the fitted attributes ``start_``,
``length_``, ``exact_``, ``n_symbols_`` and ``peak_space_words_`` describe
the result.  ``transform`` maps a batch of independent streams to an
``(n_streams, 2)`` array of ``(start, length)`` without touching the fitted
state, so the finders can sit inside a :class:`~sklearn.pipeline.Pipeline`.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .additive import AdditiveEngine
from .exact_window import WindowedManacher
from .fingerprint import DNA_COMPLEMENT, make_config
from .mult_large import make_multiplicative_engine
from .validation import check_epsilon, check_error, check_symbols, check_window


class _StreamingLPS(TransformerMixin, BaseEstimator):
    def _make_engine(self):
        raise NotImplementedError

    def _hash_config(self):
        return make_config(self.seed, complement=DNA_COMPLEMENT if self.complement else None)

    def _start(self):
        self.engine_ = self._make_engine()
        self.n_symbols_ = 0
        self.peak_space_words_ = self.engine_.space_words()

    def _push(self, symbols):
        engine = self.engine_
        push, space = engine.push, engine.space_words
        peak = self.peak_space_words_
        for a in symbols:
            push(a)
            w = space()
            if w > peak:
                peak = w
        self.peak_space_words_ = peak
        self.n_symbols_ += len(symbols)

    def _answer(self):
        return self.engine_.answer, False

    def _sync(self):
        (start, length), exact = self._answer()
        self.start_, self.length_, self.exact_ = start, length, exact

    def fit(self, X, y=None):
        """Consume the stream ``X`` from the beginning."""
        self._start()
        return self.partial_fit(X)

    def partial_fit(self, X, y=None):
        """Continue the current stream with the symbols of ``X``."""
        if not hasattr(self, "engine_"):
            self._start()
        self._push(check_symbols(X, alphabet=self._alphabet()))
        self._sync()
        return self

    def _alphabet(self):
        if getattr(self, "complement", False):
            return b"ACGT"
        return None

    def transform(self, X):
        """Answer ``(start, length)`` for each stream in ``X``, each from a fresh engine."""
        rows = [self.__class__(**self.get_params()).fit(s) for s in X]
        return np.array([[r.start_, r.length_] for r in rows], dtype=np.int64).reshape(-1, 2)

    def max_ops_per_push(self) -> int:
        check_is_fitted(self, "engine_")
        return self.engine_.stats.max_ops

    def operation_counts(self) -> dict:
        check_is_fitted(self, "engine_")
        return self.engine_.stats.as_dict()


class AdditiveLPS(_StreamingLPS):
    """Longest palindrome within additive error ``error`` using ``O(n / error)`` words.

    Parameters
    ----------
    error : int, default=2
        Additive error budget, at least 2.
    seed : int, default=0
        Seed for the random fingerprint base.
    complement : bool, default=False
        Search reverse-complement palindromes over ``ACGT``.
    """

    def __init__(self, error=2, seed=0, complement=False):
        self.error = error
        self.seed = seed
        self.complement = complement

    def _make_engine(self):
        return AdditiveEngine(self._hash_config(), check_error(self.error))


class MultiplicativeLPS(_StreamingLPS):
    """Longest palindrome within factor ``1 + epsilon`` using logarithmic space.

    ``epsilon`` in ``(0, 1]`` uses binary time-to-live checkpoints,
    ``(1, 7)`` runs as ``epsilon = 1`` and ``>= 7`` switches to the base-k
    schedule.
    """

    def __init__(self, epsilon=1.0, seed=0, complement=False):
        self.epsilon = epsilon
        self.seed = seed
        self.complement = complement

    def _make_engine(self):
        return make_multiplicative_engine(self._hash_config(), check_epsilon(self.epsilon))


class ExactWindowLPS(_StreamingLPS):
    """Exact longest palindrome when shorter than ``window``; otherwise one of length ``window`` or ``window + 1``.

    Deterministic, ``O(window)`` words.  ``exact_`` tells which case applies.
    """

    def __init__(self, window=64):
        self.window = window

    def _make_engine(self):
        return WindowedManacher(check_window(self.window))

    def _answer(self):
        r = self.engine_.result()
        return (r.pos, r.length), r.exact

    def max_ops_per_push(self) -> int:
        check_is_fitted(self, "engine_")
        return self.engine_.max_inner

    def operation_counts(self) -> dict:
        check_is_fitted(self, "engine_")
        e = self.engine_
        return {"max_inner": e.max_inner, "total_inner": e.total_inner, "max_queue": e.max_queue}


class _Pair:
    """Feeds every symbol to a multiplicative engine and a window engine."""

    def __init__(self, approx, window):
        self.approx = approx
        self.window = window

    def push(self, a):
        self.approx.push(a)
        self.window.push(a)

    def space_words(self):
        return self.approx.space_words() + self.window.space_words()


class CombinedLPS(_StreamingLPS):
    """Run the multiplicative and exact-window finders side by side.

    Reports the window answer when it is exact, else the multiplicative one.
    """

    def __init__(self, epsilon=1.0, window=64, seed=0):
        self.epsilon = epsilon
        self.window = window
        self.seed = seed

    def _make_engine(self):
        approx = make_multiplicative_engine(make_config(self.seed), check_epsilon(self.epsilon))
        return _Pair(approx, WindowedManacher(check_window(self.window)))

    def _answer(self):
        r = self.engine_.window.result()
        if r.exact:
            return (r.pos, r.length), True
        return self.engine_.approx.answer, False

    def max_ops_per_push(self) -> int:
        check_is_fitted(self, "engine_")
        return self.engine_.approx.stats.max_ops + self.engine_.window.max_inner

    def operation_counts(self) -> dict:
        check_is_fitted(self, "engine_")
        w = self.engine_.window
        return {**self.engine_.approx.stats.as_dict(), "max_inner": w.max_inner, "max_queue": w.max_queue}
