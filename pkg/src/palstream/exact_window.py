"""Deterministic real-time windowed Manacher.

The offline procedure keeps ``c``, the centre of the longest
suffix-palindrome, and the radius array over integer and half-integer
centres.  Here centres and radii are stored doubled so both kinds share one
integer index: a palindrome ``S[i..j]`` has doubled centre ``i + j`` and
doubled radius ``j - i`` (``-1`` for the empty palindrome between two
symbols), and its length is ``radius2 + 1``.

Suffix-palindromes of length ``m`` or ``m + 1`` are never extended, so only
the last ``m + 1`` symbols and ``O(m)`` radii are ever read; both live in
circular buffers.  Incoming symbols wait in a queue and the procedure runs
at most three inner iterations per symbol, which keeps the queue below
``m / 2 + 2`` and never changes the final length.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Iterable, NamedTuple, Optional

from ._types import EMPTY, Answer

_ENDMARK = object()
INNER_BUDGET = 3


class ResultKind(str, enum.Enum):
    EXACT = "exact"
    AT_LEAST = "at_least"


class ExactResult(NamedTuple):
    kind: ResultKind
    pos: int
    length: int

    @property
    def exact(self) -> bool:
        return self.kind is ResultKind.EXACT


def _check_window(m) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"window must be an integer, got {m!r}")
    if m < 1:
        raise ValueError(f"window m must be >= 1, got {m}")
    return m


class WindowedManacher:
    """Streaming exact solver for palindromes shorter than ``m``."""

    def __init__(self, m: int):
        self.m = _check_window(m)
        self._w = m + 1
        self._r = 2 * m + 8
        self.cs: list = [_ENDMARK] * self._w
        self.crad = [0] * self._r
        self.q: deque = deque()
        self.n = 0
        self.c2 = 2
        self.pushed = 0
        self.L = 0
        self.best: Answer = EMPTY
        # mirror centre and symbol of an AddLetter call in progress
        self._s2: Optional[int] = None
        self._a = None
        self.max_inner = 0
        self.total_inner = 0
        self.max_queue = 0

    def push(self, a) -> None:
        self.pushed += 1
        self.q.append(a)
        if len(self.q) > self.max_queue:
            self.max_queue = len(self.q)
        done = self._resume(INNER_BUDGET)
        self.total_inner += done
        if done > self.max_inner:
            self.max_inner = done

    def push_many(self, symbols: Iterable) -> "WindowedManacher":
        for a in symbols:
            self.push(a)
        return self

    def _resume(self, budget: int) -> int:
        m, W, R = self.m, self._w, self._r
        cs, crad, q = self.cs, self.crad, self.q
        n, c2, s2, a = self.n, self.c2, self._s2, self._a
        spent = 0
        while True:
            if s2 is None:
                if not q:
                    break
                a = q.popleft()
                if n == 0:
                    cs[1] = a
                    n, c2 = 1, 2
                    crad[2] = 0
                    if self.L < 1:
                        self.L, self.best = 1, Answer(1, 1)
                    continue
                cs[(n + 1) % W] = a
                s2 = c2
            if spent == budget:
                break
            spent += 1
            n2 = 2 * n
            mirror = 2 * s2 - c2
            assert n2 - mirror <= 2 * m + 1, "radius read outside the window"
            r = crad[mirror % R]
            if n2 - c2 < r:
                r = n2 - c2
            grown = False
            # suffix-palindromes of length >= m are treated as non-extendable
            if c2 + r == n2 and r + 1 < m:
                idx = (c2 - r) // 2 - 1
                assert n - idx < m, "symbol read outside the window"
                if cs[idx % W] == a:
                    r += 2
                    grown = True
            crad[c2 % R] = r
            if not grown:
                c2 += 1
                if c2 < n2 + 2:
                    continue
                r = crad[c2 % R] = 0
            n += 1
            s2 = None
            if r + 1 > self.L:
                self.L = r + 1
                self.best = Answer(n - r, r + 1)
        self.n, self.c2, self._s2, self._a = n, c2, s2, a
        return spent

    def result(self) -> ExactResult:
        """Classify without draining the queue; pending symbols cannot change ``L``."""
        kind = ResultKind.AT_LEAST if self.L >= self.m else ResultKind.EXACT
        return ExactResult(kind, self.best.pos, self.best.length)

    finish = result

    def space_words(self) -> int:
        return self._w + self._r + len(self.q) + 10


def ebasic_run(stream: Iterable, m: Optional[int] = None) -> tuple[int, int]:
    """Offline reference: returns ``(L, pos)``; with ``m`` the same length clamp applies."""
    if m is not None:
        _check_window(m)
    S = [_ENDMARK] + list(stream)
    n_total = len(S) - 1
    if n_total == 0:
        return 0, 0
    rad = [0] * (2 * n_total + 4)
    limit = m if m is not None else n_total + 2
    c2, n, L, pos = 2, 1, 1, 1
    while n < n_total:
        a = S[n + 1]
        s2 = c2
        n2 = 2 * n
        while c2 < n2 + 2:
            r = min(rad[2 * s2 - c2] if 2 * s2 - c2 >= 0 else 0, n2 - c2)
            if c2 + r == n2 and r + 1 < limit and S[(c2 - r) // 2 - 1] == a:
                rad[c2] = r + 2
                break
            rad[c2] = r
            c2 += 1
        n += 1
        r = rad[c2]
        if r + 1 > L:
            L, pos = r + 1, n - r
    return L, pos
