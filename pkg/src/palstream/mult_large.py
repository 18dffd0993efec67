"""Multiplicative-error engine for large ``eps`` (base-k time-to-live schedule).

With ``k`` the largest even integer ``<= (1 + eps) / 2``, a tuple ``I(j)``
lives ``4`` iterations when ``k`` does not divide ``j`` and
``(9/2) * k**beta'(j)`` iterations otherwise, ``beta'`` being the position
of the lowest non-zero base-k digit.  This keeps ``O(log n / log(1 + eps))``
tuples.  Values ``1 < eps < 7`` are served by the small-eps engine with
``eps = 1``; :func:`make_multiplicative_engine` does that routing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from ._engine import CursorEngine
from ._types import Answer
from .fingerprint import HashConfig
from .mult_small import MultSmallEngine, _as_fraction, full_scan_answers, mbasic_answers
from .segments import KarySegments

LARGE_EPS_THRESHOLD = 7


def choose_k(eps) -> int:
    """Largest even ``k <= (1 + eps) / 2``; requires ``eps >= 7``."""
    e = _as_fraction(eps)
    if e < LARGE_EPS_THRESHOLD:
        raise ValueError(f"the base-k schedule needs eps >= 7, got {eps}")
    half = (1 + e) / 2
    k = int(half) // 2 * 2
    return k


@dataclass(frozen=True)
class KaryParams:
    eps: float
    k: int

    @classmethod
    def from_eps(cls, eps) -> "KaryParams":
        return cls(eps=eps, k=choose_k(eps))


def beta_prime(j: int, k: int) -> int:
    if j < 1:
        raise ValueError("beta' is defined for positive integers only")
    b = 0
    while j % k == 0:
        j //= k
        b += 1
    return b


def _ttl_from_beta(b: int, k: int) -> int:
    return 9 * (k ** b // 2) if b > 0 else 4


def ttl_prime(j: int, params: KaryParams) -> int:
    return _ttl_from_beta(beta_prime(j, params.k), params.k)


class MultLargeEngine(CursorEngine):
    """Real-time engine with up to two expiry probes and three checks per symbol."""

    width = 3

    def __init__(self, cfg: HashConfig, eps):
        self.params = KaryParams.from_eps(eps)
        super().__init__(cfg)
        self.eps = eps
        self.k = self.params.k
        self.ks = KarySegments(self.k)
        self.queues: list[deque] = [deque()]
        # ttl' per beta' class, grown lazily with the counter
        self._ttl_by_class: list[int] = [4]

    def _ttl_class(self, b: int) -> int:
        table = self._ttl_by_class
        while len(table) <= b:
            table.append(_ttl_from_beta(len(table), self.k))
            self.queues.append(deque())
        return table[b]

    def _expire(self, b: int, i: int) -> None:
        qu = self.queues[b]
        if qu:
            head = qu[0]
            if head.tup.i + self._ttl_by_class[b] == i:
                qu.popleft()
                self._unlink(head)

    def push(self, a: int) -> None:
        i = self.i = self.i + 1
        node = self.sp_list.push_front(self.current)
        if i == 1:
            self._cursor = node
        b = self.ks.increment().beta()
        self._ttl_class(b + 1)
        # a tuple expiring now has beta' equal to beta'(i) + 1, or 0
        self._expire(b + 1, i)
        self._expire(0, i)
        self.queues[b].append(node)
        self._read(a)
        self._scan()

    def ttl(self, j: int) -> int:
        return ttl_prime(j, self.params)

    def space_words(self) -> int:
        return 6 * len(self.sp_list) + 2 * len(self.ks) + len(self.queues) + 9


def reference_answers(cfg: HashConfig, stream: Iterable[int], eps) -> Iterator[Answer]:
    """Full-scan reference matching :func:`make_multiplicative_engine` routing."""
    e = _as_fraction(eps)
    if e <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    if e <= 1:
        return mbasic_answers(cfg, stream, eps)
    if e < LARGE_EPS_THRESHOLD:
        return mbasic_answers(cfg, stream, 1)
    params = KaryParams.from_eps(eps)
    return full_scan_answers(cfg, stream, lambda j: ttl_prime(j, params))


def make_multiplicative_engine(cfg: HashConfig, eps) -> Union[MultSmallEngine, MultLargeEngine]:
    """Pick the engine for ``eps``: ``(0, 1]`` as is, ``(1, 7)`` as ``eps = 1``, else base-k."""
    e = _as_fraction(eps)
    if e <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    if e <= 1:
        return MultSmallEngine(cfg, eps)
    if e < LARGE_EPS_THRESHOLD:
        return MultSmallEngine(cfg, 1)
    return MultLargeEngine(cfg, eps)

