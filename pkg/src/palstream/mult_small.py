"""Multiplicative-error engine for ``0 < eps <= 1`` (time-to-live checkpoints).

Every prefix tuple ``I(j)`` enters the checkpoint list and stays for
``ttl(j) = 2**(q + 2 + beta(j))`` iterations, where ``beta(j)`` is the
position of the lowest set bit of ``j`` and ``q = ceil(log2(2/eps))``.
Retained checkpoints thin out geometrically with age, which keeps
``O(log(n eps) / eps)`` tuples while guaranteeing a palindrome of length at
least ``L / (1 + eps)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from ._engine import CursorEngine, full_scan_check
from ._types import EMPTY, Answer
from .fingerprint import HashConfig, extend, initial_tuple
from .segments import BinarySegments


def _as_fraction(eps) -> Fraction:
    if isinstance(eps, bool):
        raise TypeError("epsilon must be a real number")
    try:
        return Fraction(eps)
    except (TypeError, ValueError) as exc:
        raise TypeError(f"epsilon must be a real number, got {eps!r}") from exc


def q_epsilon(eps) -> int:
    """Smallest ``q`` with ``2**q >= 2/eps``, in exact rational arithmetic."""
    e = _as_fraction(eps)
    if not 0 < e <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {eps}")
    target = 2 / e
    q = 0
    while (1 << q) < target:
        q += 1
    return q


@dataclass(frozen=True)
class TtlParams:
    eps: float
    q_eps: int

    @classmethod
    def from_eps(cls, eps) -> "TtlParams":
        return cls(eps=eps, q_eps=q_epsilon(eps))


def beta(j: int) -> int:
    """Position of the rightmost 1-bit of ``j >= 1``."""
    if j < 1:
        raise ValueError("beta is defined for positive integers only")
    return (j & -j).bit_length() - 1


def ttl(j: int, params: TtlParams) -> int:
    return 1 << (params.q_eps + 2 + beta(j))


class MultSmallEngine(CursorEngine):
    """Real-time engine: one expiry probe and at most three checks per symbol."""

    width = 3

    def __init__(self, cfg: HashConfig, eps):
        self.params = TtlParams.from_eps(eps)
        super().__init__(cfg)
        self.eps = eps
        self._base = self.params.q_eps + 2
        self.bs = BinarySegments()
        # queues[b] holds list nodes of positions j with beta(j) == b, oldest first
        self.queues: list[deque] = []

    def push(self, a: int) -> None:
        i = self.i = self.i + 1
        node = self.sp_list.push_front(self.current)
        if i == 1:
            self._cursor = node
        b = self.bs.increment().beta()
        queues = self.queues
        while len(queues) <= b:
            queues.append(deque())
        qu = queues[b]
        if qu:
            head = qu[0]
            # early on the head of a class queue may not have expired yet
            if head.tup.i + (1 << (self._base + b)) == i:
                qu.popleft()
                self._unlink(head)
        qu.append(node)
        self._read(a)
        self._scan()

    def ttl(self, j: int) -> int:
        return ttl(j, self.params)

    def space_words(self) -> int:
        # tuples, one queue pointer per tuple, two words per bit segment
        return 6 * len(self.sp_list) + 2 * len(self.bs) + len(self.queues) + 9


def full_scan_answers(cfg: HashConfig, stream: Iterable[int], lifetime: Callable[[int], int]) -> Iterator[Answer]:
    """Reference engine: explicit expiry scan and a check of every stored tuple."""
    sp: list = []  # oldest first
    cur = initial_tuple(cfg)
    answer = EMPTY
    for i, a in enumerate(stream, 1):
        sp.append(cur)
        sp = [t for t in sp if t.i + lifetime(t.i) != i]
        cur = extend(cur, a, cfg)
        if i == 1:
            answer = Answer(1, 1)
        answer, _ = full_scan_check(reversed(sp), cur, i, answer, cfg)
        yield answer


def mbasic_answers(cfg: HashConfig, stream: Iterable[int], eps) -> Iterator[Answer]:
    params = TtlParams.from_eps(eps)
    return full_scan_answers(cfg, stream, lambda j: ttl(j, params))


def mbasic_run(cfg: HashConfig, stream: Iterable[int], eps) -> Answer:
    """Reference answer for any ``eps > 0``, routed like the real-time engines."""
    from .mult_large import reference_answers

    answer = EMPTY
    for answer in reference_answers(cfg, stream, eps):
        pass
    return answer
