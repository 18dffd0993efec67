"""Additive-error streaming palindrome search.

Every ``t = floor(E/2)``-th prefix tuple is kept as a checkpoint, so any
palindrome of length ``L`` has a checkpoint within ``t`` of its start and a
palindrome of length at least ``L - E`` is found.  :class:`AdditiveEngine`
does constant work per symbol; :func:`abasic_run` is the quadratic reference
that checks every checkpoint on every symbol.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from ._engine import CursorEngine, full_scan_check
from ._types import EMPTY, Answer
from .fingerprint import HashConfig, extend, initial_tuple


def checkpoint_spacing(E: int) -> int:
    if isinstance(E, bool) or not isinstance(E, int):
        raise TypeError(f"additive error must be an integer, got {E!r}")
    if E < 2:
        raise ValueError(f"additive error E must be >= 2, got {E}")
    return E // 2


class AdditiveEngine(CursorEngine):
    """Real-time engine with at most two palindrome checks per symbol."""

    width = 2

    def __init__(self, cfg: HashConfig, E: int):
        self.t_E = checkpoint_spacing(E)
        super().__init__(cfg)
        self.E = E

    def push(self, a: int) -> None:
        i = self.i = self.i + 1
        if i % self.t_E == 0:
            node = self.sp_list.push_front(self.current)
            if self._cursor is None:
                self._cursor = node
        self._read(a)
        self._scan()


def abasic_answers(cfg: HashConfig, stream: Iterable[int], E: int) -> Iterator[Answer]:
    """Yield the reference answer after every symbol."""
    t_E = checkpoint_spacing(E)
    sp: list = []
    cur = initial_tuple(cfg)
    answer = EMPTY
    for i, a in enumerate(stream, 1):
        if i % t_E == 0:
            sp.append(cur)
        cur = extend(cur, a, cfg)
        if i == 1:
            answer = Answer(1, 1)
        answer, _ = full_scan_check(reversed(sp), cur, i, answer, cfg)
        yield answer


def abasic_run(cfg: HashConfig, stream: Iterable[int], E: int) -> Answer:
    answer = EMPTY
    for answer in abasic_answers(cfg, stream, E):
        pass
    return answer
