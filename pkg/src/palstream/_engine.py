from __future__ import annotations

from typing import Optional

from ._types import EMPTY, Answer
from .checkpoints import CheckpointList, Node
from .fingerprint import HashConfig, extend, initial_tuple, is_palindrome


class PushStats:
    """Per-push operation counters; maxima are kept over the whole stream."""

    __slots__ = ("advances", "checks", "deletions", "max_advances", "max_checks",
                 "max_deletions", "max_ops", "total_checks")

    def __init__(self):
        self.advances = self.checks = self.deletions = 0
        self.max_advances = self.max_checks = self.max_deletions = 0
        self.max_ops = self.total_checks = 0

    def commit(self):
        if self.advances > self.max_advances:
            self.max_advances = self.advances
        if self.checks > self.max_checks:
            self.max_checks = self.checks
        if self.deletions > self.max_deletions:
            self.max_deletions = self.deletions
        ops = self.advances + self.checks + self.deletions
        if ops > self.max_ops:
            self.max_ops = ops
        self.total_checks += self.checks
        self.advances = self.checks = self.deletions = 0

    def as_dict(self) -> dict:
        return {
            "max_advances": self.max_advances,
            "max_checks": self.max_checks,
            "max_deletions": self.max_deletions,
            "max_ops": self.max_ops,
            "total_checks": self.total_checks,
        }


class CursorEngine:
    """Checkpoint list plus the scan cursor shared by the real-time engines.

    After each push the cursor rests on the newest checkpoint whose suffix
    span still exceeds ``answer.length`` (or on the oldest one).  Only a
    fixed number of checkpoints from the cursor onwards can extend the
    answer, so each push checks at most ``width`` of them.
    """

    width = 2

    def __init__(self, cfg: HashConfig):
        self.cfg = cfg
        self.sp_list = CheckpointList()
        self.current = initial_tuple(cfg)
        self.answer: Answer = EMPTY
        self.i = 0
        self.stats = PushStats()
        self._cursor: Optional[Node] = None
        self._retreat = True

    def _read(self, a: int) -> None:
        self.current = extend(self.current, a, self.cfg)
        if self.i == 1:
            self.answer = Answer(1, 1)

    def _unlink(self, node: Node) -> None:
        # Deleting the cursor moves it one step older; from the oldest
        # element it moves newer and skips the next retreat instead.
        if node is self._cursor:
            if node.nxt is not None:
                self._cursor = node.nxt
            else:
                self._cursor = node.prev
                self._retreat = False
        self.sp_list.remove(node)
        self.stats.deletions += 1

    def _scan(self) -> None:
        sp = self._cursor
        stats = self.stats
        if sp is None:
            stats.commit()
            return
        if self._retreat and sp.prev is not None:
            sp = sp.prev
        self._retreat = True
        i = self.i
        length = self.answer.length
        last = self.sp_list.last
        while i - sp.tup.i + 1 <= length and sp is not last:
            sp = sp.nxt
            stats.advances += 1
        self._cursor = sp

        cur, cfg = self.current, self.cfg
        v = sp
        for _ in range(self.width):
            if v is None:
                break
            start = v.tup.i
            span = i - start + 1
            if span > length:
                stats.checks += 1
                if is_palindrome(v.tup, cur, cfg):
                    length = span
                    self.answer = Answer(start, span)
            v = v.nxt
        stats.commit()

    def push_many(self, symbols) -> "CursorEngine":
        for a in symbols:
            self.push(a)
        return self

    def push(self, a: int) -> None:  # pragma: no cover - overridden
        raise NotImplementedError

    def checkpoint_count(self) -> int:
        return len(self.sp_list)

    def space_words(self) -> int:
        # 5 words per stored tuple plus the running tuple, answer, counter
        # and cursor.
        return 5 * len(self.sp_list) + 9


def full_scan_check(sp_tuples, cur, i: int, answer: Answer, cfg: HashConfig) -> tuple[Answer, int]:
    """Check every stored tuple (newest first) against the current prefix."""
    length = answer.length
    checks = 0
    for t in sp_tuples:
        span = i - t.i + 1
        if span > length:
            checks += 1
            if is_palindrome(t, cur, cfg):
                length = span
                answer = Answer(t.i, span)
    return answer, checks
