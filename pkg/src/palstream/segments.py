"""Run-length views of an iteration counter with O(1) increment.

:class:`BinarySegments` keeps the maximal runs of 1-bits of ``x`` (least
significant first); :class:`KarySegments` keeps the run-length encoding of
the base-``k`` digits.  Both report the position of the lowest non-zero
digit without scanning the representation.
"""

from __future__ import annotations

from collections import deque


class BinarySegments:
    __slots__ = ("segments", "value")

    def __init__(self):
        # each segment is a mutable [lo, hi] pair of bit positions
        self.segments: deque[list[int]] = deque()
        self.value = 0

    @classmethod
    def from_int(cls, x: int) -> "BinarySegments":
        """Direct bit scan; used to seed and to cross-check the increment."""
        bs = cls()
        bs.value = x
        pos = 0
        while x:
            if x & 1:
                lo = pos
                while x & 1:
                    x >>= 1
                    pos += 1
                bs.segments.append([lo, pos - 1])
            else:
                x >>= 1
                pos += 1
        return bs

    def as_list(self) -> list[tuple[int, int]]:
        return [(lo, hi) for lo, hi in self.segments]

    def beta(self) -> int:
        """Position of the rightmost 1-bit."""
        if not self.segments:
            raise ValueError("beta is undefined for the counter value 0")
        return self.segments[0][0]

    def increment(self) -> "BinarySegments":
        segs = self.segments
        self.value += 1
        if not segs:
            segs.append([0, 0])
            return self
        a, b = segs[0]
        if a >= 2:
            segs.appendleft([0, 0])
        elif a == 1:
            segs[0][0] = 0
        elif len(segs) == 1:
            segs[0] = [b + 1, b + 1]
        else:
            c, d = segs[1]
            if c > b + 2:
                segs[0] = [b + 1, b + 1]
            else:
                segs.popleft()
                segs[0] = [b + 1, d]
        return self

    def __len__(self):
        return len(self.segments)


class KarySegments:
    __slots__ = ("k", "runs", "value")

    def __init__(self, k: int):
        if k < 2:
            raise ValueError(f"base must be >= 2, got {k}")
        self.k = k
        # [digit, run length] pairs, least significant first
        self.runs: deque[list[int]] = deque()
        self.value = 0

    @classmethod
    def from_int(cls, x: int, k: int) -> "KarySegments":
        ks = cls(k)
        ks.value = x
        for digit in _digits(x, k):
            if ks.runs and ks.runs[-1][0] == digit:
                ks.runs[-1][1] += 1
            else:
                ks.runs.append([digit, 1])
        return ks

    def as_list(self) -> list[tuple[int, int]]:
        return [(d, n) for d, n in self.runs]

    def digits(self) -> list[int]:
        out: list[int] = []
        for d, n in self.runs:
            out.extend([d] * n)
        return out

    def beta(self) -> int:
        """Position of the rightmost non-zero base-k digit."""
        if not self.runs:
            raise ValueError("beta is undefined for the counter value 0")
        digit, n = self.runs[0]
        return n if digit == 0 else 0

    def _bump(self, idx: int) -> None:
        # Add one to the lowest digit of runs[idx], which is below k-1.
        runs = self.runs
        digit, n = runs[idx]
        if n == 1:
            runs[idx][0] = digit + 1
            if idx + 1 < len(runs) and runs[idx + 1][0] == digit + 1:
                runs[idx + 1][1] += 1
                del runs[idx]
        else:
            runs[idx][1] = n - 1
            runs.insert(idx, [digit + 1, 1])
        if idx > 0 and runs[idx - 1][0] == runs[idx][0]:
            runs[idx - 1][1] += runs[idx][1]
            del runs[idx]

    def increment(self) -> "KarySegments":
        runs = self.runs
        self.value += 1
        if not runs:
            runs.append([1, 0 + 1])
            return self
        top = self.k - 1
        if runs[0][0] != top:
            self._bump(0)
            return self
        # a run of (k-1)s becomes zeros and carries into the next run
        runs[0][0] = 0
        if len(runs) == 1:
            runs.append([1, 1])
        else:
            self._bump(1)
        return self

    def __len__(self):
        return len(self.runs)


def _digits(x: int, k: int) -> list[int]:
    out = []
    while x:
        x, d = divmod(x, k)
        out.append(d)
    return out
