from __future__ import annotations

from typing import NamedTuple


class Answer(NamedTuple):
    """Best palindrome so far: 1-based start position and length (0, 0 when empty)."""

    pos: int
    length: int


EMPTY = Answer(0, 0)
