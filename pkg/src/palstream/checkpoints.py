"""Doubly linked checkpoint list ordered by decreasing position.

``first`` is the newest tuple, ``last`` the oldest; ``nxt`` walks towards
older tuples and ``prev`` towards newer ones.  Nodes are handed out so that
queues can delete arbitrary members in O(1).
"""

from __future__ import annotations

from typing import Iterator, Optional

from .fingerprint import FingerprintTuple


class Node:
    __slots__ = ("tup", "prev", "nxt")

    def __init__(self, tup: FingerprintTuple):
        self.tup = tup
        self.prev: Optional[Node] = None
        self.nxt: Optional[Node] = None

    def __repr__(self):
        return f"Node(i={self.tup.i})"


class CheckpointList:
    __slots__ = ("first", "last", "size")

    def __init__(self):
        self.first: Optional[Node] = None
        self.last: Optional[Node] = None
        self.size = 0

    def __len__(self):
        return self.size

    def __iter__(self) -> Iterator[FingerprintTuple]:
        node = self.first
        while node is not None:
            yield node.tup
            node = node.nxt

    def positions(self) -> list[int]:
        return [t.i for t in self]

    def push_front(self, tup: FingerprintTuple) -> Node:
        node = Node(tup)
        node.nxt = self.first
        if self.first is None:
            self.last = node
        else:
            self.first.prev = node
        self.first = node
        self.size += 1
        return node

    def remove(self, node: Node) -> None:
        if node.prev is None:
            self.first = node.nxt
        else:
            node.prev.nxt = node.nxt
        if node.nxt is None:
            self.last = node.prev
        else:
            node.nxt.prev = node.prev
        node.prev = node.nxt = None
        self.size -= 1
