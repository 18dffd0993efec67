"""Offline ground truth for the longest palindromic substring."""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence


class OracleResult(NamedTuple):
    pos: int
    length: int


def oracle_lps(s: Sequence, complement: Optional[Sequence[int]] = None) -> OracleResult:
    """Linear-time Manacher; returns the leftmost longest palindrome (1-based).

    With ``complement`` the notion is reverse-complement palindrome and the
    quadratic expansion in :func:`oracle_lps_naive` is used instead.
    """
    if complement is not None:
        return oracle_lps_naive(s, complement)
    n = len(s)
    if n == 0:
        return OracleResult(0, 0)
    # d1[i]: odd palindromes centred at i, d2[i]: even ones centred left of i
    best_len, best_start = 1, 0
    d1 = [0] * n
    lo, hi = 0, -1
    for i in range(n):
        k = 1 if i > hi else min(d1[lo + hi - i], hi - i + 1)
        while i - k >= 0 and i + k < n and s[i - k] == s[i + k]:
            k += 1
        d1[i] = k
        if i + k - 1 > hi:
            lo, hi = i - k + 1, i + k - 1
        length = 2 * k - 1
        start = i - k + 1
        if length > best_len or (length == best_len and start < best_start):
            best_len, best_start = length, start
    d2 = [0] * n
    lo, hi = 0, -1
    for i in range(n):
        k = 0 if i > hi else min(d2[lo + hi - i + 1], hi - i + 1)
        while i - k - 1 >= 0 and i + k < n and s[i - k - 1] == s[i + k]:
            k += 1
        d2[i] = k
        if i + k - 1 > hi:
            lo, hi = i - k, i + k - 1
        length = 2 * k
        start = i - k
        if length > best_len or (length == best_len and start < best_start):
            best_len, best_start = length, start
    return OracleResult(best_start + 1, best_len)


def oracle_lps_naive(s: Sequence, complement: Optional[Sequence[int]] = None) -> OracleResult:
    """Expand around all ``2n - 1`` centres; quadratic worst case."""
    n = len(s)
    if n == 0:
        return OracleResult(0, 0)
    comp = (lambda x: x) if complement is None else complement.__getitem__
    best_len, best_start = 0, 0
    for center2 in range(2 * n - 1):
        lo, hi = center2 // 2, (center2 + 1) // 2
        while lo >= 0 and hi < n and s[lo] == comp(s[hi]):
            lo -= 1
            hi += 1
        length = hi - lo - 1
        start = lo + 1
        if length > best_len or (length == best_len and start < best_start):
            best_len, best_start = length, start
    if best_len == 0:
        return OracleResult(0, 0)
    return OracleResult(best_start + 1, best_len)


def is_palindrome_naive(s: Sequence, pos: int, length: int, complement: Optional[Sequence[int]] = None) -> bool:
    """Literal reversal check of the 1-based span ``s[pos .. pos+length-1]``."""
    seg = list(s[pos - 1 : pos - 1 + length])
    if len(seg) != length:
        return False
    if complement is not None:
        return seg == [complement[x] for x in reversed(seg)]
    return seg == seg[::-1]
