"""Deterministic input generators: the nu padding string, random and planted streams."""

from __future__ import annotations

import random


def gen_nu(d: int, offset: int = 0) -> list[int]:
    """Prefix of length ``d`` of ``0 1 00 11 000 111 ...`` (symbols shifted by ``offset``)."""
    if d < 0:
        raise ValueError(f"length must be non-negative, got {d}")
    out: list[int] = []
    run = 1
    while len(out) < d:
        out.extend([offset] * run)
        out.extend([offset + 1] * run)
        run += 1
    return out[:d]


def _check(n: int, sigma: int) -> None:
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    if sigma < 2:
        raise ValueError(f"alphabet size must be >= 2, got {sigma}")


def gen_random(n: int, sigma: int, seed: int, offset: int = 0) -> list[int]:
    _check(n, sigma)
    rng = random.Random(seed)
    return [offset + x for x in rng.choices(range(sigma), k=n)]


def gen_planted(n: int, sigma: int, seed: int, planted_len: int, offset: int = 0) -> list[int]:
    """Random string with a random palindrome of length ``planted_len`` written over it."""
    _check(n, sigma)
    if not 0 <= planted_len <= n:
        raise ValueError(f"planted length must lie in [0, {n}], got {planted_len}")
    rng = random.Random(seed)
    s = [offset + x for x in rng.choices(range(sigma), k=n)]
    half = [offset + x for x in rng.choices(range(sigma), k=(planted_len + 1) // 2)]
    pal = half + half[::-1][planted_len % 2 :]
    at = rng.randint(0, n - planted_len)
    s[at : at + planted_len] = pal
    return s
