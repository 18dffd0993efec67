"""Karp-Rabin forward/reversed fingerprints over a prime field.

A :class:`FingerprintTuple` ``I(i)`` summarises the prefix ``S[1..i-1]``:
its forward hash ``sum S[k] r^k``, its reversed hash ``sum S[k] r^(i-k)``,
and the powers ``r^-(i-1)`` and ``r^i``.  Two such tuples are enough to test
any substring between them for palindromicity in constant time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

MERSENNE_61 = (1 << 61) - 1

DNA_COMPLEMENT = {ord("A"): ord("T"), ord("T"): ord("A"), ord("C"): ord("G"), ord("G"): ord("C")}


@dataclass(frozen=True)
class HashConfig:
    """Field parameters shared by every tuple of one stream.

    ``complement`` is an optional involution on symbols, stored as a lookup
    table; when set, the reversed hash is taken over complemented symbols and
    palindrome checks become reverse-complement checks.
    """

    p: int
    r: int
    r_inv: int
    complement: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if not 1 <= self.r < self.p:
            raise ValueError(f"hash base r={self.r} must lie in [1, p-1]")
        if self.r * self.r_inv % self.p != 1:
            raise ValueError("r_inv is not the inverse of r modulo p")
        if self.complement is not None:
            comp = self.complement
            for a, b in enumerate(comp):
                if comp[b] != a:
                    raise ValueError(f"complement map is not an involution at symbol {a}")


class FingerprintTuple(NamedTuple):
    i: int
    ff: int
    fr: int
    r_neg: int
    r_pos: int


def _complement_table(mapping, size: int = 256) -> tuple[int, ...]:
    table = list(range(size))
    for a, b in dict(mapping).items():
        table[a] = b
    return tuple(table)


def make_config(seed: int = 0, complement=None, p: int = MERSENNE_61) -> HashConfig:
    """Draw a random base ``r`` in ``[1, p-1]`` from a generator seeded by ``seed``.

    ``complement`` may be a mapping of symbol pairs (e.g. :data:`DNA_COMPLEMENT`)
    or a full lookup table; symbols absent from a mapping map to themselves.
    """
    r = random.Random(seed).randrange(1, p)
    table = None
    if complement is not None:
        table = _complement_table(complement) if hasattr(complement, "items") else tuple(complement)
    return HashConfig(p=p, r=r, r_inv=pow(r, p - 2, p), complement=table)


def initial_tuple(cfg: HashConfig) -> FingerprintTuple:
    return FingerprintTuple(1, 0, 0, 1, cfg.r)


def extend(t: FingerprintTuple, a: int, cfg: HashConfig) -> FingerprintTuple:
    """Return ``I(i+1)`` from ``I(i)`` and the symbol ``a = S[i]``."""
    p, r = cfg.p, cfg.r
    b = a if cfg.complement is None else cfg.complement[a]
    return FingerprintTuple(
        t.i + 1,
        (t.ff + a * t.r_pos) % p,
        (t.fr + b) * r % p,
        t.r_neg * cfg.r_inv % p,
        t.r_pos * r % p,
    )


def is_palindrome(ti: FingerprintTuple, tj1: FingerprintTuple, cfg: HashConfig) -> bool:
    """Test ``S[i..j]`` given ``ti = I(i)`` and ``tj1 = I(j+1)``.

    Compares ``F^F(i, j) = r^-(i-1) (F^F(1,j) - F^F(1,i-1))`` with
    ``F^R(i, j) = F^R(1,j) - r^(j-i+1) F^R(1,i-1)``; the power is
    ``r^(j+1) * r^-(i-1) * r^-1``.
    """
    assert ti.i < tj1.i, "substring must be non-empty"
    assert ti.r_neg * ti.r_pos % cfg.p == cfg.r, "tuple does not belong to this config"
    p = cfg.p
    forward = ti.r_neg * (tj1.ff - ti.ff) % p
    power = tj1.r_pos * ti.r_neg % p * cfg.r_inv % p
    reverse = (tj1.fr - power * ti.fr) % p
    return forward == reverse


def prefix_tuples(symbols: Sequence[int], cfg: HashConfig) -> list[FingerprintTuple]:
    """All tuples ``I(1) .. I(n+1)`` of a stored string (test and oracle helper)."""
    out = [initial_tuple(cfg)]
    for a in symbols:
        out.append(extend(out[-1], a, cfg))
    return out
