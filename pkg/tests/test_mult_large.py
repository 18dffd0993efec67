import random

import pytest

from conftest import all_strings, brute_lps, ceil_div, is_pal_span
from palstream.fingerprint import make_config
from palstream.generators import gen_planted, gen_random
from palstream.mult_large import (
    KaryParams,
    MultLargeEngine,
    beta_prime,
    choose_k,
    make_multiplicative_engine,
    reference_answers,
    ttl_prime,
)
from palstream.mult_small import MultSmallEngine
from palstream.oracle import oracle_lps


@pytest.mark.parametrize("eps, k", [(7, 4), (9, 4), (10, 4), (11, 6), (15, 8), (100, 50)])
def test_choose_k(eps, k):
    assert choose_k(eps) == k
    assert k % 2 == 0 and k <= (1 + eps) / 2 < k + 2


@pytest.mark.parametrize("eps", [1, 6.99, 0])
def test_choose_k_rejects_small(eps, cfg):
    with pytest.raises(ValueError):
        choose_k(eps)
    with pytest.raises(ValueError):
        MultLargeEngine(cfg, eps)


def test_ttl_prime():
    p = KaryParams.from_eps(7)
    assert ttl_prime(5, p) == 4
    assert ttl_prime(16, p) == 72
    assert ttl_prime(4, p) == 18
    assert ttl_prime(3, p) == 4
    assert beta_prime(48, 4) == 2


def test_expiry_collisions_at_most_two():
    for eps in (7, 15):
        p = KaryParams.from_eps(eps)
        pre = {}
        for x in range(1, 40000):
            pre.setdefault(x + ttl_prime(x, p), []).append(x)
        for h, xs in pre.items():
            assert len(xs) <= 2
            if len(xs) == 2:
                x, y = sorted(xs, key=lambda v: -beta_prime(v, p.k))
                assert beta_prime(x, p.k) == beta_prime(h, p.k) + 1
                assert beta_prime(y, p.k) == 0


def test_router(cfg):
    assert isinstance(make_multiplicative_engine(cfg, 0.5), MultSmallEngine)
    e = make_multiplicative_engine(cfg, 3)
    assert isinstance(e, MultSmallEngine) and e.params.q_eps == 1
    assert isinstance(make_multiplicative_engine(cfg, 7), MultLargeEngine)
    with pytest.raises(ValueError):
        make_multiplicative_engine(cfg, 0)


def test_exhaustive_differential(cfg):
    for s in all_strings(2, 11):
        L = brute_lps(s)[1]
        for eps in (7, 15):
            eng = MultLargeEngine(cfg, eps)
            for a, ref in zip(s, reference_answers(cfg, s, eps)):
                eng.push(a)
                assert eng.answer == ref
            assert ceil_div(L, 1 + eps) <= eng.answer.length <= L
            if s:
                assert is_pal_span(s, *eng.answer)


def test_list_contents_match_definition():
    c = make_config(6)
    rng = random.Random(1)
    eng = MultLargeEngine(c, 7)
    for i in range(1, 3000):
        eng.push(rng.randrange(2))
        assert eng.sp_list.positions() == [j for j in range(i, 0, -1) if j + eng.ttl(j) > i]
        assert eng.stats.max_deletions <= 2


def test_random_binary_bound():
    c = make_config(6)
    for seed in range(3):
        s = gen_random(10_000, 2, seed)
        L = oracle_lps(s).length
        assert MultLargeEngine(c, 7).push_many(s).answer.length >= ceil_div(L, 8)


@pytest.mark.parametrize("d", [0, 1, 2])
def test_planted_power_of_k(d):
    # a planted palindrome of length 4 k^d is reported with length >= 2 k^d
    c = make_config(12)
    k = 4
    for seed in range(5):
        s = gen_planted(2000, 26, seed, 4 * k**d)
        ans = MultLargeEngine(c, 7).push_many(s).answer
        assert ans.length >= 2 * k**d
        assert is_pal_span(s, *ans)
