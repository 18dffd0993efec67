import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_strings, brute_lps, is_pal_span
from palstream.additive import AdditiveEngine, abasic_answers, abasic_run, checkpoint_spacing
from palstream.fingerprint import make_config


def run(cfg, s, E):
    return AdditiveEngine(cfg, E).push_many(s)


@pytest.mark.parametrize("E, t", [(2, 1), (3, 1), (7, 3), (128, 64)])
def test_spacing(E, t):
    assert checkpoint_spacing(E) == t


@pytest.mark.parametrize("E", [1, 0, -4])
def test_rejects_small_error(cfg, E):
    with pytest.raises(ValueError):
        AdditiveEngine(cfg, E)
    with pytest.raises(ValueError):
        abasic_run(cfg, b"ab", E)


def test_rejects_non_integer_error(cfg):
    with pytest.raises(TypeError):
        AdditiveEngine(cfg, 2.5)


def test_abacaba(cfg):
    s = b"abacaba"
    assert brute_lps(s) == (1, 7)
    assert run(cfg, s, 2).answer == (1, 7)
    e4 = run(cfg, s, 4).answer
    assert e4.length >= 3 and is_pal_span(s, *e4)
    assert abasic_run(cfg, s, 2) == (1, 7)


def test_short_and_empty(cfg):
    assert AdditiveEngine(cfg, 2).answer == (0, 0)
    assert abasic_run(cfg, b"", 2) == (0, 0)
    assert run(cfg, b"ab", 2).answer in {(1, 1), (2, 1)}
    assert run(cfg, b"ab", 10).answer in {(1, 1), (2, 1)}
    assert run(cfg, b"aaaa", 2).answer.length >= 2


def test_exhaustive_binary_bound_and_differential(cfg):
    for s in all_strings(2, 11):
        L = brute_lps(s)[1]
        for E in (2, 4, 6):
            eng = AdditiveEngine(cfg, E)
            for a, ref in zip(s, abasic_answers(cfg, s, E)):
                eng.push(a)
                assert eng.answer == ref
            assert L - E <= eng.answer.length <= L
            if s:
                assert is_pal_span(s, *eng.answer)


def test_monotone_growth_and_checkpoint_count():
    c = make_config(4)
    rng = random.Random(2)
    for E in (2, 5, 16):
        eng = AdditiveEngine(c, E)
        prev = 0
        for n in range(1, 3001):
            eng.push(rng.randrange(2))
            assert prev <= eng.answer.length <= prev + 2 * eng.t_E
            prev = eng.answer.length
            assert eng.checkpoint_count() == n // eng.t_E
        assert eng.sp_list.positions() == list(range(3000 // eng.t_E * eng.t_E, 0, -eng.t_E))


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=300), st.integers(2, 40))
def test_random_streams_error_bound(s, E):
    c = make_config(8)
    eng = run(c, s, E)
    L = brute_lps(s)[1] if len(s) < 60 else _manacher_len(s)
    assert L - E <= eng.answer.length <= L
    if s:
        assert is_pal_span(s, *eng.answer)
    assert eng.stats.max_advances <= 2
    assert eng.stats.max_checks <= 2


def _manacher_len(s):
    from palstream.oracle import oracle_lps

    return oracle_lps(s).length
