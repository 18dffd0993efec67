import itertools

import pytest

from palstream.fingerprint import make_config


def brute_lps(s):
    """Longest palindromic substring by checking every span (leftmost on ties)."""
    s = list(s)
    n = len(s)
    for length in range(n, 0, -1):
        for start in range(n - length + 1):
            seg = s[start : start + length]
            if seg == seg[::-1]:
                return start + 1, length
    return 0, 0


def all_strings(sigma, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(range(sigma), repeat=n)


def ceil_div(a, b):
    return -(-a // b)


def is_pal_span(s, pos, length):
    seg = list(s[pos - 1 : pos - 1 + length])
    return len(seg) == length and seg == seg[::-1]


@pytest.fixture
def cfg():
    return make_config(1)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def record_criterion(number, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
