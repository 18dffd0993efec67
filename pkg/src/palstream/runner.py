"""Run, verify and benchmark the streaming finders over byte streams."""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import BinaryIO, Iterable, Optional

from .estimators import AdditiveLPS, CombinedLPS, ExactWindowLPS, MultiplicativeLPS
from .fingerprint import DNA_COMPLEMENT, MERSENNE_61
from .generators import gen_random
from .oracle import is_palindrome_naive, oracle_lps

MODES = ("additive", "multiplicative", "exact", "combined")
CHUNK = 1 << 16
_COMPLEMENT_TABLE = [DNA_COMPLEMENT.get(i, i) for i in range(256)]


class ParameterError(ValueError):
    """Invalid mode or parameter combination (CLI exit code 2)."""


@dataclass
class RunParams:
    error: Optional[int] = None
    epsilon: Optional[float] = None
    window: Optional[int] = None
    seed: int = 0
    complement: bool = False


@dataclass
class RunReport:
    mode: str
    n: int
    length: int
    start: int
    exact: bool
    space_words: int
    max_ops_per_push: int
    config: dict
    details: dict = field(default_factory=dict)
    oracle_len: Optional[int] = None
    bound_satisfied: Optional[bool] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.oracle_len is None:
            del d["oracle_len"], d["bound_satisfied"]
        return d


def make_estimator(mode: str, params: RunParams):
    """Build and validate the estimator for ``mode``; raises :class:`ParameterError`."""
    if mode not in MODES:
        raise ParameterError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    needed = {
        "additive": ("error",),
        "multiplicative": ("epsilon",),
        "exact": ("window",),
        "combined": ("epsilon", "window"),
    }[mode]
    missing = [name for name in needed if getattr(params, name) is None]
    if missing:
        raise ParameterError(f"mode {mode} needs --{' and --'.join(missing)}")
    if params.complement and mode in ("exact", "combined"):
        raise ParameterError("reverse-complement search is only available in additive and multiplicative modes")
    if mode == "additive":
        est = AdditiveLPS(error=params.error, seed=params.seed, complement=params.complement)
    elif mode == "multiplicative":
        est = MultiplicativeLPS(epsilon=params.epsilon, seed=params.seed, complement=params.complement)
    elif mode == "exact":
        est = ExactWindowLPS(window=params.window)
    else:
        est = CombinedLPS(epsilon=params.epsilon, window=params.window, seed=params.seed)
    try:
        est._make_engine()
    except (ValueError, TypeError) as exc:
        raise ParameterError(str(exc)) from exc
    return est


def _config(mode: str, params: RunParams) -> dict:
    hashed = mode != "exact"
    return {
        "error": params.error if mode == "additive" else None,
        "epsilon": params.epsilon if mode in ("multiplicative", "combined") else None,
        "window": params.window if mode in ("exact", "combined") else None,
        "seed": params.seed if hashed else None,
        "prime": MERSENNE_61 if hashed else None,
        "complement": params.complement,
    }


def _chunks(source: BinaryIO, keep: Optional[bytearray]) -> Iterable[bytes]:
    # single forward pass, no seeks
    while True:
        chunk = source.read(CHUNK)
        if not chunk:
            return
        if keep is not None:
            keep.extend(chunk)
        yield chunk


def _report(mode: str, params: RunParams, est) -> RunReport:
    details = est.operation_counts()
    if mode == "combined":
        r = est.engine_.window.result()
        details.update(
            window_kind=r.kind.value,
            window_start=r.pos,
            window_length=r.length,
            approx_start=est.engine_.approx.answer.pos,
            approx_length=est.engine_.approx.answer.length,
        )
    elif mode == "exact":
        details["kind"] = est.engine_.result().kind.value
    return RunReport(
        mode=mode,
        n=est.n_symbols_,
        length=est.length_,
        start=est.start_,
        exact=bool(est.exact_),
        space_words=est.peak_space_words_,
        max_ops_per_push=est.max_ops_per_push(),
        config=_config(mode, params),
        details=details,
    )


def run(mode: str, params: RunParams, source: BinaryIO, _keep: Optional[bytearray] = None) -> RunReport:
    """Stream every byte of ``source`` once through the engine(s) of ``mode``."""
    est = make_estimator(mode, params)
    est._start()
    for chunk in _chunks(source, _keep):
        est.partial_fit(chunk)
    est._sync()
    return _report(mode, params, est)


def bound_satisfied(mode: str, params: RunParams, length: int, oracle_len: int, exact: bool) -> bool:
    L = oracle_len
    if length > L:
        return False
    if mode == "additive":
        return length >= L - params.error
    m = params.window
    if mode == "exact":
        return (exact and length == L) if L < m else (not exact and length in (m, m + 1))
    mult_ok = length * (1 + Fraction(params.epsilon)) >= L
    if mode == "multiplicative" or L >= m:
        return mult_ok and not (mode == "combined" and exact)
    return exact and length == L


def verify(mode: str, params: RunParams, source: BinaryIO) -> RunReport:
    """Run the engine and the offline oracle on the same bytes and compare."""
    data = bytearray()
    report = run(mode, params, source, _keep=data)
    comp = _COMPLEMENT_TABLE if params.complement else None
    L = oracle_lps(bytes(data), complement=comp).length
    report.oracle_len = L
    report.bound_satisfied = bound_satisfied(mode, params, report.length, L, report.exact)
    report.details["witness_ok"] = report.length == 0 or is_palindrome_naive(
        data, report.start, report.length, comp
    )
    report.bound_satisfied = report.bound_satisfied and report.details["witness_ok"]
    if mode in ("additive", "multiplicative"):
        report.exact = report.length == L
    return report


# --- benchmarking -----------------------------------------------------------

_PARAM_KEYS = {"E": "error", "error": "error", "eps": "epsilon", "epsilon": "epsilon", "m": "window", "window": "window"}


@dataclass
class BenchCell:
    mode: str
    n: int
    params: RunParams
    sigma: int = 4
    seed: int = 0

    @property
    def label(self) -> str:
        p = self.params
        return {
            "additive": f"{p.error}",
            "multiplicative": f"{p.epsilon}",
            "exact": f"{p.window}",
            "combined": f"{p.epsilon}/{p.window}",
        }[self.mode]


def _number(text: str):
    value = float(text)
    return int(value) if value.is_integer() and "." not in text else value


def parse_grid(spec: str) -> list[BenchCell]:
    """Parse ``mode:key=v1,v2:...`` sections separated by ``;``.

    Keys: ``n``, ``sigma``, ``seed`` and the mode parameters ``E``/``error``,
    ``eps``/``epsilon``, ``m``/``window``.  Every combination of listed
    values becomes one cell, e.g.
    ``additive:n=1e6:E=2,8,32,128;multiplicative:n=1e4,1e5,1e6:eps=1``.
    """
    cells: list[BenchCell] = []
    for section in filter(None, (s.strip() for s in spec.split(";"))):
        mode, *fields = [f.strip() for f in section.split(":")]
        if mode not in MODES:
            raise ParameterError(f"unknown bench mode {mode!r}")
        grid: dict[str, list] = {"n": [10_000], "sigma": [4], "seed": [0]}
        for f in fields:
            key, _, values = f.partition("=")
            key = key.strip()
            if key not in grid and key not in _PARAM_KEYS:
                raise ParameterError(f"unknown bench key {key!r}")
            try:
                grid[_PARAM_KEYS.get(key, key)] = [_number(v) for v in values.split(",") if v.strip()]
            except ValueError as exc:
                raise ParameterError(f"bad value list in {f!r}") from exc
        names = list(grid)
        combos = [[]]
        for name in names:
            combos = [c + [v] for c in combos for v in grid[name]]
        for combo in combos:
            d = dict(zip(names, combo))
            params = RunParams(**{k: d[k] for k in ("error", "epsilon", "window") if k in d}, seed=d["seed"])
            cell = BenchCell(mode, int(d["n"]), params, int(d["sigma"]), int(d["seed"]))
            make_estimator(mode, params)
            cells.append(cell)
    if not cells:
        raise ParameterError("empty bench grid")
    return cells


def bench_cell(cell: BenchCell) -> dict:
    data = bytes(gen_random(cell.n, cell.sigma, cell.seed, offset=ord("a") if cell.sigma <= 26 else 0))
    est = make_estimator(cell.mode, cell.params)
    t0 = time.perf_counter()
    est.fit(data)
    elapsed = time.perf_counter() - t0
    L = oracle_lps(data).length
    if cell.mode == "additive" or cell.mode == "exact":
        achieved = L - est.length_
    else:
        achieved = (L / est.length_ - 1) if est.length_ else 0.0
    return {
        "mode": cell.mode,
        "n": cell.n,
        "param": cell.label,
        "space_words": est.peak_space_words_,
        "ns_per_symbol": round(elapsed * 1e9 / max(cell.n, 1), 1),
        "achieved_error": achieved,
        "length": est.length_,
        "oracle_len": L,
        "max_ops_per_push": est.max_ops_per_push(),
        "sigma": cell.sigma,
        "seed": cell.seed,
        # not written to the CSV
        "ops": est.operation_counts(),
    }


BENCH_COLUMNS = [
    "mode", "n", "param", "space_words", "ns_per_symbol", "achieved_error",
    "length", "oracle_len", "max_ops_per_push", "sigma", "seed",
]


def bench(cells: Iterable[BenchCell], out) -> list[dict]:
    rows = []
    writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS, extrasaction="ignore")
    writer.writeheader()
    for cell in cells:
        row = bench_cell(cell)
        writer.writerow(row)
        rows.append(row)
    return rows


def bench_to_string(cells: Iterable[BenchCell]) -> str:
    buf = io.StringIO()
    bench(cells, buf)
    return buf.getvalue()


def log_fit_quality(xs, ys) -> float:
    """Largest ratio between measurement and least-squares fit ``a*x + b`` (either direction)."""
    import numpy as np

    a, b = np.polyfit(np.asarray(xs, float), np.asarray(ys, float), 1)
    worst = 1.0
    for x, y in zip(xs, ys):
        fit = a * x + b
        if fit <= 0:
            return math.inf
        worst = max(worst, y / fit, fit / y)
    return worst
