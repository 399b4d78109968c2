"""Learning-curve, ablation and n_aug experiment drivers.

Every driver evaluates a grid of cells. A cell subsamples the training
corpus with its seed, optionally augments the subset, trains naive Bayes
and scores it on the untouched test corpus. Baseline and EDA runs at the
same ``(subset_size, seed)`` share one subset, so gains are paired.
"""

from __future__ import annotations

import csv
import io
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import groupby
from pathlib import Path
from typing import Callable, Mapping, Optional, Sequence, Union

from ..augment import AugmentParams, Op
from ..text import DEFAULT_STOPWORDS
from .classifier import evaluate, train
from .corpus import Corpus, augment_corpus, load_corpus, resolve_size, subsample

CSV_HEADER = ("dataset", "mode", "op", "alpha", "n_aug", "subset_size", "seed", "accuracy")

BASELINE = "baseline"
EDA = "eda"

CorpusLike = Union[Corpus, str, Path]


def recommended_params(n_train: int, seed: int = 0) -> AugmentParams:
    """Usage presets by training-set size: (alpha, n_aug)."""
    if n_train < 1:
        raise ValueError("n_train must be >= 1")
    if n_train < 2000:
        alpha, n_aug = 0.05, 16
    elif n_train < 5000:
        alpha, n_aug = 0.05, 8
    else:
        alpha, n_aug = 0.1, 4
    return AugmentParams.from_alpha(alpha, n_aug=n_aug, seed=seed)


@dataclass
class ExperimentConfig:
    train: CorpusLike
    test: CorpusLike
    sizes: Sequence = ("all",)
    seeds: Sequence[int] = (0, 1, 2, 3, 4)
    modes: Sequence[str] = (BASELINE, EDA)
    params: AugmentParams = field(default_factory=AugmentParams)
    recommended: bool = False
    stratified: bool = False
    dataset: Optional[str] = None
    workers: int = 1
    # False trains on raw duplicated counts (augmented corpus weight 1)
    family_weighting: bool = True

    def __post_init__(self):
        if not self.seeds:
            raise ValueError("at least one seed is required")
        for m in self.modes:
            if m not in (BASELINE, EDA):
                raise ValueError(f"unknown mode {m!r}")
        if isinstance(self.train, (str, Path)):
            self.train = load_corpus(self.train)
        if isinstance(self.test, (str, Path)):
            self.test = load_corpus(self.test)
        if self.dataset is None:
            self.dataset = self.train.name or "corpus"
        n = len(self.train)
        self.sizes = [resolve_size(s, n) for s in self.sizes]
        for s in self.sizes:
            if not 1 <= s <= n:
                raise ValueError(f"subset size {s} outside [1, {n}]")

    def params_for(self, size: int, seed: int) -> AugmentParams:
        if self.recommended:
            base = recommended_params(size)
            return replace(base, policy=self.params.policy, seed=seed)
        return self.params.with_seed(seed)


@dataclass(frozen=True)
class RunResult:
    dataset: str
    mode: str
    op: str
    alpha: Optional[float]
    n_aug: int
    subset_size: int
    seed: int
    accuracy: float
    gain: Optional[float] = None

    def row(self) -> list[str]:
        alpha = "" if self.alpha is None else f"{self.alpha:g}"
        return [self.dataset, self.mode, self.op, alpha, str(self.n_aug),
                str(self.subset_size), str(self.seed), f"{self.accuracy:.6f}"]


class _Runner:
    """Runs cells, caching subsets and baseline accuracies by (size, seed)."""

    def __init__(self, cfg: ExperimentConfig, lexicon: Mapping, stopwords):
        self.cfg = cfg
        self.lexicon = lexicon
        self.stopwords = stopwords
        self._baseline: dict = {}
        self._subsets: dict = {}

    def subset(self, size: int, seed: int) -> Corpus:
        key = (size, seed)
        if key not in self._subsets:
            self._subsets[key] = subsample(self.cfg.train, size, seed, stratified=self.cfg.stratified)
        return self._subsets[key]

    def baseline(self, size: int, seed: int) -> float:
        key = (size, seed)
        if key not in self._baseline:
            self._baseline[key] = evaluate(train(self.subset(size, seed)), self.cfg.test)
        return self._baseline[key]

    def eda(self, size: int, seed: int, params: AugmentParams) -> float:
        augmented = augment_corpus(self.subset(size, seed), params, self.lexicon, self.stopwords)
        if not self.cfg.family_weighting:
            augmented.weight = 1.0
        return evaluate(train(augmented), self.cfg.test)

    def result(self, mode: str, size: int, seed: int, params: Optional[AugmentParams],
               accuracy: float, gain: Optional[float] = None) -> RunResult:
        if params is None:
            return RunResult(self.cfg.dataset, mode, "none", 0.0, 0, size, seed, accuracy, gain)
        op = "uniform" if params.policy is None else str(params.policy)
        return RunResult(self.cfg.dataset, mode, op, params.alpha, params.n_aug,
                         size, seed, accuracy, gain)

    def map(self, fn: Callable, cells: list) -> list:
        if self.cfg.workers <= 1:
            return [fn(c) for c in cells]
        # baselines first so threads do not race on the cache
        for size, seed in sorted({(c[0], c[1]) for c in cells}):
            self.baseline(size, seed)
        with ThreadPoolExecutor(max_workers=self.cfg.workers) as pool:
            return list(pool.map(fn, cells))


def run_sizing_experiment(cfg: ExperimentConfig, lexicon: Mapping,
                          stopwords=DEFAULT_STOPWORDS) -> list[RunResult]:
    """One row per (subset size, mode, seed), sorted in that order."""
    runner = _Runner(cfg, lexicon, stopwords)
    cells = [(size, seed, mode) for size in cfg.sizes for seed in cfg.seeds for mode in cfg.modes]

    def cell(c):
        size, seed, mode = c
        if mode == BASELINE:
            return runner.result(BASELINE, size, seed, None, runner.baseline(size, seed))
        params = cfg.params_for(size, seed)
        acc = runner.eda(size, seed, params)
        gain = acc - runner.baseline(size, seed) if BASELINE in cfg.modes else None
        return runner.result(EDA, size, seed, params, acc, gain)

    rows = runner.map(cell, cells)
    return sorted(rows, key=lambda r: (r.subset_size, r.mode, r.seed))


def run_ablation_sweep(op: Op, alphas: Sequence[float], cfg: ExperimentConfig,
                       lexicon: Mapping, stopwords=DEFAULT_STOPWORDS) -> list[RunResult]:
    """Single-operation sweep over ``alphas``; one row per (alpha, size, seed).

    ``gain`` is the paired difference to the baseline at the same (size, seed).
    ``n_aug`` comes from ``cfg.params``.
    """
    if not alphas:
        raise ValueError("alphas must be non-empty")
    op = Op(op)
    for a in alphas:
        if not 0 <= a <= 1:
            raise ValueError(f"alpha must be in [0, 1], got {a}")
    runner = _Runner(cfg, lexicon, stopwords)
    cells = [(size, seed, a) for a in alphas for size in cfg.sizes for seed in cfg.seeds]

    def cell(c):
        size, seed, a = c
        params = AugmentParams.from_alpha(a, n_aug=cfg.params.n_aug, policy=op, seed=seed)
        acc = runner.eda(size, seed, params)
        return runner.result(EDA, size, seed, params, acc, acc - runner.baseline(size, seed))

    rows = runner.map(cell, cells)
    return sorted(rows, key=lambda r: (r.subset_size, r.alpha, r.seed))


def run_naug_sweep(values: Sequence[int], cfg: ExperimentConfig, lexicon: Mapping,
                   stopwords=DEFAULT_STOPWORDS) -> list[RunResult]:
    """Sweep over ``n_aug`` with ``cfg.params`` otherwise fixed; one row per
    (n_aug, size, seed), with paired gains."""
    if not values:
        raise ValueError("values must be non-empty")
    if any(v < 0 for v in values):
        raise ValueError("n_aug values must be non-negative")
    runner = _Runner(cfg, lexicon, stopwords)
    cells = [(size, seed, v) for v in values for size in cfg.sizes for seed in cfg.seeds]

    def cell(c):
        size, seed, v = c
        params = replace(cfg.params, n_aug=v, seed=seed)
        if v == 0:
            acc = runner.baseline(size, seed)
        else:
            acc = runner.eda(size, seed, params)
        return runner.result(EDA, size, seed, params, acc, acc - runner.baseline(size, seed))

    rows = runner.map(cell, cells)
    return sorted(rows, key=lambda r: (r.subset_size, r.n_aug, r.seed))


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def format_csv(rows: Sequence[RunResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(r.row())
    return buf.getvalue()


def write_csv(rows: Sequence[RunResult], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_csv(rows))


def read_csv(path) -> list[dict]:
    with open(path, encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))


def _mean_std(xs):
    m = statistics.fmean(xs)
    s = statistics.stdev(xs) if len(xs) > 1 else 0.0
    return m, s


def summarize(rows: Sequence[RunResult]) -> str:
    """Mean and standard deviation over seeds, one line per grid cell."""
    def key(r):
        return (r.subset_size, r.mode, r.op, -1.0 if r.alpha is None else r.alpha, r.n_aug)

    lines = [f"{'size':>7}  {'mode':<8} {'op':<7} {'alpha':>5} {'n_aug':>5}  "
             f"{'accuracy':>15}  {'gain':>15}"]
    for k, group in groupby(sorted(rows, key=key), key=key):
        group = list(group)
        r0 = group[0]
        m, s = _mean_std([r.accuracy for r in group])
        gains = [r.gain for r in group if r.gain is not None]
        gain = ""
        if gains:
            gm, gs = _mean_std(gains)
            gain = f"{100 * gm:+6.2f} ± {100 * gs:5.2f}"
        alpha = "" if r0.alpha is None else f"{r0.alpha:g}"
        lines.append(f"{r0.subset_size:>7}  {r0.mode:<8} {r0.op:<7} {alpha:>5} {r0.n_aug:>5}  "
                     f"{100 * m:6.2f} ± {100 * s:5.2f}  {gain:>15}")
    return "\n".join(lines)
