"""Corpus handling, a naive Bayes baseline and the experiment drivers."""

from .classifier import BowModel, evaluate, train
from .corpus import (
    Corpus,
    CorpusStats,
    LabeledExample,
    augment_corpus,
    load_corpus,
    save_corpus,
    subsample,
)
from .experiments import (
    ExperimentConfig,
    RunResult,
    recommended_params,
    run_ablation_sweep,
    run_naug_sweep,
    run_sizing_experiment,
    summarize,
    write_csv,
)

__all__ = [
    "BowModel", "Corpus", "CorpusStats", "ExperimentConfig", "LabeledExample", "RunResult",
    "augment_corpus", "evaluate", "load_corpus", "recommended_params", "run_ablation_sweep",
    "run_naug_sweep", "run_sizing_experiment", "save_corpus", "subsample", "summarize",
    "train", "write_csv",
]
