"""
Training-set size
=================

Baseline against augmented training on nested random subsets of the movie
corpus, with the size-based presets for ``alpha`` and ``n_aug``. Each
(size, seed) cell uses one subset for both runs, so gains are paired.

Runs in a few seconds.
"""

from pathlib import Path

from eda import default_lexicon
from eda.harness import ExperimentConfig, run_sizing_experiment, summarize

DATA = Path(__file__).resolve().parents[1] / "data"

cfg = ExperimentConfig(
    train=DATA / "movie.train.tsv.gz",
    test=DATA / "movie.test.tsv.gz",
    sizes=(200, 500, 2000, 5000),
    seeds=(0, 1, 2),
    recommended=True,
)
print("train:", cfg.train.stats)
print("test: ", cfg.test.stats)

rows = run_sizing_experiment(cfg, default_lexicon())
print(summarize(rows))

# %%
# The training sentences inherit the polarity of the review they came from,
# so many are neutral and accuracy stays modest. The test sentences are
# short snippets labelled one by one.
