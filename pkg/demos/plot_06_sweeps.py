"""
Ablation and n_aug sweeps
=========================

One operation at a time over a grid of ``alpha``, then the number of
variants per sentence. Both report gains against the paired baseline.
"""

from pathlib import Path

from eda import AugmentParams, Op, default_lexicon
from eda.harness import ExperimentConfig, run_ablation_sweep, run_naug_sweep, summarize

DATA = Path(__file__).resolve().parents[1] / "data"
lex = default_lexicon()

cfg = ExperimentConfig(
    train=DATA / "movie.train.tsv.gz",
    test=DATA / "movie.test.tsv.gz",
    sizes=(500,),
    seeds=(0, 1, 2),
    params=AugmentParams(n_aug=4),
)

# %%
# Random deletion at increasing ``alpha``.

rows = run_ablation_sweep(Op.RD, [0.05, 0.1, 0.3, 0.5], cfg, lex)
print(summarize(rows))

# %%
# All four operations, ``alpha = 0.05``, more variants per sentence.

cfg.params = AugmentParams.from_alpha(0.05)
rows = run_naug_sweep([1, 4, 16], cfg, lex)
print(summarize(rows))
