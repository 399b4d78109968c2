"""
Augmenting a labeled corpus
===========================

A corpus file holds one ``<label>\\t<text>`` example per line. Augmenting it
keeps the originals first and appends each example's variants, in order,
with the source's label.
"""

from pathlib import Path

from eda import AugmentParams, default_lexicon
from eda.harness import augment_corpus, load_corpus, subsample

DATA = Path(__file__).resolve().parents[1] / "data"

test = load_corpus(DATA / "movie.test.tsv.gz")
print("movie.test:", test.stats)

small = subsample(test, 6, seed=0)
out = augment_corpus(small, AugmentParams.from_alpha(0.1, n_aug=2, seed=0), default_lexicon())
print(len(small), "->", len(out))
for ex in out:
    print(f"{ex.label}\t{ex.text}")

# %%
# The augmented corpus carries a count weight of ``1 / (1 + n_aug)``. Naive
# Bayes scales token counts by it, so a sentence and its variants together
# count as much as the sentence alone and the add-one prior keeps its
# relative strength.

print("weight:", out.weight)

# %%
# The same thing from the shell::
#
#     eda augment -i train.tsv -o train.aug.tsv --alpha 0.1 --n-aug 9 --seed 0
