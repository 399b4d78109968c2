"""
The four operations
===================

Synonym replacement (SR), random insertion (RI), random swap (RS) and
random deletion (RD). Each takes its randomness from an explicit stream,
so a fixed seed always gives the same edit.
"""

from eda import AugmentParams, Op, augment_sentence, compute_n, default_lexicon, tokenize
from eda.augment import random_deletion, random_insertion, random_swap, synonym_replacement
from eda.rng import RngStream

lex = default_lexicon()
s = tokenize("a sad, superior human comedy played out on the back roads of life")
alpha = 0.1
n = compute_n(alpha, len(s))
print(len(s), "tokens, n =", n)

# %%
# One draw of each
# ----------------

rng = RngStream.derive(7)
print("SR:", " ".join(synonym_replacement(s, n, lex, rng)))
print("RI:", " ".join(random_insertion(s, n, lex, rng)))
print("RS:", " ".join(random_swap(s, n, rng)))
print("RD:", " ".join(random_deletion(s, alpha, rng)))

# %%
# Edit size
# ---------
#
# ``n`` is ``alpha * l`` rounded down, but never below one, so short
# sentences still get edited.

for a in (0.05, 0.1, 0.3, 0.5):
    print(a, [compute_n(a, length) for length in (5, 10, 17, 40)])

# %%
# Variants of one sentence
# ------------------------
#
# With the default policy each variant picks one operation at random.
# Variant ``v`` of sentence ``i`` uses the stream ``(seed, i, v)``.

for v in augment_sentence(s, AugmentParams(n_aug=6, seed=3), lex):
    print("  ", " ".join(v))

# %%
# A fixed policy applies one operation only.

for v in augment_sentence(s, AugmentParams.from_alpha(0.3, n_aug=3, policy=Op.RS, seed=3), lex):
    print("  ", " ".join(v))
