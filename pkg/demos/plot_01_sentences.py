"""
Sentences and stop words
========================

Every operation works on a plain list of lowercase tokens. Raw text is
split on whitespace, and punctuation is trimmed from the ends of each
piece, so apostrophes and hyphens inside a word survive.
"""

from eda.text import DEFAULT_STOPWORDS, detokenize, is_stopword, tokenize

# %%
# Tokenizing
# ----------

raw = "A sad, superior human comedy -- don't MISS it!"
tokens = tokenize(raw)
print(tokens)
print(detokenize(tokens))

# %%
# A bare ``--`` is made only of allowed characters, so it stays a token.
# Running the canonical form through again changes nothing.

assert tokenize(detokenize(tokens)) == tokens

# %%
# Stop words
# ----------
#
# Synonym replacement and insertion never touch these. The list ships with
# the package and can be swapped out with ``--stopwords`` on the command line.

print(len(DEFAULT_STOPWORDS), "stop words")
print(sorted(DEFAULT_STOPWORDS)[:12])
print([t for t in tokens if not is_stopword(t)])
