"""
The synonym lexicon
===================

Synonyms come from WordNet 3.0. A word's synonyms are every other lemma
that shares a synset with it, over all senses and parts of speech. The
compiled table ships with the package as a small TSV.
"""

from pathlib import Path

from eda.lexicon import build_from_wordnet, default_lexicon, synonyms

lex = default_lexicon()
print(lex)

for word in ["sad", "back", "comedy", "road", "zzzqqq"]:
    print(f"{word:>8}: {', '.join(synonyms(lex, word)[:8])}")

# %%
# Multiword lemmas keep their spaces. When one is substituted into a sentence
# it turns into several tokens.

print([s for s in synonyms(lex, "life") if " " in s])

# %%
# Building from WordNet files
# ---------------------------
#
# ``eda lexicon build --wordnet-dir DIR --out lexicon.tsv`` compiles the same
# table from a WordNet ``dict`` directory. The test fixture is a tiny cut of
# the real database and builds in milliseconds.

fixture = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "wndb"
small = build_from_wordnet(fixture)
print(small, synonyms(small, "sad"))
