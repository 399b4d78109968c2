"""Easy data augmentation (EDA) for text classification.

Four random, label-preserving edits (synonym replacement, random
insertion, random swap and random deletion), a WordNet-derived synonym
lexicon, and a small experiment harness built around a naive Bayes
classifier.

>>> from eda import AugmentParams, augment_text
>>> variants = augment_text("the movie was a sad and lovely mess", AugmentParams(n_aug=4, seed=1))
>>> len(variants)
4
"""

__version__ = "0.1.0"

from .augment import (
    OPS,
    AugmentParams,
    Op,
    augment_sentence,
    augment_text,
    compute_n,
    random_deletion,
    random_insertion,
    random_swap,
    synonym_replacement,
)
from .errors import (
    DuplicateEntry,
    EdaError,
    EmptyCorpus,
    EmptySentence,
    MalformedLine,
    MissingFile,
    SingleClassCorpus,
    SizeTooLarge,
)
from .lexicon import SynonymLexicon, build_from_wordnet, default_lexicon, load_tsv, save_tsv, synonyms
from .rng import RngStream
from .text import DEFAULT_STOPWORDS, StopWords, detokenize, is_stopword, tokenize

__all__ = [
    "OPS", "AugmentParams", "DEFAULT_STOPWORDS", "DuplicateEntry", "EdaError", "EmptyCorpus",
    "EmptySentence", "MalformedLine", "MissingFile", "Op", "RngStream", "SingleClassCorpus",
    "SizeTooLarge", "StopWords", "SynonymLexicon", "augment_sentence", "augment_text",
    "build_from_wordnet", "compute_n", "default_lexicon", "detokenize", "is_stopword",
    "load_tsv", "random_deletion", "random_insertion", "random_swap", "save_tsv",
    "synonym_replacement", "synonyms", "tokenize",
]
