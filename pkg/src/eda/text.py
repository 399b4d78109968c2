"""Sentence model: tokenization, detokenization and stop words.

A sentence is a plain ``list[str]`` of tokens. Every token is non-empty,
lowercase and free of whitespace; punctuation at the edges of a word is
dropped, so ``"sad,"`` becomes ``"sad"`` while ``"don't"`` keeps its
apostrophe.
"""

from __future__ import annotations

import re
import unicodedata
from importlib import resources
from pathlib import Path
from typing import Iterable, Union

Sentence = list[str]

# Characters allowed at either end of a token; anything else is stripped.
_EDGE = re.compile(r"^[^a-z0-9'\-]+|[^a-z0-9'\-]+$")


def _normalize(text: str) -> str:
    # NFC on both sides of lower(): lowercasing can yield decomposed sequences.
    return unicodedata.normalize("NFC", unicodedata.normalize("NFC", text).lower())


def tokenize(text: str) -> Sentence:
    """Split raw text into lowercase word tokens.

    >>> tokenize("A sad, superior human comedy")
    ['a', 'sad', 'superior', 'human', 'comedy']
    >>> tokenize("don't STOP")
    ["don't", 'stop']
    """
    tokens = []
    for piece in _normalize(text).split():
        piece = _EDGE.sub("", piece)
        if piece:
            tokens.append(piece)
    return tokens


def detokenize(tokens: Iterable[str]) -> str:
    return " ".join(tokens)


def canonical(text: str) -> str:
    """Canonical single-space form of ``text`` (``detokenize(tokenize(text))``)."""
    return detokenize(tokenize(text))


class StopWords(frozenset):
    """Immutable set of lowercase stop words."""

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "StopWords":
        words = []
        for line in lines:
            line = line.split("#", 1)[0].strip()
            if line:
                words.extend(tokenize(line))
        return cls(words)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "StopWords":
        """Read a stop-word file: UTF-8, one word per line, ``#`` comments."""
        with open(path, encoding="utf-8") as fh:
            return cls.from_lines(fh)


def _load_default() -> StopWords:
    text = resources.files("eda").joinpath("data/stopwords.txt").read_text("utf-8")
    return StopWords.from_lines(text.splitlines())


DEFAULT_STOPWORDS: StopWords = _load_default()


def is_stopword(token: str, stopwords: frozenset = DEFAULT_STOPWORDS) -> bool:
    return token in stopwords
