"""Synonym lexicon compiled from WordNet.

The runtime format is a small TSV file (``headword<TAB>syn1,syn2,...``).
:func:`build_from_wordnet` reads the raw WordNet 3.x database files
(``index.<pos>`` / ``data.<pos>``) and produces a :class:`SynonymLexicon`
that unions the co-members of every synset a lemma belongs to.
"""

from __future__ import annotations

import gzip
import io
import os
import re
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Union

from .errors import DuplicateEntry, MalformedLine, MissingFile
from .text import canonical

PathLike = Union[str, "os.PathLike[str]"]

POS_FILES = ("noun", "verb", "adj", "adv")

# data.adj marks attributive/predicative use on the lemma itself: "back(a)".
_ADJ_MARKER = re.compile(r"\((?:a|p|ip)\)$")
_OFFSET = re.compile(r"^\d{8}$")


class SynonymLexicon(Mapping):
    """Immutable map from a word to its ordered tuple of synonyms."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[str, Iterable[str]] = ()):
        clean = {}
        for word, syns in dict(entries).items():
            syns = tuple(syns)
            if word in syns:
                raise ValueError(f"{word!r} lists itself as a synonym")
            if len(set(syns)) != len(syns):
                raise ValueError(f"duplicate synonyms for {word!r}")
            if any(not s for s in syns):
                raise ValueError(f"empty synonym for {word!r}")
            clean[word] = syns
        self._entries = clean

    def __getitem__(self, word: str) -> tuple:
        return self._entries[word]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, SynonymLexicon):
            return list(self._entries.items()) == list(other._entries.items())
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        return f"<SynonymLexicon: {len(self)} entries>"

    def get(self, word: str, default=()) -> tuple:
        return self._entries.get(word, default)

    def synonyms(self, word: str) -> list[str]:
        """Synonyms of ``word``; empty for unknown words."""
        return list(self._entries.get(word, ()))


def synonyms(lexicon: SynonymLexicon, word: str) -> list[str]:
    return lexicon.synonyms(word)


# ---------------------------------------------------------------------------
# WordNet database files
# ---------------------------------------------------------------------------


def _canonical_lemma(raw: str) -> str:
    return canonical(_ADJ_MARKER.sub("", raw).replace("_", " "))


def _records(path: Path) -> Iterator[tuple[int, str]]:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            # license header lines start with two spaces
            if not line.strip() or line.startswith(" "):
                continue
            yield lineno, line


def parse_data_file(path: PathLike) -> dict[str, list[str]]:
    """Map each synset offset in a ``data.<pos>`` file to its member lemmas."""
    path = Path(path)
    synsets = {}
    for lineno, line in _records(path):
        fields = line.split()
        try:
            offset = fields[0]
            if not _OFFSET.match(offset):
                raise ValueError
            w_cnt = int(fields[3], 16)
            words = fields[4 : 4 + 2 * w_cnt : 2]
            if w_cnt < 1 or len(words) != w_cnt:
                raise ValueError
            int(fields[4 + 2 * w_cnt])  # p_cnt must follow the word list
        except (IndexError, ValueError):
            raise MalformedLine(path, lineno) from None
        members = []
        for w in words:
            lemma = _canonical_lemma(w)
            if lemma and lemma not in members:
                members.append(lemma)
        synsets[offset] = members
    return synsets


def parse_index_file(path: PathLike) -> Iterator[tuple[int, str, list[str]]]:
    """Yield ``(lineno, lemma, synset_offsets)`` for every ``index.<pos>`` entry."""
    path = Path(path)
    for lineno, line in _records(path):
        fields = line.split()
        try:
            lemma = fields[0]
            synset_cnt = int(fields[2])
            p_cnt = int(fields[3])
            offsets = fields[6 + p_cnt :]
            int(fields[4 + p_cnt])  # sense_cnt
            if len(offsets) != synset_cnt or not all(map(_OFFSET.match, offsets)):
                raise ValueError
        except (IndexError, ValueError):
            raise MalformedLine(path, lineno) from None
        yield lineno, lemma, offsets


def build_from_wordnet(wordnet_dir: PathLike) -> SynonymLexicon:
    """Compile a lexicon from a WordNet 3.x ``dict`` directory.

    Each lemma's synonyms are the union, over all of its synsets in every
    part of speech, of the other members of those synsets. Underscores
    become spaces and every string is passed through the tokenizer so that
    substituted synonyms are already in canonical token form. Lemmas whose
    synsets have no other members are left out.
    """
    root = Path(wordnet_dir)
    missing = [
        f"{kind}.{pos}"
        for pos in POS_FILES
        for kind in ("index", "data")
        if not (root / f"{kind}.{pos}").is_file()
    ]
    if missing:
        raise MissingFile(f"{root}: missing WordNet file(s): {', '.join(missing)}")

    merged: dict[str, set] = {}
    for pos in POS_FILES:
        synsets = parse_data_file(root / f"data.{pos}")
        index_path = root / f"index.{pos}"
        for lineno, raw, offsets in parse_index_file(index_path):
            lemma = _canonical_lemma(raw)
            if not lemma:
                continue
            bucket = merged.setdefault(lemma, set())
            for off in offsets:
                try:
                    bucket.update(synsets[off])
                except KeyError:
                    raise MalformedLine(
                        index_path, lineno, f"synset {off} not found in data.{pos}"
                    ) from None
    entries = {}
    for lemma in sorted(merged):
        syns = sorted(merged[lemma] - {lemma})
        if syns:
            entries[lemma] = syns
    return SynonymLexicon(entries)


# ---------------------------------------------------------------------------
# TSV format
# ---------------------------------------------------------------------------


def _open_text(path: PathLike, mode: str):
    if str(path).endswith(".gz"):
        return gzip.open(path, mode + "t", encoding="utf-8", newline="\n")
    return open(path, mode, encoding="utf-8", newline="\n")


def dumps_tsv(lexicon: SynonymLexicon) -> str:
    lines = []
    for word in sorted(lexicon):
        syns = lexicon[word]
        for s in (word, *syns):
            if any(c in s for c in ",\t\n\r"):
                raise ValueError(f"cannot store {s!r} in TSV: contains a separator")
        lines.append(f"{word}\t{','.join(syns)}\n")
    return "".join(lines)


def save_tsv(lexicon: SynonymLexicon, path: PathLike) -> None:
    """Write ``lexicon`` sorted by headword. ``.gz`` paths are gzip-compressed
    with a zeroed timestamp so repeated builds stay byte-identical."""
    data = dumps_tsv(lexicon).encode("utf-8")
    if str(path).endswith(".gz"):
        buf = io.BytesIO()
        with gzip.GzipFile(filename="", mode="wb", fileobj=buf, mtime=0) as gz:
            gz.write(data)
        data = buf.getvalue()
    with open(path, "wb") as fh:
        fh.write(data)


def load_tsv(path: PathLike) -> SynonymLexicon:
    entries: dict[str, list[str]] = {}
    with _open_text(path, "r") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            fields = line.split("\t")
            if len(fields) != 2 or not fields[0]:
                raise MalformedLine(path, lineno, "expected '<headword>\\t<syn1>,<syn2>,...'")
            word, rest = fields
            syns = rest.split(",") if rest else []
            if any(not s for s in syns) or word in syns or len(set(syns)) != len(syns):
                raise MalformedLine(path, lineno, "bad synonym list")
            if word in entries:
                raise DuplicateEntry(f"{path}:{lineno}: duplicate headword {word!r}")
            entries[word] = syns
    return SynonymLexicon(entries)


DEFAULT_LEXICON_RESOURCE = "data/lexicon.tsv.gz"


@lru_cache(maxsize=1)
def default_lexicon() -> SynonymLexicon:
    """The WordNet 3.0 lexicon shipped with the package."""
    with resources.as_file(resources.files("eda").joinpath(DEFAULT_LEXICON_RESOURCE)) as p:
        return load_tsv(p)
