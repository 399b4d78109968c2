"""Labeled corpora: reading, writing, subsampling and augmentation."""

from __future__ import annotations

import gzip
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional

from ..augment import AugmentParams, augment_sentence
from ..errors import EmptyCorpus, MalformedLine, SizeTooLarge
from ..rng import RngStream
from ..text import DEFAULT_STOPWORDS, detokenize, tokenize

# stream path component reserved for subsampling draws
_SUBSAMPLE_STREAM = 0x53554253


@dataclass(frozen=True)
class LabeledExample:
    label: str
    tokens: tuple

    def __post_init__(self):
        if not self.label:
            raise ValueError("label must be non-empty")
        if not isinstance(self.tokens, tuple):
            object.__setattr__(self, "tokens", tuple(self.tokens))

    @property
    def text(self) -> str:
        return detokenize(self.tokens)


@dataclass(frozen=True)
class CorpusStats:
    num_classes: int
    mean_length: float
    size: int
    vocab_size: int

    def __str__(self) -> str:
        return (f"c={self.num_classes} l={self.mean_length:.1f} "
                f"N={self.size} |V|={self.vocab_size}")


@dataclass
class Corpus:
    """Ordered labeled examples.

    ``weight`` is the count weight every example carries when a model is
    trained on the corpus. Augmentation sets it to ``1 / (1 + n_aug)`` so an
    original sentence and its variants together weigh as much as the
    original alone.
    """

    examples: list
    name: str = ""
    weight: float = 1.0
    _stats: Optional[CorpusStats] = field(default=None, init=False, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.examples)

    def __iter__(self) -> Iterator[LabeledExample]:
        return iter(self.examples)

    def __getitem__(self, i):
        return self.examples[i]

    @property
    def labels(self) -> list[str]:
        return sorted({ex.label for ex in self.examples})

    def label_counts(self) -> Counter:
        return Counter(ex.label for ex in self.examples)

    @property
    def stats(self) -> CorpusStats:
        if self._stats is None:
            vocab = set()
            total = 0
            for ex in self.examples:
                vocab.update(ex.tokens)
                total += len(ex.tokens)
            n = len(self.examples)
            self._stats = CorpusStats(len(self.labels), total / n if n else 0.0, n, len(vocab))
        return self._stats


def _open(path, mode="r"):
    if str(path).endswith(".gz"):
        return gzip.open(path, mode + "t", encoding="utf-8", newline="\n")
    return open(path, mode, encoding="utf-8", newline="\n")


def parse_lines(lines: Iterable[str], source="<input>") -> list[LabeledExample]:
    examples = []
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        label, sep, text = line.partition("\t")
        label = label.strip()
        if not sep or not label:
            raise MalformedLine(source, lineno, "expected '<label>\\t<text>'")
        tokens = tokenize(text)
        if not tokens:
            raise MalformedLine(source, lineno, "no tokens in text")
        examples.append(LabeledExample(label, tuple(tokens)))
    return examples


def load_corpus(path, name: Optional[str] = None) -> Corpus:
    """Read a ``<label>\\t<text>`` file (optionally gzip-compressed)."""
    path = Path(path)
    with _open(path) as fh:
        examples = parse_lines(fh, path)
    if not examples:
        raise EmptyCorpus(f"{path}: no examples")
    if name is None:
        name = path.name.split(".")[0]
    return Corpus(examples, name)


def format_corpus(corpus: Iterable[LabeledExample]) -> str:
    return "".join(f"{ex.label}\t{detokenize(ex.tokens)}\n" for ex in corpus)


def save_corpus(corpus: Iterable[LabeledExample], path) -> None:
    with _open(path, "w") as fh:
        fh.write(format_corpus(corpus))


def _sample_indices(n: int, k: int, rng: RngStream) -> list[int]:
    # partial Fisher-Yates; a smaller k draws a prefix of a larger k's picks
    idx = list(range(n))
    for i in range(k):
        j = i + rng.randbelow(n - i)
        idx[i], idx[j] = idx[j], idx[i]
    return idx[:k]


def subsample(corpus: Corpus, size: int, seed: int, stratified: bool = False) -> Corpus:
    """Random subset of ``size`` examples, in their original order.

    Uniform without replacement by default. ``stratified=True`` keeps the
    class proportions (largest-remainder rounding).
    """
    n = len(corpus)
    if size > n:
        raise SizeTooLarge(f"subset size {size} exceeds corpus size {n}")
    if size < 1:
        raise ValueError("subset size must be >= 1")
    if not stratified:
        picked = _sample_indices(n, size, RngStream.derive(seed, _SUBSAMPLE_STREAM))
    else:
        by_label: dict[str, list[int]] = {}
        for i, ex in enumerate(corpus.examples):
            by_label.setdefault(ex.label, []).append(i)
        labels = sorted(by_label)
        quotas = {lab: size * len(by_label[lab]) // n for lab in labels}
        leftover = size - sum(quotas.values())
        order = sorted(labels, key=lambda lab: (-(size * len(by_label[lab]) % n), lab))
        for lab in order[:leftover]:
            quotas[lab] += 1
        picked = []
        for k, lab in enumerate(labels):
            members = by_label[lab]
            rng = RngStream.derive(seed, _SUBSAMPLE_STREAM, k + 1)
            picked.extend(members[i] for i in _sample_indices(len(members), quotas[lab], rng))
    picked.sort()
    return Corpus([corpus.examples[i] for i in picked], corpus.name, corpus.weight)


def augment_corpus(corpus: Corpus, params: AugmentParams, lexicon: Mapping,
                   stopwords=DEFAULT_STOPWORDS, workers: int = 1) -> Corpus:
    """Originals first, then the ``n_aug`` variants of each example in order.

    Example ``i`` uses stream path ``(params.seed, i, v)``, so the result does
    not depend on ``workers``.
    """
    examples = corpus.examples
    if params.n_aug == 0:
        return Corpus(list(examples), corpus.name, corpus.weight)

    def work(span: range) -> list:
        out = []
        for i in span:
            ex = examples[i]
            for v in augment_sentence(ex.tokens, params, lexicon, stopwords, sentence_index=i):
                out.append(LabeledExample(ex.label, tuple(v)))
        return out

    n = len(examples)
    if workers <= 1 or n < 2:
        chunks = [work(range(n))]
    else:
        step = -(-n // (workers * 4))
        spans = [range(a, min(a + step, n)) for a in range(0, n, step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(work, spans))
    augmented = list(examples)
    for chunk in chunks:
        augmented.extend(chunk)
    return Corpus(augmented, corpus.name, corpus.weight / (1 + params.n_aug))


def resolve_size(spec, n: int) -> int:
    """Turn ``500``, ``"500"``, ``"10%"``, ``"all"`` or ``"full"`` into a count."""
    if isinstance(spec, int):
        return spec
    s = str(spec).strip().lower()
    if s in ("all", "full"):
        return n
    if s.endswith("%"):
        pct = float(s[:-1])
        if not 0 < pct <= 100:
            raise ValueError(f"percentage out of range: {spec}")
        return max(1, min(n, round(n * pct / 100)))
    return int(s)

