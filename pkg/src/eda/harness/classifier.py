"""Multinomial naive Bayes over unigram counts, with add-one smoothing."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from ..errors import EmptyCorpus, SingleClassCorpus
from .corpus import Corpus


@dataclass(frozen=True)
class BowModel:
    labels: tuple
    vocab: dict
    log_prior: np.ndarray        # (c,)
    log_likelihood: np.ndarray   # (c, |V|)
    log_unseen: np.ndarray       # (c,) smoothed likelihood of a zero-count token

    def count_matrix(self, corpus: Corpus) -> tuple[sp.csr_matrix, np.ndarray]:
        """Known-token count matrix and the number of unseen tokens per row."""
        vocab = self.vocab
        rows, cols = [], []
        unseen = np.zeros(len(corpus), dtype=np.int64)
        for r, ex in enumerate(corpus):
            for t in ex.tokens:
                j = vocab.get(t)
                if j is None:
                    unseen[r] += 1
                else:
                    rows.append(r)
                    cols.append(j)
        data = np.ones(len(rows), dtype=np.float64)
        x = sp.csr_matrix((data, (rows, cols)), shape=(len(corpus), len(vocab)))
        x.sum_duplicates()
        return x, unseen

    def decision_scores(self, corpus: Corpus) -> np.ndarray:
        """Unnormalized class log-posteriors, shape ``(N, c)``."""
        x, unseen = self.count_matrix(corpus)
        scores = np.asarray(x @ self.log_likelihood.T)
        return scores + self.log_prior + np.outer(unseen, self.log_unseen)

    def predict(self, corpus: Corpus) -> list[str]:
        best = np.argmax(self.decision_scores(corpus), axis=1)
        return [self.labels[i] for i in best]


def train(corpus: Corpus) -> BowModel:
    """Fit class priors and add-one-smoothed token likelihoods.

    Token counts are scaled by ``corpus.weight`` before smoothing; for an
    unaugmented corpus the weight is 1. A uniform weight leaves the priors
    unchanged.
    """
    labels = tuple(corpus.labels)
    if len(labels) < 2:
        raise SingleClassCorpus(f"need at least 2 classes, got {len(labels)}")
    vocab = {t: i for i, t in enumerate(sorted({t for ex in corpus for t in ex.tokens}))}
    label_ix = {lab: i for i, lab in enumerate(labels)}
    c, v = len(labels), len(vocab)

    flat = []
    doc_counts = np.zeros(c, dtype=np.int64)
    for ex in corpus:
        k = label_ix[ex.label]
        doc_counts[k] += 1
        base = k * v
        flat.extend(base + vocab[t] for t in ex.tokens)
    counts = np.bincount(np.asarray(flat, dtype=np.int64), minlength=c * v).reshape(c, v)

    weighted = counts * corpus.weight
    denom = weighted.sum(axis=1) + v
    log_likelihood = np.log(weighted + 1.0) - np.log(denom)[:, None]
    log_prior = np.log(doc_counts) - np.log(doc_counts.sum())
    return BowModel(labels, vocab, log_prior, log_likelihood, -np.log(denom.astype(np.float64)))


def evaluate(model: BowModel, test: Corpus) -> float:
    """Fraction of ``test`` examples whose argmax label is correct."""
    if len(test) == 0:
        raise EmptyCorpus("test corpus is empty")
    predicted = model.predict(test)
    correct = sum(p == ex.label for p, ex in zip(predicted, test))
    return correct / len(test)
