"""The four editing operations and the per-sentence augmentation driver.

All operations take a token list and return a new one; the input is never
mutated. Randomness comes only from the :class:`~eda.rng.RngStream`
passed in, so equal streams give equal outputs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Sequence

from .errors import EmptySentence
from .rng import MASK64, RngStream
from .text import DEFAULT_STOPWORDS, tokenize

# bounded retry budgets for random insertion / random swap
RI_MAX_PICKS = 10
RS_MAX_REDRAWS = 3


class Op(str, enum.Enum):
    SR = "sr"
    RI = "ri"
    RS = "rs"
    RD = "rd"

    def __str__(self) -> str:
        return self.value


OPS = (Op.SR, Op.RI, Op.RS, Op.RD)


@dataclass(frozen=True)
class AugmentParams:
    """Augmentation settings.

    ``policy=None`` picks one of the four operations uniformly at random for
    every generated sentence; an :class:`Op` value applies only that one.
    An ``alpha`` of 0 disables its operation.
    """

    alpha_sr: float = 0.1
    alpha_ri: float = 0.1
    alpha_rs: float = 0.1
    p_rd: float = 0.1
    n_aug: int = 9
    policy: Optional[Op] = None
    seed: int = 0

    def __post_init__(self):
        for name in ("alpha_sr", "alpha_ri", "alpha_rs", "p_rd"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")
        if int(self.n_aug) != self.n_aug or self.n_aug < 0:
            raise ValueError(f"n_aug must be a non-negative integer, got {self.n_aug}")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.policy is not None:
            object.__setattr__(self, "policy", Op(self.policy))

    @classmethod
    def from_alpha(cls, alpha: float, n_aug: int = 9, policy=None, seed: int = 0) -> "AugmentParams":
        """Same ``alpha`` for SR, RI and RS, and ``p = alpha`` for RD."""
        return cls(alpha, alpha, alpha, alpha, n_aug=n_aug, policy=policy, seed=seed)

    def alpha_for(self, op: Op) -> float:
        return {Op.SR: self.alpha_sr, Op.RI: self.alpha_ri, Op.RS: self.alpha_rs, Op.RD: self.p_rd}[op]

    @property
    def alpha(self) -> Optional[float]:
        """The single alpha in effect, or None when they differ."""
        if self.policy is not None:
            return self.alpha_for(self.policy)
        vals = {self.alpha_sr, self.alpha_ri, self.alpha_rs, self.p_rd}
        return vals.pop() if len(vals) == 1 else None

    def with_seed(self, seed: int) -> "AugmentParams":
        return replace(self, seed=seed)


@lru_cache(maxsize=4096)
def compute_n(alpha: float, length: int) -> int:
    """Number of words to edit: ``max(1, floor(alpha * length))``.

    The product is taken on the decimal value of ``alpha`` so that, e.g.,
    ``compute_n(0.3, 10)`` is 3 and not 2.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    if length < 1:
        raise ValueError("length must be >= 1")
    return max(1, math.floor(Fraction(repr(float(alpha))) * length))


@lru_cache(maxsize=65536)
def _phrase(synonym: str) -> tuple:
    return tuple(tokenize(synonym))


def synonym_replacement(tokens: Sequence[str], n: int, lexicon: Mapping,
                        rng: RngStream, stopwords=DEFAULT_STOPWORDS) -> list[str]:
    """Replace up to ``n`` distinct non-stop-word types with a random synonym.

    Every occurrence of a chosen word is replaced by the same synonym.
    """
    eligible = []
    seen = set()
    for t in tokens:
        if t not in seen:
            seen.add(t)
            if t not in stopwords and lexicon.get(t):
                eligible.append(t)
    k = min(n, len(eligible))
    if k <= 0:
        return list(tokens)
    # partial Fisher-Yates: the first k slots become a uniform sample
    m = len(eligible)
    for i in range(k):
        j = i + rng.randbelow(m - i)
        eligible[i], eligible[j] = eligible[j], eligible[i]
    replacement = {}
    for word in eligible[:k]:
        phrase = _phrase(rng.choice(lexicon[word]))
        if phrase:
            replacement[word] = phrase
    out = []
    for t in tokens:
        r = replacement.get(t)
        if r is None:
            out.append(t)
        else:
            out.extend(r)
    return out


def random_insertion(tokens: Sequence[str], n: int, lexicon: Mapping,
                     rng: RngStream, stopwords=DEFAULT_STOPWORDS) -> list[str]:
    """Insert a synonym of a random non-stop word at a random position, ``n`` times.

    A round gives up after ``RI_MAX_PICKS`` picks that land on a stop word or
    a word without synonyms.
    """
    out = list(tokens)
    if not out:
        return out
    for _ in range(n):
        for _pick in range(RI_MAX_PICKS):
            word = out[rng.randbelow(len(out))]
            syns = None if word in stopwords else lexicon.get(word)
            if syns:
                break
        else:
            continue
        phrase = _phrase(rng.choice(syns))
        pos = rng.randbelow(len(out) + 1)
        out[pos:pos] = phrase
    return out


def random_swap(tokens: Sequence[str], n: int, rng: RngStream) -> list[str]:
    """Swap two random positions, ``n`` times.

    If the second position keeps matching the first after ``RS_MAX_REDRAWS``
    redraws, that round is skipped.
    """
    out = list(tokens)
    size = len(out)
    if size < 2:
        return out
    for _ in range(n):
        i = rng.randbelow(size)
        j = rng.randbelow(size)
        redraws = 0
        while j == i and redraws < RS_MAX_REDRAWS:
            j = rng.randbelow(size)
            redraws += 1
        if i != j:
            out[i], out[j] = out[j], out[i]
    return out


def random_deletion(tokens: Sequence[str], p: float, rng: RngStream) -> list[str]:
    """Drop each token with probability ``p``; never return an empty sentence
    for a non-empty input (falls back to one random original token)."""
    if not tokens:
        return []
    kept = [t for t in tokens if rng.random() >= p]
    if not kept:
        return [tokens[rng.randbelow(len(tokens))]]
    return kept


def apply_op(op: Op, tokens: Sequence[str], params: AugmentParams, lexicon: Mapping,
             rng: RngStream, stopwords=DEFAULT_STOPWORDS) -> list[str]:
    if op is Op.RD:
        return random_deletion(tokens, params.p_rd, rng)
    alpha = params.alpha_for(op)
    if alpha == 0 or not tokens:
        return list(tokens)
    n = compute_n(alpha, len(tokens))
    if op is Op.SR:
        return synonym_replacement(tokens, n, lexicon, rng, stopwords)
    if op is Op.RI:
        return random_insertion(tokens, n, lexicon, rng, stopwords)
    return random_swap(tokens, n, rng)


def augment_sentence(tokens: Sequence[str], params: AugmentParams, lexicon: Mapping,
                     stopwords=DEFAULT_STOPWORDS, sentence_index: int = 0) -> list[list[str]]:
    """Generate ``params.n_aug`` augmented versions of one sentence.

    Variant ``v`` draws from ``RngStream.derive(params.seed, sentence_index, v)``
    and applies one operation chosen by ``params.policy``.
    """
    if params.n_aug == 0:
        return []
    if not tokens:
        raise EmptySentence("cannot augment an empty sentence")
    variants = []
    for v in range(params.n_aug):
        rng = RngStream.derive(params.seed, sentence_index, v)
        op = params.policy if params.policy is not None else OPS[rng.randbelow(4)]
        variants.append(apply_op(op, tokens, params, lexicon, rng, stopwords))
    return variants


def augment_text(text: str, params: Optional[AugmentParams] = None, lexicon: Optional[Mapping] = None,
                 stopwords=DEFAULT_STOPWORDS, sentence_index: int = 0) -> list[str]:
    """Convenience wrapper: raw text in, augmented strings out.

    >>> out = augment_text("a sad superior human comedy", AugmentParams(n_aug=3, seed=7))
    >>> len(out)
    3
    """
    if params is None:
        params = AugmentParams()
    if lexicon is None:
        from .lexicon import default_lexicon

        lexicon = default_lexicon()
    tokens = tokenize(text)
    return [" ".join(v) for v in augment_sentence(tokens, params, lexicon, stopwords, sentence_index)]
