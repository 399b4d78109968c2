"""Build the binary movie-sentiment corpus used by the direction check.

Sources (both from Pang & Lee's movie-review data, in the balanced samples
redistributed with the Pattern toolkit's test corpora):

* ``raw/polarity-v2.0-reviews.csv.gz``: 1,500 full reviews, 750 per class.
  Each review is split into sentences and every sentence inherits the
  review's polarity. Sentences with fewer than 4 tokens are dropped.
  This is the training set (noisy sentence labels, ~46k lines).
* ``raw/sentence-polarity-v1.0.csv.gz``: 4,000 hand-labelled snippet
  sentences, 2,000 per class. This is the test set.

Labels are ``pos`` / ``neg``. Output is gzip-compressed with a zeroed
timestamp so rebuilding is byte-identical.

    python data/build_review_corpus.py
"""

import csv
import gzip
import io
from pathlib import Path

from eda.text import tokenize

HERE = Path(__file__).parent
MIN_TOKENS = 4
LABELS = {"1": "pos", "-1": "neg"}


def read_rows(name):
    with gzip.open(HERE / "raw" / name, "rt", encoding="utf-8-sig") as fh:
        return list(csv.reader(fh))


def write(name, lines):
    buf = io.BytesIO()
    with gzip.GzipFile(filename="", mode="wb", fileobj=buf, mtime=0) as gz:
        gz.write("".join(lines).encode("utf-8"))
    (HERE / name).write_bytes(buf.getvalue())
    print(name, len(lines))


def main():
    train = []
    for label, text in read_rows("polarity-v2.0-reviews.csv.gz"):
        for line in text.splitlines():
            tokens = tokenize(line)
            if len(tokens) >= MIN_TOKENS:
                train.append(f"{LABELS[label]}\t{' '.join(tokens)}\n")
    test = []
    for label, text in read_rows("sentence-polarity-v1.0.csv.gz"):
        tokens = tokenize(text)
        if tokens:
            test.append(f"{LABELS[label]}\t{' '.join(tokens)}\n")
    write("movie.train.tsv.gz", train)
    write("movie.test.tsv.gz", test)


if __name__ == "__main__":
    main()
