import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from eda.cli import main
from eda.harness.corpus import load_corpus
from eda.harness.experiments import CSV_HEADER
from eda.lexicon import load_tsv, save_tsv
from eda.rng import RngStream

WNDB = Path(__file__).parent / "fixtures" / "wndb"


def write_corpus(path, n, seed=0):
    rng = RngStream.derive(seed)
    words = ["sad", "back", "road", "life", "human", "comedy", "superior", "good", "bad", "the", "of"]
    lines = []
    for i in range(n):
        label = "pos" if rng.randbelow(2) else "neg"
        toks = [rng.choice(words) for _ in range(3 + rng.randbelow(8))]
        lines.append(f"{label}\t{' '.join(toks).capitalize()}.\n")
    path.write_text("".join(lines), encoding="utf-8")
    return path


@pytest.fixture(scope="module")
def lexicon_tsv(tmp_path_factory):
    path = tmp_path_factory.mktemp("lex") / "lexicon.tsv"
    assert main(["lexicon", "build", "--wordnet-dir", str(WNDB), "--out", str(path)]) == 0
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_lexicon_build(lexicon_tsv, tmp_path, capsys):
    assert "lamentable" in load_tsv(lexicon_tsv).synonyms("sad")
    rows = dict(line.split("\t") for line in lexicon_tsv.read_text().splitlines())
    assert "lamentable" in rows["sad"].split(",")
    again = tmp_path / "again.tsv"
    code, out, _ = run(capsys, "lexicon", "build", "--wordnet-dir", WNDB, "--out", again)
    assert code == 0 and "entries" in out
    assert again.read_bytes() == lexicon_tsv.read_bytes()


def test_lexicon_build_missing_file(tmp_path, capsys):
    wndb = tmp_path / "wndb"
    shutil.copytree(WNDB, wndb)
    (wndb / "data.verb").unlink()
    out = tmp_path / "lex.tsv"
    code, _, err = run(capsys, "lexicon", "build", "--wordnet-dir", wndb, "--out", out)
    assert code == 1
    assert err.startswith("eda: error: MissingFile") and err.count("\n") == 1
    assert not out.exists()
    assert list(tmp_path.iterdir()) == [wndb]


def test_augment_size_law(tmp_path, lexicon_tsv, capsys):
    src = write_corpus(tmp_path / "in.tsv", 100)
    dst = tmp_path / "out.tsv"
    code, out, _ = run(capsys, "augment", "-i", src, "-o", dst, "--n-aug", 4, "--lexicon", lexicon_tsv)
    assert code == 0
    assert out.strip() == "read 100, wrote 500"
    original, augmented = load_corpus(src), load_corpus(dst)
    assert len(augmented) == 500
    assert augmented.examples[:100] == original.examples
    for i, ex in enumerate(original):
        assert all(v.label == ex.label for v in augmented.examples[100 + 4 * i: 104 + 4 * i])


def test_augment_zero_is_canonical_copy(tmp_path, lexicon_tsv, capsys):
    src = write_corpus(tmp_path / "in.tsv", 30)
    dst = tmp_path / "out.tsv"
    code, _, _ = run(capsys, "augment", "-i", src, "-o", dst, "--n-aug", 0, "--lexicon", lexicon_tsv)
    assert code == 0
    expected = "".join(f"{lab}\t{' '.join(text.lower().rstrip('.').split())}\n"
                       for lab, text in (line.split("\t") for line in src.read_text().splitlines()))
    assert dst.read_text() == expected


def test_augment_deterministic(tmp_path, lexicon_tsv, capsys):
    src = write_corpus(tmp_path / "in.tsv", 50)
    outs = []
    for k, extra in enumerate([[], [], ["--workers", 8]]):
        dst = tmp_path / f"out{k}.tsv"
        code, _, _ = run(capsys, "augment", "-i", src, "-o", dst, "--seed", 42, "--lexicon", lexicon_tsv, *extra)
        assert code == 0
        outs.append(dst.read_bytes())
    assert outs[0] == outs[1] == outs[2]
    dst = tmp_path / "other.tsv"
    run(capsys, "augment", "-i", src, "-o", dst, "--seed", 43, "--lexicon", lexicon_tsv)
    assert dst.read_bytes() != outs[0]


def test_augment_fixed_op_and_overrides(tmp_path, lexicon_tsv, capsys):
    src = write_corpus(tmp_path / "in.tsv", 20)
    dst = tmp_path / "out.tsv"
    code, _, _ = run(capsys, "augment", "-i", src, "-o", dst, "--op", "rs", "--alpha-rs", 0.5,
                     "--n-aug", 2, "--lexicon", lexicon_tsv)
    assert code == 0
    out = load_corpus(dst)
    for i, ex in enumerate(out.examples[:20]):
        for v in out.examples[20 + 2 * i: 22 + 2 * i]:
            assert sorted(v.tokens) == sorted(ex.tokens)


def test_augment_custom_stopwords(tmp_path, capsys):
    lex = tmp_path / "lex.tsv"
    lex.write_text("sad\tblue\n", encoding="utf-8")
    sw = tmp_path / "sw.txt"
    sw.write_text("sad\n", encoding="utf-8")
    src = tmp_path / "in.tsv"
    src.write_text("pos\tsad sad sad\n", encoding="utf-8")
    dst = tmp_path / "out.tsv"
    code, _, _ = run(capsys, "augment", "-i", src, "-o", dst, "--op", "sr", "--n-aug", 5,
                     "--lexicon", lex, "--stopwords", sw)
    assert code == 0
    assert "blue" not in dst.read_text()


@pytest.mark.parametrize("argv", [
    ["augment", "-i", "missing.tsv", "-o", "out.tsv"],
    ["augment", "-i", "in.tsv", "-o", "out.tsv", "--alpha", "1.5"],
    ["augment", "-i", "in.tsv", "-o", "out.tsv", "--n-aug", "-1"],
    ["augment", "-i", "in.tsv", "-o", "out.tsv", "--op", "xx"],
    ["augment", "-i", "bad.tsv", "-o", "out.tsv"],
    ["experiment", "--train", "in.tsv", "--test", "in.tsv", "--sizes", "9999", "--out", "out.tsv"],
    ["sweep", "naug", "--train", "in.tsv", "--test", "in.tsv", "--recommended", "--out", "out.tsv"],
    ["bogus"],
    [],
])
def test_errors_exit_1_without_output(tmp_path, capsys, monkeypatch, argv):
    monkeypatch.chdir(tmp_path)
    write_corpus(tmp_path / "in.tsv", 20)
    (tmp_path / "bad.tsv").write_text("pos\tfine\nno tab\n", encoding="utf-8")
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("eda: error: ") and err.count("\n") == 1
    assert not (tmp_path / "out.tsv").exists()
    assert sorted(p.name for p in tmp_path.iterdir()) == ["bad.tsv", "in.tsv"]


def test_experiment_single_row(tmp_path, lexicon_tsv, capsys):
    train = write_corpus(tmp_path / "train.tsv", 600, seed=1)
    test = write_corpus(tmp_path / "test.tsv", 100, seed=2)
    out = tmp_path / "res.csv"
    code, stdout, _ = run(capsys, "experiment", "--train", train, "--test", test, "--sizes", 500,
                          "--seeds", 1, "--mode", "baseline", "--out", out, "--lexicon", lexicon_tsv)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 2 and lines[1].startswith("train,baseline,none,0,0,500,1,")
    assert "±" in stdout


def test_experiment_recommended(tmp_path, lexicon_tsv, capsys):
    train = write_corpus(tmp_path / "train.tsv", 600, seed=1)
    test = write_corpus(tmp_path / "test.tsv", 100, seed=2)
    out = tmp_path / "res.csv"
    code, _, _ = run(capsys, "experiment", "--train", train, "--test", test, "--sizes", "100,all",
                     "--seeds", 0, "--mode", "eda", "--recommended", "--out", out, "--lexicon", lexicon_tsv)
    assert code == 0
    rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
    assert [(r[3], r[4], r[5]) for r in rows] == [("0.05", "16", "100"), ("0.05", "16", "600")]


def test_sweeps(tmp_path, lexicon_tsv, capsys):
    train = write_corpus(tmp_path / "train.tsv", 200, seed=1)
    test = write_corpus(tmp_path / "test.tsv", 50, seed=2)
    common = ["--train", train, "--test", test, "--sizes", "50,all", "--seeds", "0,1", "--lexicon", lexicon_tsv]
    out = tmp_path / "naug.csv"
    code, _, _ = run(capsys, "sweep", "naug", "--values", "1,2,4,8,16,32", "--out", out, *common)
    assert code == 0
    assert len(out.read_text().splitlines()) == 1 + 6 * 2 * 2
    out2 = tmp_path / "op.csv"
    code, _, _ = run(capsys, "sweep", "op", "--op", "sr", "--n-aug", 2, "--out", out2, *common)
    assert code == 0
    lines = out2.read_text().splitlines()
    assert len(lines) == 1 + 6 * 2 * 2
    assert {line.split(",")[2] for line in lines[1:]} == {"sr"}
    again = tmp_path / "op2.csv"
    run(capsys, "sweep", "op", "--op", "sr", "--n-aug", 2, "--out", again, "--workers", 3, *common)
    assert again.read_bytes() == out2.read_bytes()


def test_stats(tmp_path, capsys):
    path = tmp_path / "c.tsv"
    path.write_text("0\ta sad film\n1\tgreat fun\n", encoding="utf-8")
    code, out, _ = run(capsys, "stats", path)
    assert code == 0
    assert out.strip() == f"{path}: c=2 l=2.5 N=2 |V|=5"


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "eda", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("eda ")
