"""Command-line interface.

    eda lexicon build --wordnet-dir DIR --out lexicon.tsv
    eda augment --input train.tsv --output train.aug.tsv --alpha 0.1 --n-aug 9
    eda experiment --train train.tsv --test test.tsv --sizes 500,2000,all --recommended
    eda sweep op --op rd --alphas 0.05,0.1,0.2,0.3,0.4,0.5 --train ... --test ...
    eda sweep naug --values 1,2,4,8,16,32 --train ... --test ...
    eda stats train.tsv test.tsv

Exit status is 0 on success and 1 on any error, with a one-line diagnostic
on stderr. Output files are written to a temporary file and renamed into
place, so a failed run never leaves partial output.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from contextlib import contextmanager
from pathlib import Path

from . import __version__
from .augment import AugmentParams, Op
from .errors import EdaError
from .harness import experiments as ex
from .harness.corpus import augment_corpus, format_corpus, load_corpus
from .lexicon import build_from_wordnet, default_lexicon, load_tsv, save_tsv
from .text import DEFAULT_STOPWORDS, StopWords


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


@contextmanager
def atomic_output(path):
    """Yield a temporary path next to ``path``; rename over it on success."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent or ".")
    os.close(fd)
    try:
        yield Path(tmp)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _sizes(text):
    return [s.strip() for s in text.split(",") if s.strip()]


def _unit(text):
    v = float(text)
    if not 0 <= v <= 1:
        raise argparse.ArgumentTypeError(f"must be in [0, 1], got {text}")
    return v


def _add_resources(p):
    p.add_argument("--lexicon", metavar="PATH", help="lexicon TSV (default: bundled WordNet 3.0 lexicon)")
    p.add_argument("--stopwords", metavar="PATH", help="stop-word file (default: bundled list)")


def _add_params(p):
    g = p.add_argument_group("augmentation")
    g.add_argument("--alpha", type=_unit, default=0.1, help="alpha for SR/RI/RS and p for RD (default 0.1)")
    g.add_argument("--alpha-sr", type=_unit)
    g.add_argument("--alpha-ri", type=_unit)
    g.add_argument("--alpha-rs", type=_unit)
    g.add_argument("--p-rd", type=_unit)
    g.add_argument("--n-aug", type=int, default=9, help="augmented sentences per original (default 9)")
    g.add_argument("--op", choices=["uniform", "sr", "ri", "rs", "rd"], default="uniform",
                   help="operation policy (default: uniform choice per sentence)")
    g.add_argument("--recommended", action="store_true",
                   help="use the preset alpha/n_aug for the training-set size")


def _add_experiment(p):
    p.add_argument("--train", required=True, metavar="PATH")
    p.add_argument("--test", required=True, metavar="PATH")
    p.add_argument("--sizes", type=_sizes, default=["all"],
                   help="comma-separated subset sizes: counts, percentages (10%%) or 'all'")
    p.add_argument("--seeds", type=_ints, default=[0, 1, 2, 3, 4], help="comma-separated seeds")
    p.add_argument("--stratified", action="store_true", help="class-stratified subsampling")
    p.add_argument("--raw-counts", action="store_true",
                   help="train on raw duplicated counts instead of per-source weighting")
    p.add_argument("--dataset", help="dataset id for the CSV (default: train file stem)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default="results.csv", metavar="PATH", help="results CSV (default results.csv)")
    _add_resources(p)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eda", description="Easy data augmentation for text classification.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lex = sub.add_parser("lexicon", help="build the synonym lexicon")
    lex_sub = lex.add_subparsers(dest="lexicon_command", required=True, parser_class=_Parser)
    build = lex_sub.add_parser("build", help="compile a lexicon TSV from WordNet database files")
    build.add_argument("--wordnet-dir", required=True, metavar="DIR")
    build.add_argument("--out", required=True, metavar="PATH")
    build.set_defaults(func=cmd_lexicon_build)

    aug = sub.add_parser("augment", help="augment a labeled corpus")
    aug.add_argument("--input", "-i", required=True, metavar="PATH")
    aug.add_argument("--output", "-o", required=True, metavar="PATH")
    aug.add_argument("--seed", type=int, default=0)
    aug.add_argument("--workers", type=int, default=1)
    _add_params(aug)
    _add_resources(aug)
    aug.set_defaults(func=cmd_augment)

    exp = sub.add_parser("experiment", help="baseline vs. EDA over training-set sizes")
    exp.add_argument("--mode", choices=["baseline", "eda", "both"], default="both")
    _add_experiment(exp)
    _add_params(exp)
    exp.set_defaults(func=cmd_experiment)

    sweep = sub.add_parser("sweep", help="ablation (per-operation alpha) or n_aug sweep")
    sweep_sub = sweep.add_subparsers(dest="sweep_kind", required=True, parser_class=_Parser)
    sop = sweep_sub.add_parser("op", help="single-operation alpha sweep")
    sop.add_argument("--op", required=True, choices=["sr", "ri", "rs", "rd"])
    sop.add_argument("--alphas", type=_floats, default=[0.05, 0.1, 0.2, 0.3, 0.4, 0.5])
    sop.add_argument("--n-aug", type=int, default=9)
    _add_experiment(sop)
    sop.set_defaults(func=cmd_sweep)
    snaug = sweep_sub.add_parser("naug", help="n_aug sweep")
    snaug.add_argument("--values", type=_ints, default=[1, 2, 4, 8, 16, 32])
    _add_experiment(snaug)
    _add_params(snaug)
    snaug.set_defaults(func=cmd_sweep)

    stats = sub.add_parser("stats", help="print corpus statistics")
    stats.add_argument("paths", nargs="+", metavar="PATH")
    stats.set_defaults(func=cmd_stats)
    return parser


# ---------------------------------------------------------------------------


def _params_from(args, seed=0) -> AugmentParams:
    a = args.alpha
    policy = None if getattr(args, "op", "uniform") == "uniform" else Op(args.op)
    return AugmentParams(
        alpha_sr=a if args.alpha_sr is None else args.alpha_sr,
        alpha_ri=a if args.alpha_ri is None else args.alpha_ri,
        alpha_rs=a if args.alpha_rs is None else args.alpha_rs,
        p_rd=a if args.p_rd is None else args.p_rd,
        n_aug=args.n_aug,
        policy=policy,
        seed=seed,
    )


def _resources(args):
    lexicon = load_tsv(args.lexicon) if args.lexicon else default_lexicon()
    stopwords = StopWords.load(args.stopwords) if args.stopwords else DEFAULT_STOPWORDS
    return lexicon, stopwords


def cmd_lexicon_build(args) -> int:
    lexicon = build_from_wordnet(args.wordnet_dir)
    with atomic_output(args.out) as tmp:
        save_tsv(lexicon, tmp)
    print(f"built {len(lexicon)} entries -> {args.out}")
    return 0


def cmd_augment(args) -> int:
    if args.n_aug < 0:
        raise CliError("--n-aug must be >= 0")
    if args.workers < 1:
        raise CliError("--workers must be >= 1")
    corpus = load_corpus(args.input)
    lexicon, stopwords = _resources(args)
    if args.recommended:
        preset = ex.recommended_params(len(corpus))
        params = AugmentParams(preset.alpha_sr, preset.alpha_ri, preset.alpha_rs, preset.p_rd,
                               n_aug=preset.n_aug, policy=_params_from(args).policy, seed=args.seed)
    else:
        params = _params_from(args, seed=args.seed)
    out = augment_corpus(corpus, params, lexicon, stopwords, workers=args.workers)
    with atomic_output(args.output) as tmp:
        tmp.write_text(format_corpus(out), encoding="utf-8", newline="\n")
    print(f"read {len(corpus)}, wrote {len(out)}")
    return 0


def _config(args, modes, params) -> ex.ExperimentConfig:
    if args.workers < 1:
        raise CliError("--workers must be >= 1")
    return ex.ExperimentConfig(
        train=args.train, test=args.test, sizes=args.sizes, seeds=args.seeds, modes=modes,
        params=params, recommended=getattr(args, "recommended", False),
        stratified=args.stratified, dataset=args.dataset, workers=args.workers,
        family_weighting=not args.raw_counts,
    )


def _finish(rows, out) -> int:
    with atomic_output(out) as tmp:
        ex.write_csv(rows, tmp)
    print(ex.summarize(rows))
    print(f"wrote {len(rows)} rows -> {out}")
    return 0


def cmd_experiment(args) -> int:
    if args.n_aug < 0:
        raise CliError("--n-aug must be >= 0")
    modes = ("baseline", "eda") if args.mode == "both" else (args.mode,)
    lexicon, stopwords = _resources(args)
    cfg = _config(args, modes, _params_from(args))
    return _finish(ex.run_sizing_experiment(cfg, lexicon, stopwords), args.out)


def cmd_sweep(args) -> int:
    lexicon, stopwords = _resources(args)
    if args.sweep_kind == "op":
        if args.n_aug < 0:
            raise CliError("--n-aug must be >= 0")
        cfg = _config(args, ("eda",), AugmentParams(n_aug=args.n_aug))
        rows = ex.run_ablation_sweep(Op(args.op), args.alphas, cfg, lexicon, stopwords)
    else:
        if args.recommended:
            raise CliError("--recommended cannot be combined with an n_aug sweep")
        cfg = _config(args, ("eda",), _params_from(args, seed=0))
        rows = ex.run_naug_sweep(args.values, cfg, lexicon, stopwords)
    return _finish(rows, args.out)


def cmd_stats(args) -> int:
    for path in args.paths:
        corpus = load_corpus(path)
        print(f"{path}: {corpus.stats}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (CliError, EdaError, OSError, ValueError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else ""
        if isinstance(exc, EdaError):
            msg = f"{type(exc).__name__}: {msg}"
        print(f"eda: error: {msg or type(exc).__name__}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
