"""Command-line surface for the lexical-contrast pipeline.

Every command is a pure function of its config and input files; all
randomness is seeded through the config, so reruns are byte-identical.
Exit codes: 0 success, 1 computation error, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import dataclasses
import os
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import contrast, corpus, genquest, seeds, tasks, thesaurus

USAGE_ERROR = 2
COMPUTE_ERROR = 1

_COMPUTE_ERRORS = (thesaurus.ThesaurusError, seeds.SeedError, corpus.CorpusError,
                   tasks.TaskError, genquest.GenerationError, ValueError)


@dataclass
class RunConfig:
    thesaurus: Optional[str] = None
    seed_files: list[str] = field(default_factory=list)
    patterns: Optional[list[int]] = None
    no_affix: bool = False
    adjacency: str = "off"
    manual_adjacency: Optional[str] = None
    corpus: Optional[str] = None
    counts: Optional[str] = None
    window: int = 5
    seed: int = 0
    fallback: str = "refrain"
    tiers: str = "I,II"
    dt: Optional[str] = None
    opposites: Optional[str] = None
    pairs: Optional[str] = None
    out: Optional[str] = None

    def dump(self) -> str:
        lines = []
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if isinstance(value, list):
                value = ",".join(str(v) for v in value)
            lines.append(f"{f.name}={'' if value is None else value}")
        return "\n".join(lines) + "\n"


_BOOL_KEYS = {"no_affix"}
_INT_KEYS = {"window", "seed"}
_LIST_KEYS = {"seed_files"}
_INT_LIST_KEYS = {"patterns"}


def load_config(path: str) -> RunConfig:
    """Parse a key=value config file (``#`` comments, blank lines ignored)."""
    config = RunConfig()
    names = {f.name for f in dataclasses.fields(RunConfig)}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if not sep or key not in names:
                raise ValueError(f"{path}:{lineno}: unknown config line {line!r}")
            if key in _BOOL_KEYS:
                setattr(config, key, value.lower() in ("1", "true", "yes"))
            elif key in _INT_KEYS:
                setattr(config, key, int(value))
            elif key in _LIST_KEYS:
                setattr(config, key, [v for v in value.split(",") if v])
            elif key in _INT_LIST_KEYS:
                setattr(config, key, [int(v) for v in value.split(",") if v] or None)
            else:
                setattr(config, key, value or None)
    return config


def merge_flags(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    for f in dataclasses.fields(RunConfig):
        if hasattr(args, f.name):
            value = getattr(args, f.name)
            if value is not None and value != []:
                setattr(config, f.name, value)
    return config


def _require_paths(*paths: Optional[str]) -> None:
    for path in paths:
        if path is not None and not os.path.exists(path):
            raise FileNotFoundError(path)


def _adjacency_mode(config: RunConfig) -> contrast.AdjacencyMode:
    if config.adjacency == "off":
        return contrast.ADJACENCY_OFF
    if config.adjacency == "heuristic":
        return contrast.ADJACENCY_HEURISTIC
    if config.adjacency == "manual":
        if not config.manual_adjacency:
            raise ValueError("manual adjacency requires --manual-adjacency FILE")
        _require_paths(config.manual_adjacency)
        return contrast.manual_adjacency(
            seeds.load_adjacency_annotations(config.manual_adjacency))
    raise ValueError(f"unknown adjacency mode {config.adjacency!r}")


def _load_thesaurus(config: RunConfig) -> thesaurus.Thesaurus:
    if not config.thesaurus:
        raise FileNotFoundError("no thesaurus path configured")
    _require_paths(config.thesaurus)
    return thesaurus.load_thesaurus(config.thesaurus)


def _gather_seeds(config: RunConfig, thes: thesaurus.Thesaurus) -> list[seeds.SeedPair]:
    gathered: list[seeds.SeedPair] = []
    if not config.no_affix:
        patterns = seeds.builtin_affix_patterns()
        if config.patterns:
            wanted = set(config.patterns)
            patterns = [p for p in patterns if p.id in wanted]
        gathered.extend(seeds.generate_affix_seeds(thes, patterns))
    for path in config.seed_files:
        _require_paths(path)
        gathered.extend(seeds.load_seed_list(path, thes))
    return gathered


def _build_index(config: RunConfig):
    thes = _load_thesaurus(config)
    mode = _adjacency_mode(config)
    index = contrast.build_contrast_index(thes, _gather_seeds(config, thes), mode)
    return thes, mode, index


@contextlib.contextmanager
def _open_out(config: RunConfig):
    if config.out:
        with open(config.out, "w", encoding="utf-8") as sink:
            yield sink
    else:
        yield sys.stdout


def _emit_eval(result: tasks.EvalResult, sink) -> None:
    sink.write(f"attempted\t{result.attempted}\n")
    sink.write(f"correct\t{result.correct}\n")
    sink.write(f"total\t{result.total}\n")
    precision = f"{result.precision:.6f}" if result.precision_defined else "0.000000 (undefined)"
    sink.write(f"precision\t{precision}\n")
    sink.write(f"recall\t{result.recall:.6f}\n")
    sink.write(f"f_score\t{result.f_score:.6f}\n")


def cmd_seeds(config: RunConfig) -> int:
    thes = _load_thesaurus(config)
    gathered = _gather_seeds(config, thes)
    rows = sorted({s.pair() for s in gathered})
    with _open_out(config) as sink:
        for a, b in rows:
            sink.write(f"{a}\t{b}\n")
    return 0


def cmd_index(config: RunConfig) -> int:
    _, _, index = _build_index(config)
    with _open_out(config) as sink:
        for catpair in sorted(index.contrasting_categories, key=sorted):
            a, b = sorted(catpair)
            prov = ",".join(sorted(index.contrasting_categories[catpair]))
            sink.write(f"CATS\t{a}\t{b}\t{prov}\n")
        for prime in sorted(index.prime_paragraphs, key=sorted):
            (c1, p1), (c2, p2) = sorted(prime)
            inducers = ",".join(f"{s.word1}:{s.word2}"
                                for s in sorted(index.prime_paragraphs[prime]))
            sink.write(f"PRIME\t{c1}:{p1}\t{c2}:{p2}\t{inducers}\n")
    return 0


def cmd_lexicon(config: RunConfig) -> int:
    if not config.out:
        raise ValueError("lexicon requires --out FILE")
    thes, _, index = _build_index(config)
    tiers = {contrast.Tier[t.strip()] for t in config.tiers.split(",") if t.strip()}
    count = contrast.build_lexicon(index, thes, tiers, config.out)
    print(f"pairs\t{count}")
    return 0


def cmd_classify(config: RunConfig, pair_file: str) -> int:
    _require_paths(pair_file)
    thes, mode, index = _build_index(config)
    items = tasks.load_pairs(pair_file)
    labels = tasks.classify_pairs([(i.word1, i.word2) for i in items], index, thes,
                                  mode, fallback=config.fallback, seed=config.seed)
    with _open_out(config) as sink:
        for item, label in zip(items, labels):
            sink.write(f"{item.word1}\t{item.word2}\t{label}\n")
    _emit_eval(tasks.evaluate_labels(items, labels), sys.stdout)
    return 0


def cmd_solve(config: RunConfig, question_file: str) -> int:
    _require_paths(question_file)
    thes, mode, index = _build_index(config)
    store = None
    if config.counts:
        _require_paths(config.counts)
        store = corpus.load_counts(config.counts)
    elif config.corpus:
        _require_paths(config.corpus)
        store = corpus.count_corpus(config.corpus, config.window)
    questions = tasks.load_questions(question_file)
    outputs = [tasks.solve_question(q, index, thes, store, mode) for q in questions]
    with _open_out(config) as sink:
        for q, out in zip(questions, outputs):
            answer = q.alternatives[out] if out is not None else "-"
            sink.write(f"{q.target}\t{answer}\n")
    _emit_eval(tasks.evaluate_questions(questions, outputs), sys.stdout)
    return 0


def cmd_stats(config: RunConfig, set_files: Sequence[str]) -> int:
    _require_paths(*set_files)
    if config.counts:
        _require_paths(config.counts)
        store = corpus.load_counts(config.counts)
    elif config.corpus:
        _require_paths(config.corpus)
        store = corpus.count_corpus(config.corpus, config.window)
    else:
        raise ValueError("stats requires --counts or --corpus")

    def pair_list(path: str) -> list[tuple[str, str]]:
        out = []
        with open(path, encoding="utf-8") as handle:
            for raw in handle:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                a, _, b = line.partition("\t")
                out.append((a.casefold(), b.strip().casefold()))
        return out

    samples: dict[str, list[float]] = {}
    with _open_out(config) as sink:
        for path in set_files:
            name = os.path.splitext(os.path.basename(path))[0]
            pairs = pair_list(path)
            result = corpus.association_stats(store, pairs)
            samples[name] = [v for v in (corpus.pmi(store, a, b) for a, b in pairs)
                             if v is not None]
            sink.write(f"SET\t{name}\tmean\t{result.mean_pmi:.6f}"
                       f"\tstddev\t{result.stddev_pmi:.6f}\tn\t{result.n_defined}\n")
        names = list(samples)
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                t, p = corpus.two_sample_t_test(samples[names[i]], samples[names[j]])
                sink.write(f"TTEST\t{names[i]}\t{names[j]}\tt\t{t:.6f}\tp\t{p:.6f}\n")
    return 0


def cmd_count(config: RunConfig) -> int:
    if not config.corpus:
        raise ValueError("count requires --corpus FILE")
    if not config.out:
        raise ValueError("count requires --out FILE")
    _require_paths(config.corpus)
    store = corpus.count_corpus(config.corpus, config.window)
    corpus.save_counts(store, config.out)
    print(f"tokens\t{store.total_tokens}")
    print(f"windows\t{store.total_windows}")
    return 0


def cmd_genq(config: RunConfig) -> int:
    if not config.opposites or not config.dt:
        raise ValueError("genq requires --opposites FILE and --dt FILE")
    _require_paths(config.opposites, config.dt)
    opposites = seeds.load_seed_list(config.opposites)
    dt = genquest.load_distributional_thesaurus(config.dt)
    questions = genquest.generate_contrast_questions(opposites, dt, config.seed)
    with _open_out(config) as sink:
        for q in questions:
            sink.write(f"{q.target}\t{'|'.join(q.alternatives)}\t{q.answer_index}\n")
    return 0


def cmd_genwc(config: RunConfig) -> int:
    if not config.pairs:
        raise ValueError("genwc requires --pairs FILE")
    _require_paths(config.pairs)
    thes = _load_thesaurus(config)
    target_pairs: list[tuple[str, str]] = []
    with open(config.pairs, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            a, _, b = line.partition("\t")
            target_pairs.append((a.casefold(), b.strip().casefold()))
    # pass 1: answers; pass 2: draw distractor options from the other answers
    answers = [genquest.word_choice_answer(tp, thes) for tp in target_pairs]
    questions = []
    for i, tp in enumerate(target_pairs):
        pool = answers[:i] + answers[i + 1:]
        questions.append(genquest.generate_word_choice(tp, thes, None, pool, config.seed))
    with _open_out(config) as sink:
        for q in questions:
            opts = ";".join(",".join(sorted(opt)) for opt in q.options)
            sink.write(f"{q.target_pair[0]}:{q.target_pair[1]}\t{opts}\t{q.answer_index}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="contrastlex",
                                     description="Thesaurus-based lexical contrast toolkit")
    parser.add_argument("--config", help="key=value config file")
    parser.add_argument("--print-config", action="store_true",
                        help="print the effective config and exit")
    sub = parser.add_subparsers(dest="command")

    def add(name: str, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--thesaurus")
        p.add_argument("--seed-file", dest="seed_files", action="append", default=[])
        p.add_argument("--patterns", type=lambda s: [int(v) for v in s.split(",")])
        p.add_argument("--no-affix", dest="no_affix", action="store_const", const=True)
        p.add_argument("--adjacency", choices=("off", "heuristic", "manual"))
        p.add_argument("--manual-adjacency", dest="manual_adjacency")
        p.add_argument("--corpus")
        p.add_argument("--counts")
        p.add_argument("--window", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--out")
        return p

    add("seeds", help="generate and merge seed opposite pairs")
    add("index", help="dump the contrast index (categories and prime paragraphs)")
    p = add("lexicon", help="emit the Class I/II contrast lexicon")
    p.add_argument("--tiers")
    p = add("classify", help="label pairs synonym/opposite via the decision list")
    p.add_argument("--fallback", choices=("refrain", "random", "predominant"))
    p.add_argument("pair_file")
    p = add("solve", help="solve most-contrasting-word questions")
    p.add_argument("question_file")
    p = add("stats", help="PMI statistics and t-tests over pair sets")
    p.add_argument("set_files", nargs="+")
    add("count", help="count a corpus into a counts file")
    p = add("genq", help="generate contrast questions from opposites + a distributional thesaurus")
    p.add_argument("--opposites")
    p.add_argument("--dt")
    p = add("genwc", help="generate word-choice validation questions")
    p.add_argument("--pairs")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config) if args.config else RunConfig()
        config = merge_flags(config, args)
    except FileNotFoundError as exc:
        print(f"error: missing file: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    if args.print_config:
        sys.stdout.write(config.dump())
        return 0
    if not args.command:
        parser.print_help()
        return USAGE_ERROR

    try:
        if args.command == "seeds":
            return cmd_seeds(config)
        if args.command == "index":
            return cmd_index(config)
        if args.command == "lexicon":
            return cmd_lexicon(config)
        if args.command == "classify":
            return cmd_classify(config, args.pair_file)
        if args.command == "solve":
            return cmd_solve(config, args.question_file)
        if args.command == "stats":
            return cmd_stats(config, args.set_files)
        if args.command == "count":
            return cmd_count(config)
        if args.command == "genq":
            return cmd_genq(config)
        if args.command == "genwc":
            return cmd_genwc(config)
        raise AssertionError(f"unhandled command {args.command}")
    except (FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except _COMPUTE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return COMPUTE_ERROR


if __name__ == "__main__":
    sys.exit(main())
