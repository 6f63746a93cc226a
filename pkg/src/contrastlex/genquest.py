"""Generation of contrast questions from opposite pairs plus a distributional
thesaurus, and of word-choice validation questions."""

from __future__ import annotations

import collections
import hashlib
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .seeds import SeedPair
from .tasks import ContrastQuestion
from .thesaurus import Thesaurus

N_DISTRACTORS = 4
PREFIX_LEN = 3

# fixed suffix-strip stemmer; longest suffix matched first
_SUFFIXES = ("ing", "est", "es", "ed", "er", "s")


class GenerationError(Exception):
    """Question could not be generated from the supplied resources."""


def stem(word: str) -> str:
    for suffix in _SUFFIXES:
        if word.endswith(suffix) and len(word) - len(suffix) >= 3:
            return word[:-len(suffix)]
    return word


def derive_rng(seed: int, *parts: str) -> random.Random:
    """Per-item RNG with a process-independent seed (no str hash randomization)."""
    digest = hashlib.sha256(("\x1f".join((str(seed),) + parts)).encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


@dataclass
class DistributionalThesaurus:
    entries: dict[str, list[tuple[str, float]]]

    def __post_init__(self) -> None:
        for word, neighbors in self.entries.items():
            scores = [s for _, s in neighbors]
            if any(a < b for a, b in zip(scores, scores[1:])):
                raise GenerationError(f"{word!r}: neighbor scores not non-increasing")
            if any(n == word for n, _ in neighbors):
                raise GenerationError(f"{word!r}: entry lists itself")

    def neighbors(self, word: str) -> list[tuple[str, float]]:
        return self.entries.get(word, [])


def load_distributional_thesaurus(path: str) -> DistributionalThesaurus:
    """Parse ``word<TAB>neighbor:score,neighbor:score,...`` lines."""
    entries: dict[str, list[tuple[str, float]]] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise GenerationError(f"{path}:{lineno}: malformed entry line")
            word = fields[0].casefold()
            neighbors = []
            for chunk in fields[1].split(","):
                name, _, score = chunk.rpartition(":")
                if not name:
                    raise GenerationError(f"{path}:{lineno}: malformed neighbor {chunk!r}")
                try:
                    neighbors.append((name.casefold(), float(score)))
                except ValueError:
                    raise GenerationError(
                        f"{path}:{lineno}: bad score in {chunk!r}") from None
            entries[word] = neighbors
    return DistributionalThesaurus(entries)


def _prefix_clash(word: str, *others: str) -> bool:
    return any(word[:PREFIX_LEN] == o[:PREFIX_LEN] for o in others)


def generate_contrast_questions(opposites: Sequence[SeedPair],
                                dt: DistributionalThesaurus,
                                seed: int = 0) -> list[ContrastQuestion]:
    """One five-alternative question per opposite pair, when possible.

    One member is chosen (seeded-random) as the target, the other is the
    answer; the four distributionally closest neighbors of the target are
    distractors, skipping any sharing the first three letters with the
    target or the answer. Pairs without an entry or without four valid
    distractors yield no question.
    """
    questions = []
    for pair in opposites:
        rng = derive_rng(seed, pair.word1, pair.word2)
        target, answer = (pair.word1, pair.word2)
        if rng.random() < 0.5:
            target, answer = answer, target
        distractors = []
        for neighbor, _ in dt.neighbors(target):
            if neighbor in (target, answer) or neighbor in distractors:
                continue
            if _prefix_clash(neighbor, target, answer):
                continue
            distractors.append(neighbor)
            if len(distractors) == N_DISTRACTORS:
                break
        if len(distractors) < N_DISTRACTORS:
            continue
        position = rng.randrange(N_DISTRACTORS + 1)
        alternatives = distractors[:position] + [answer] + distractors[position:]
        questions.append(ContrastQuestion(target, tuple(alternatives), position))
    return questions


@dataclass(frozen=True)
class WordChoiceQuestion:
    target_pair: tuple[str, str]
    options: tuple[frozenset[str], ...]
    answer_index: int


GlossFn = Callable[[str], collections.Counter]


def paragraph_gloss(thesaurus: Thesaurus) -> GlossFn:
    """Gloss of a word = bag of words of every paragraph containing it."""
    def gloss(word: str) -> collections.Counter:
        bag: collections.Counter = collections.Counter()
        for loc in thesaurus.locate(word):
            bag.update(thesaurus.paragraph_at(loc.category_number, loc.paragraph_index).words)
        return bag
    return gloss


def lesk_overlap(gloss1: collections.Counter, gloss2: collections.Counter) -> int:
    return sum((gloss1 & gloss2).values())


def word_choice_answer(target_pair: tuple[str, str], thesaurus: Thesaurus,
                       gloss: Optional[GlossFn] = None) -> frozenset[str]:
    """The four category mates most Lesk-similar to both target words.

    Candidates share a thesaurus category with either target; words sharing
    a stem with either target are discarded. Score ties break
    lexicographically.
    """
    t1, t2 = (w.casefold() for w in target_pair)
    if not thesaurus.locate(t1) or not thesaurus.locate(t2):
        raise GenerationError(f"target pair ({t1}, {t2}) not fully in thesaurus")
    if gloss is None:
        gloss = paragraph_gloss(thesaurus)
    candidates: set[str] = set()
    for target in (t1, t2):
        for loc in thesaurus.locate(target):
            candidates.update(thesaurus.category(loc.category_number).words())
    stems = {stem(t1), stem(t2)}
    candidates = {c for c in candidates if stem(c) not in stems}
    if len(candidates) < 4:
        raise GenerationError(f"only {len(candidates)} candidates for ({t1}, {t2})")
    g1, g2 = gloss(t1), gloss(t2)
    scored = sorted(candidates,
                    key=lambda c: (-(lesk_overlap(gloss(c), g1) + lesk_overlap(gloss(c), g2)), c))
    return frozenset(scored[:4])


def generate_word_choice(target_pair: tuple[str, str], thesaurus: Thesaurus,
                         gloss: Optional[GlossFn],
                         answer_pool: Sequence[frozenset[str]],
                         seed: int = 0) -> WordChoiceQuestion:
    """Build a Q1-style word-choice question.

    The three distractor options are drawn (seeded-random) from the pool of
    answer options of other questions; all four options are presented in
    seeded-random order.
    """
    answer = word_choice_answer(target_pair, thesaurus, gloss)
    pool = [opt for opt in answer_pool if opt != answer]
    if len(pool) < 3:
        raise GenerationError("answer pool too small for three distractor options")
    rng = derive_rng(seed, *target_pair)
    distractors = rng.sample(pool, 3)
    options = [answer] + distractors
    rng.shuffle(options)
    return WordChoiceQuestion(tuple(w.casefold() for w in target_pair),
                              tuple(options), options.index(answer))


def write_questions(questions: Iterable[ContrastQuestion], path: str) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as handle:
        for q in questions:
            handle.write(f"{q.target}\t{'|'.join(q.alternatives)}\t{q.answer_index}\n")
            count += 1
    return count


def write_word_choice(questions: Iterable[WordChoiceQuestion], path: str) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as handle:
        for q in questions:
            opts = ";".join(",".join(sorted(opt)) for opt in q.options)
            handle.write(f"{q.target_pair[0]}:{q.target_pair[1]}\t{opts}\t{q.answer_index}\n")
            count += 1
    return count
