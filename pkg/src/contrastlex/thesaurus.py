"""Roget-style thesaurus model: categories, POS-tagged paragraphs, word lookup.

File format (UTF-8, line oriented, tab separated):

    C <category-number> <head-word>     starts a category
    P <pos> <head-word>                 starts a paragraph
    W <word>                            adds a word to the current paragraph

Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

POS_TAGS = ("noun", "verb", "adjective", "adverb")


class ThesaurusError(Exception):
    """Malformed or inconsistent thesaurus input."""


@dataclass(frozen=True)
class WordLocation:
    category_number: int
    paragraph_index: int
    pos: str


@dataclass
class Paragraph:
    head: str
    pos: str
    words: list[str]


@dataclass
class Category:
    number: int
    head_word: str
    paragraphs: list[Paragraph]
    # True when the head word is a synthetic label not listed among members.
    label_only_head: bool = False

    def words(self) -> set[str]:
        out: set[str] = set()
        for para in self.paragraphs:
            out.update(para.words)
        return out


@dataclass
class Thesaurus:
    categories: list[Category] = field(default_factory=list)

    def __post_init__(self) -> None:
        numbers = [c.number for c in self.categories]
        if len(set(numbers)) != len(numbers):
            raise ThesaurusError("duplicate category numbers")
        if numbers != sorted(numbers):
            raise ThesaurusError("categories not in ascending number order")
        self._by_number = {c.number: c for c in self.categories}
        self._index: dict[str, set[WordLocation]] = {}
        for cat in self.categories:
            for pidx, para in enumerate(cat.paragraphs):
                for word in para.words:
                    loc = WordLocation(cat.number, pidx, para.pos)
                    self._index.setdefault(word, set()).add(loc)

    def category(self, number: int) -> Category:
        return self._by_number[number]

    def has_category(self, number: int) -> bool:
        return number in self._by_number

    def category_numbers(self) -> list[int]:
        return [c.number for c in self.categories]

    def words(self) -> set[str]:
        return set(self._index)

    def unigrams(self) -> set[str]:
        return {w for w in self._index if " " not in w}

    def locate(self, word: str) -> set[WordLocation]:
        return set(self._index.get(word.casefold(), ()))

    def paragraph_at(self, category_number: int, paragraph_index: int) -> Paragraph:
        return self._by_number[category_number].paragraphs[paragraph_index]


def locate(thesaurus: Thesaurus, word: str) -> set[WordLocation]:
    """All locations of ``word``; empty set if absent."""
    return thesaurus.locate(word)


def _fold(word: str) -> str:
    return " ".join(word.casefold().split())


def load_thesaurus(path: str) -> Thesaurus:
    """Parse and validate a thesaurus file.

    All words are case-folded; duplicates within a paragraph are dropped
    (first occurrence kept). A paragraph head absent from its word list is
    prepended so every paragraph contains its head.
    """
    categories: list[Category] = []
    seen_numbers: set[int] = set()
    current_cat: Category | None = None
    current_para: Paragraph | None = None
    pending_words: list[str] | None = None

    def err(lineno: int, msg: str) -> ThesaurusError:
        return ThesaurusError(f"{path}:{lineno}: {msg}")

    def close_paragraph(lineno: int) -> None:
        nonlocal current_para, pending_words
        if current_para is None:
            return
        if not pending_words:
            raise err(lineno, f"empty paragraph {current_para.head!r}")
        seen: set[str] = set()
        words = []
        for w in pending_words:
            if w not in seen:
                seen.add(w)
                words.append(w)
        if current_para.head not in seen:
            words.insert(0, current_para.head)
        current_para.words = words
        current_para = None
        pending_words = None

    def close_category(lineno: int) -> None:
        nonlocal current_cat
        close_paragraph(lineno)
        if current_cat is None:
            return
        if not current_cat.paragraphs:
            raise err(lineno, f"category {current_cat.number} has no paragraphs")
        current_cat.label_only_head = current_cat.head_word not in current_cat.words()
        categories.append(current_cat)
        current_cat = None

    with open(path, encoding="utf-8") as handle:
        lineno = 0
        for lineno, raw in enumerate(handle, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            tag = fields[0]
            if tag == "C":
                if len(fields) != 3:
                    raise err(lineno, f"malformed category line: {line!r}")
                close_category(lineno)
                try:
                    number = int(fields[1])
                except ValueError:
                    raise err(lineno, f"bad category number {fields[1]!r}") from None
                if number <= 0:
                    raise err(lineno, f"category number must be positive: {number}")
                if number in seen_numbers:
                    raise err(lineno, f"duplicate category number {number}")
                seen_numbers.add(number)
                current_cat = Category(number, _fold(fields[2]), [])
            elif tag == "P":
                if len(fields) != 3:
                    raise err(lineno, f"malformed paragraph line: {line!r}")
                if current_cat is None:
                    raise err(lineno, "paragraph outside any category")
                pos = fields[1]
                if pos not in POS_TAGS:
                    raise err(lineno, f"unknown part of speech {pos!r}")
                close_paragraph(lineno)
                current_para = Paragraph(_fold(fields[2]), pos, [])
                pending_words = []
                current_cat.paragraphs.append(current_para)
            elif tag == "W":
                if len(fields) != 2:
                    raise err(lineno, f"malformed word line: {line!r}")
                if current_para is None or pending_words is None:
                    raise err(lineno, "word outside any paragraph")
                word = _fold(fields[1])
                if not word:
                    raise err(lineno, "empty word")
                pending_words.append(word)
            else:
                raise err(lineno, f"unknown record tag {tag!r}")
        close_category(lineno + 1)

    categories.sort(key=lambda c: c.number)
    return Thesaurus(categories)


def dump_thesaurus(thesaurus: Thesaurus, path: str) -> None:
    """Serialize back to the line format accepted by :func:`load_thesaurus`."""
    with open(path, "w", encoding="utf-8") as handle:
        for cat in thesaurus.categories:
            handle.write(f"C\t{cat.number}\t{cat.head_word}\n")
            for para in cat.paragraphs:
                handle.write(f"P\t{para.pos}\t{para.head}\n")
                for word in para.words:
                    handle.write(f"W\t{word}\n")


def build_thesaurus(spec: Iterable[tuple[int, str, list[tuple[str, str, list[str]]]]]) -> Thesaurus:
    """Construct a thesaurus in memory; handy for tests and fixtures.

    ``spec`` is an iterable of ``(number, head_word, paragraphs)`` where each
    paragraph is ``(pos, head, words)``.
    """
    categories = []
    for number, head_word, paragraphs in spec:
        paras = []
        for pos, head, words in paragraphs:
            folded = []
            seen: set[str] = set()
            for w in words:
                fw = _fold(w)
                if fw not in seen:
                    seen.add(fw)
                    folded.append(fw)
            fhead = _fold(head)
            if fhead not in seen:
                folded.insert(0, fhead)
            paras.append(Paragraph(fhead, pos, folded))
        cat = Category(number, _fold(head_word), paras)
        cat.label_only_head = cat.head_word not in cat.words()
        categories.append(cat)
    categories.sort(key=lambda c: c.number)
    return Thesaurus(categories)
