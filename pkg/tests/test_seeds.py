import pytest

from contrastlex.seeds import (SeedError, SeedPair, builtin_affix_patterns,
                               generate_affix_seeds,
                               load_adjacency_annotations, load_seed_list)
from contrastlex.thesaurus import build_thesaurus

from conftest import EXPECTED_AFFIX_PAIRS


def one_category(words):
    return build_thesaurus([(1, words[0], [("noun", words[0], list(words))])])


def pattern(n):
    return builtin_affix_patterns()[n - 1]


def test_builtin_patterns_shape():
    patterns = builtin_affix_patterns()
    assert [p.id for p in patterns] == list(range(1, 16))


@pytest.mark.parametrize("pid,word,mate", [
    (8, "biased", "unbiased"),
    (13, "uphill", "downhill"),
    (15, "harmless", "harmful"),
    (1, "clockwise", "anticlockwise"),
    (9, "legal", "illegal"),
    (10, "regular", "irregular"),
    (11, "implicit", "explicit"),
])
def test_pattern_mates(pid, word, mate):
    pat = pattern(pid)
    stem = pat.stem1(word)
    assert stem is not None
    assert pat.word2(stem) == mate


def test_generate_includes_dis_pair():
    thes = one_category(["interest", "disinterest", "chair"])
    out = generate_affix_seeds(thes)
    assert SeedPair("disinterest", "interest", "affix:2") in out


def test_generate_keeps_noisy_pair():
    thes = one_category(["sect", "insect"])
    out = generate_affix_seeds(thes)
    assert SeedPair("insect", "sect", "affix:4") in out


def test_generate_empty_when_no_mates():
    thes = one_category(["table", "stone", "river"])
    assert generate_affix_seeds(thes) == []


def test_generate_matches_hand_enumeration(affix_vocabulary):
    out = generate_affix_seeds(affix_vocabulary)
    got = {(s.word1, s.word2): int(s.source.split(":")[1]) for s in out}
    assert got == EXPECTED_AFFIX_PAIRS


def test_generate_direction_independent():
    # only the affixed member present as paragraph head: matched backwards
    thes = one_category(["unbiased", "biased"])
    out = generate_affix_seeds(thes)
    assert [s.pair() for s in out] == [("biased", "unbiased")]


def test_affix_soundness(affix_vocabulary):
    patterns = {p.id: p for p in builtin_affix_patterns()}
    for seed in generate_affix_seeds(affix_vocabulary):
        pat = patterns[int(seed.source.split(":")[1])]
        ok = False
        for base, affixed in ((seed.word1, seed.word2), (seed.word2, seed.word1)):
            stem = pat.stem1(base)
            if stem is not None and pat.word2(stem) == affixed:
                ok = True
        assert ok, seed


def test_minimum_length():
    # base member "is" is shorter than three characters
    thes = one_category(["is", "unis"])
    assert generate_affix_seeds(thes) == []


def test_deterministic_output(affix_vocabulary):
    a = generate_affix_seeds(affix_vocabulary)
    b = generate_affix_seeds(affix_vocabulary)
    assert a == b == sorted(a)


def test_load_seed_list(tmp_path):
    path = tmp_path / "seeds.tsv"
    path.write_text("dead\talive\n", encoding="utf-8")
    out = load_seed_list(str(path))
    assert out == [SeedPair("alive", "dead", "external_list")]


def test_load_seed_list_thesaurus_filter(tmp_path):
    path = tmp_path / "seeds.tsv"
    path.write_text("hot\tcold\n", encoding="utf-8")
    thes = one_category(["hot", "warm"])  # no "cold"
    assert load_seed_list(str(path), thes) == []


def test_load_seed_list_dedups_reversed(tmp_path):
    path = tmp_path / "seeds.tsv"
    path.write_text("hot\tcold\nup\tdown\ncold\thot\nwet\tdry\nnear\tfar\n",
                    encoding="utf-8")
    assert len(load_seed_list(str(path))) == 4


def test_load_seed_list_rejects_self_pair(tmp_path):
    path = tmp_path / "seeds.tsv"
    path.write_text("hot\thot\n", encoding="utf-8")
    with pytest.raises(SeedError, match="self-pair"):
        load_seed_list(str(path))


def test_load_seed_list_rejects_malformed(tmp_path):
    path = tmp_path / "seeds.tsv"
    path.write_text("justoneword\n", encoding="utf-8")
    with pytest.raises(SeedError, match="malformed"):
        load_seed_list(str(path))


def test_adjacency_annotations_non_consecutive(tmp_path):
    path = tmp_path / "adj.tsv"
    path.write_text("40\t42\n", encoding="utf-8")
    assert load_adjacency_annotations(str(path)) == {frozenset((40, 42))}


def test_adjacency_annotations_empty(tmp_path):
    path = tmp_path / "adj.tsv"
    path.write_text("", encoding="utf-8")
    assert load_adjacency_annotations(str(path)) == set()


def test_adjacency_annotations_adjacent_pair(tmp_path):
    path = tmp_path / "adj.tsv"
    path.write_text("360\t361\n", encoding="utf-8")
    assert load_adjacency_annotations(str(path)) == {frozenset((360, 361))}


def test_vocabulary_closure(affix_vocabulary):
    vocab = affix_vocabulary.words()
    for seed in generate_affix_seeds(affix_vocabulary):
        assert seed.word1 in vocab and seed.word2 in vocab
