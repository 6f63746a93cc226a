import pytest

from contrastlex.thesaurus import (Thesaurus, ThesaurusError, WordLocation,
                                   build_thesaurus, dump_thesaurus,
                                   load_thesaurus, locate)

TOY = """\
# toy thesaurus
C\t360\thiding
P\tverb\tcover
W\tcover
W\tmask
W\thide
C\t361\trevealing
P\tverb\texpose
W\texpose
W\tuncover
W\tbare
"""


def write(tmp_path, text, name="thes.tsv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_load_two_adjacent_categories(tmp_path):
    thes = load_thesaurus(write(tmp_path, TOY))
    assert thes.category_numbers() == [360, 361]
    assert thes.category(360).head_word == "hiding"
    assert "uncover" in thes.category(361).words()


def test_minimal_single_word(tmp_path):
    thes = load_thesaurus(write(tmp_path, "C\t1\tx\nP\tnoun\tx\nW\tx\n"))
    assert len(thes.categories) == 1
    assert thes.category(1).paragraphs[0].words == ["x"]


def test_case_fold_dedup(tmp_path):
    text = "C\t1\tcover\nP\tverb\tcover\nW\tCover\nW\tcover\nW\tMASK\n"
    thes = load_thesaurus(write(tmp_path, text))
    assert thes.category(1).paragraphs[0].words == ["cover", "mask"]


def test_head_prepended_when_absent(tmp_path):
    thes = load_thesaurus(write(tmp_path, "C\t1\th\nP\tnoun\thead\nW\tother\n"))
    para = thes.category(1).paragraphs[0]
    assert para.words[0] == para.head == "head"
    assert thes.category(1).label_only_head  # "h" is a pure label


def test_duplicate_category_number_rejected(tmp_path):
    text = "C\t1\ta\nP\tnoun\ta\nW\ta\nC\t1\tb\nP\tnoun\tb\nW\tb\n"
    with pytest.raises(ThesaurusError, match="duplicate"):
        load_thesaurus(write(tmp_path, text))


def test_empty_paragraph_rejected(tmp_path):
    with pytest.raises(ThesaurusError, match="empty paragraph"):
        load_thesaurus(write(tmp_path, "C\t1\ta\nP\tnoun\ta\nP\tverb\tb\nW\tb\n"))


def test_malformed_line_reports_lineno(tmp_path):
    with pytest.raises(ThesaurusError, match=":2:"):
        load_thesaurus(write(tmp_path, "C\t1\ta\nQ\tbogus\n"))


def test_locate_multiple_categories(slope_fixture):
    locs = locate(slope_fixture, "ascent")
    assert {l.category_number for l in locs} == {49, 694}
    descent = locate(slope_fixture, "descent")
    assert {l.category_number for l in descent} == {40, 50, 538, 694}


def test_locate_absent_word(slope_fixture):
    assert locate(slope_fixture, "zeppelin") == set()


def test_locate_three_synthetic_placements():
    thes = build_thesaurus([
        (1, "a", [("noun", "a", ["a", "shared"])]),
        (2, "b", [("noun", "b", ["b", "shared"])]),
        (3, "c", [("verb", "c", ["c", "shared"])]),
    ])
    assert len(locate(thes, "shared")) == 3


def test_locate_consistency_with_structure(caring_uncaring):
    thes = caring_uncaring
    for cat in thes.categories:
        for pidx, para in enumerate(cat.paragraphs):
            for word in para.words:
                assert WordLocation(cat.number, pidx, para.pos) in locate(thes, word)


def test_round_trip(tmp_path, caring_uncaring):
    path = str(tmp_path / "dump.tsv")
    dump_thesaurus(caring_uncaring, path)
    reloaded = load_thesaurus(path)
    assert reloaded.category_numbers() == caring_uncaring.category_numbers()
    for a, b in zip(reloaded.categories, caring_uncaring.categories):
        assert a.number == b.number and a.head_word == b.head_word
        assert [(p.head, p.pos, p.words) for p in a.paragraphs] == \
               [(p.head, p.pos, p.words) for p in b.paragraphs]


def test_out_of_order_categories_sorted_on_load(tmp_path):
    text = "C\t5\tb\nP\tnoun\tb\nW\tb\nC\t2\ta\nP\tnoun\ta\nW\ta\n"
    thes = load_thesaurus(write(tmp_path, text))
    assert thes.category_numbers() == [2, 5]


def test_constructor_rejects_unsorted():
    cats = build_thesaurus([(1, "a", [("noun", "a", ["a"])]),
                            (2, "b", [("noun", "b", ["b"])])]).categories
    with pytest.raises(ThesaurusError):
        Thesaurus(list(reversed(cats)))
