import pytest

from contrastlex.thesaurus import Thesaurus, build_thesaurus


@pytest.fixture
def hiding_revealing() -> Thesaurus:
    """Two adjacent categories about hiding and revealing, linked by the
    affix seed cover/uncover."""
    return build_thesaurus([
        (360, "hiding", [
            ("verb", "cover", ["cover", "mask", "hide", "conceal", "camouflage"]),
            ("noun", "secret", ["secret", "mystery"]),
        ]),
        (361, "revealing", [
            ("verb", "expose", ["expose", "uncover", "bare", "reveal", "unmask"]),
            ("noun", "disclosure", ["disclosure", "revelation"]),
        ]),
    ])


@pytest.fixture
def caring_uncaring() -> Thesaurus:
    """Two non-adjacent categories linked by the affix seed caring/uncaring;
    the sympathetic and indifferent paragraphs are the prime pair."""
    return build_thesaurus([
        (230, "indifference", [
            ("noun", "apathy", ["apathy", "lethargy"]),
            ("noun", "disclosure", ["disclosure", "revelation"]),
            ("adjective", "indifferent", ["indifferent", "cold", "aloof", "uncaring"]),
        ]),
        (423, "kindness", [
            ("noun", "kindness", ["kindness", "goodwill"]),
            ("adjective", "sympathetic", ["sympathetic", "caring", "compassionate", "warm"]),
            ("noun", "white lie", ["white lie", "fib"]),
        ]),
    ])


@pytest.fixture
def slope_fixture() -> Thesaurus:
    """ascent/descent layout: shared category 694, adjacent categories 49/50,
    plus broadside/salvo sharing a single category."""
    return build_thesaurus([
        (40, "aristocracy", [("noun", "aristocracy", ["aristocracy", "descent", "nobility"])]),
        (49, "climbing", [("noun", "climbing", ["climbing", "ascent", "upwardness"])]),
        (50, "dropping", [("noun", "dropping", ["dropping", "descent", "downwardness"])]),
        (189, "attack", [("noun", "attack", ["attack", "broadside", "salvo"])]),
        (538, "parentage", [("noun", "parentage", ["parentage", "descent", "lineage"])]),
        (694, "slope", [("noun", "slope", ["slope", "ascent", "descent", "incline"])]),
    ])


# 15 Table-style example pairs, the noisy sect/insect pair, and 28 fillers:
# exactly 60 words.
AFFIX_PAIR_WORDS = [
    "clockwise", "anticlockwise",
    "interest", "disinterest",
    "possible", "impossible",
    "consistent", "inconsistent",
    "adroit", "maladroit",
    "fortune", "misfortune",
    "aligned", "nonaligned",
    "biased", "unbiased",
    "legal", "illegal",
    "regular", "irregular",
    "implicit", "explicit",
    "introvert", "extrovert",
    "uphill", "downhill",
    "overdone", "underdone",
    "harmless", "harmful",
    "sect", "insect",
]

AFFIX_FILLER_WORDS = [
    "table", "mountain", "river", "music", "happy", "green", "quickly",
    "window", "bread", "stone", "cloud", "yellow", "garden", "pencil",
    "carpet", "butter", "silver", "candle", "bottle", "ladder", "market",
    "puzzle", "rocket", "saddle", "tunnel", "violet", "wallet", "anchor",
]

EXPECTED_AFFIX_PAIRS = {
    ("anticlockwise", "clockwise"): 1,
    ("disinterest", "interest"): 2,
    ("impossible", "possible"): 3,
    ("consistent", "inconsistent"): 4,
    ("insect", "sect"): 4,
    ("adroit", "maladroit"): 5,
    ("fortune", "misfortune"): 6,
    ("aligned", "nonaligned"): 7,
    ("biased", "unbiased"): 8,
    ("illegal", "legal"): 9,
    ("irregular", "regular"): 10,
    ("explicit", "implicit"): 11,
    ("extrovert", "introvert"): 12,
    ("downhill", "uphill"): 13,
    ("overdone", "underdone"): 14,
    ("harmful", "harmless"): 15,
}


@pytest.fixture
def affix_vocabulary() -> Thesaurus:
    words = AFFIX_PAIR_WORDS + AFFIX_FILLER_WORDS
    assert len(words) == 60
    # spread the vocabulary over a few categories; placement is irrelevant
    # to affix generation
    chunks = [words[i:i + 12] for i in range(0, len(words), 12)]
    return build_thesaurus([
        (100 + 2 * i, f"group{i}", [("noun", chunk[0], chunk)])
        for i, chunk in enumerate(chunks)
    ])
