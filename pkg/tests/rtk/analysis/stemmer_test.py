from __future__ import annotations

import pytest

from rtk.analysis.stemmer import RULES_VERSION, RuleStemmer, parse_exceptions, parse_word_list, stem

# --- suffix rules ---


@pytest.mark.parametrize(
    ("word", "expected"),
    [
        ("cars", "car"),
        ("injuries", "injury"),
        ("injured", "injure"),
        ("making", "make"),
        ("walked", "walk"),
        ("running", "run"),
        ("stopped", "stop"),
        ("boxes", "box"),
        ("classes", "class"),
        ("glass", "glass"),
    ],
)
def test_inflections_reduce_to_words(word: str, expected: str) -> None:
    assert stem(word) == expected


@pytest.mark.parametrize("word", ["car", "bus", "2010", "ford", "agreed"])
def test_short_numeric_and_protected_words_are_unchanged(word: str) -> None:
    assert stem(word) == word


# --- exception lexicon ---


@pytest.mark.parametrize(
    ("word", "expected"),
    [("children", "child"), ("focused", "focus"), ("news", "news"), ("series", "series"), ("using", "use")],
)
def test_exceptions_take_precedence(word: str, expected: str) -> None:
    assert stem(word) == expected


@pytest.mark.parametrize(
    "word", ["cars", "injuries", "running", "classes", "children", "focusing", "boxes", "walked", "morning"]
)
def test_stem_is_idempotent(word: str) -> None:
    once = stem(word)

    assert stem(once) == once


def test_custom_exceptions_replace_packaged_lexicon() -> None:
    stemmer = RuleStemmer({"children": "kid"})

    assert stemmer.stem("children") == "kid"
    assert stemmer.stem("news") == "new"
    assert stemmer.version == RULES_VERSION


def test_packaged_version_carries_lexicon_checksum() -> None:
    version = RuleStemmer().version

    assert version.startswith(RULES_VERSION + "+")
    assert len(version) == len(RULES_VERSION) + 9


# --- parsing ---


def test_parse_word_list_strips_comments_and_blanks() -> None:
    assert parse_word_list("# header\nthe\n\n  and  # inline\n") == ["the", "and"]


def test_parse_exceptions_maps_stems_to_themselves() -> None:
    table = parse_exceptions("# c\nmice mouse\n")

    assert table == {"mice": "mouse", "mouse": "mouse"}


def test_parse_exceptions_rejects_malformed_line() -> None:
    with pytest.raises(ValueError, match="line 2"):
        parse_exceptions("mice mouse\nthree word line\n")


def test_parse_exceptions_rejects_conflict() -> None:
    with pytest.raises(ValueError, match="already maps to"):
        parse_exceptions("geese goose\ngeese gander\n")
