from __future__ import annotations

import numpy as np
import pytest

from rtk.analysis.analyzer import Analyzer, analyze, default_analyzer_config, default_stopwords


def test_default_stopwords_are_packaged() -> None:
    stopwords = default_stopwords()

    assert len(stopwords) == 33
    assert {"the", "and", "with"} <= stopwords
    assert "car" not in stopwords


# --- pipeline ---


def test_analyze_lowercases_filters_and_stems() -> None:
    assert analyze("The cars are RUNNING!", default_analyzer_config()) == ["car", "run"]


def test_analyze_can_keep_stopwords() -> None:
    assert analyze("The cars are running", default_analyzer_config(), keep_stopwords=True) == [
        "the",
        "car",
        "are",
        "run",
    ]


def test_unstemmed_config_keeps_surface_forms() -> None:
    cfg = default_analyzer_config(stem=False)

    assert analyze("Injured cars", cfg) == ["injured", "cars"]
    assert cfg.stemmer_version == ""


def test_case_is_kept_when_lowercasing_is_off() -> None:
    analyzer = Analyzer(default_analyzer_config(lowercase=False, stem=False))

    assert analyzer.tokenize("Ford and Honda") == ["Ford", "and", "Honda"]


def test_tokenizer_splits_on_punctuation_and_underscores() -> None:
    analyzer = Analyzer(default_analyzer_config())

    assert analyzer.tokenize("snake_case, e-mail; 2010!") == ["snake", "case", "e", "mail", "2010"]


def test_text_is_nfkc_normalized() -> None:
    analyzer = Analyzer(default_analyzer_config())

    assert analyzer.tokenize("ﬁnd Ｃａｒ") == ["find", "car"]


def test_stem_colliding_with_stopword_keeps_surface() -> None:
    analyzer = Analyzer(default_analyzer_config())

    assert analyzer.term("thes") == "thes"
    assert analyzer.term("cars") == "car"


def test_custom_token_pattern_and_stopwords() -> None:
    cfg = default_analyzer_config(stopwords=frozenset({"car"}), token_pattern=r"\S+")

    assert analyze("car-wash the car", cfg) == ["car-wash", "the"]


def test_stemmed_config_records_stemmer_version() -> None:
    assert default_analyzer_config().stemmer_version.startswith("inflect-1")


def test_term_spans_point_into_the_raw_text() -> None:
    analyzer = Analyzer(default_analyzer_config())

    assert list(analyzer.term_spans("The Cars, running!")) == [(4, 8, "car"), (10, 17, "run")]


# --- properties ---

_SUFFIXES = ("", "s", "es", "ed", "ing", "ies", "ly", "er", "ness")


def _random_text(rng: np.random.Generator, n_words: int) -> str:
    stopwords = sorted(default_stopwords())
    words = []
    for _ in range(n_words):
        if rng.random() < 0.2:
            words.append(stopwords[int(rng.integers(len(stopwords)))])
            continue
        stem = "".join(rng.choice(list("abcdeilnorstuy"), size=int(rng.integers(1, 8))))
        words.append(stem + _SUFFIXES[int(rng.integers(len(_SUFFIXES)))])
    return " ".join(words)


def _is_subsequence(short: list[str], long: list[str]) -> bool:
    remaining = iter(long)
    return all(term in remaining for term in short)


@pytest.mark.parametrize("stem", [True, False])
def test_analysis_is_a_fixed_point(stem: bool) -> None:
    rng = np.random.default_rng(21)
    cfg = default_analyzer_config(stem=stem)
    for _ in range(200):
        terms = analyze(_random_text(rng, 20), cfg)

        assert analyze(" ".join(terms), cfg) == terms


def test_every_term_reanalyzes_to_itself() -> None:
    rng = np.random.default_rng(23)
    cfg = default_analyzer_config()
    for _ in range(100):
        for term in analyze(_random_text(rng, 20), cfg, keep_stopwords=True):
            assert analyze(term, cfg, keep_stopwords=True) == [term]


def test_stopword_free_output_is_a_subsequence_of_full_output() -> None:
    rng = np.random.default_rng(22)
    cfg = default_analyzer_config()
    for _ in range(200):
        text = _random_text(rng, 20)

        assert _is_subsequence(analyze(text, cfg), analyze(text, cfg, keep_stopwords=True))


def test_term_spans_agree_with_analyze() -> None:
    rng = np.random.default_rng(24)
    analyzer = Analyzer(default_analyzer_config())
    for _ in range(200):
        text = _random_text(rng, 20).title()

        assert [term for _, _, term in analyzer.term_spans(text)] == analyzer.analyze(text)
