"""Text pipeline shared by indexing, query processing and thesaurus terms.

normalize (NFKC) -> lowercase -> tokenize -> stopword filter -> stem
"""

from __future__ import annotations

import re
import unicodedata
from collections.abc import Iterator
from functools import cache
from importlib.resources import files

from rtk.domain.analyzer_config import DEFAULT_TOKEN_PATTERN, AnalyzerConfig, Term

from .stemmer import RuleStemmer, default_stemmer, parse_word_list

STOPWORDS_RESOURCE = "stopwords_en.txt"


@cache
def default_stopwords() -> frozenset[str]:
    text = files("rtk.analysis").joinpath("data", STOPWORDS_RESOURCE).read_text(encoding="utf-8")
    return frozenset(parse_word_list(text))


def default_analyzer_config(
    stopwords: frozenset[str] | None = None,
    stem: bool = True,
    lowercase: bool = True,
    token_pattern: str = DEFAULT_TOKEN_PATTERN,
) -> AnalyzerConfig:
    return AnalyzerConfig(
        stopwords=default_stopwords() if stopwords is None else stopwords,
        stem=stem,
        lowercase=lowercase,
        token_pattern=token_pattern,
        stemmer_version=default_stemmer().version if stem else "",
    )


class Analyzer:
    """Stateless after construction; safe to share between threads."""

    def __init__(self, cfg: AnalyzerConfig, stemmer: RuleStemmer | None = None) -> None:
        self.cfg = cfg
        self._token_re = re.compile(cfg.token_pattern)
        self._span_re = re.compile(cfg.token_pattern, re.IGNORECASE if cfg.lowercase else 0)
        self._stemmer = stemmer or default_stemmer()

    def tokenize(self, text: str) -> list[str]:
        text = unicodedata.normalize("NFKC", text)
        if self.cfg.lowercase:
            text = text.lower()
        return self._token_re.findall(text)

    def term(self, token: str) -> Term:
        """Stem one token; a stem that collides with a stopword keeps the surface form."""
        if not self.cfg.stem:
            return token
        stemmed = self._stemmer.stem(token)
        return token if stemmed in self.cfg.stopwords else stemmed

    def analyze(self, text: str, keep_stopwords: bool = False) -> list[Term]:
        stopwords = self.cfg.stopwords
        return [
            self.term(token) for token in self.tokenize(text) if keep_stopwords or token not in stopwords
        ]

    def term_spans(self, text: str) -> Iterator[tuple[int, int, Term]]:
        """(start, end, term) for each non-stopword token, offsets into the raw text."""
        for match in self._span_re.finditer(text):
            token = unicodedata.normalize("NFKC", match.group(0))
            if self.cfg.lowercase:
                token = token.lower()
            if token not in self.cfg.stopwords:
                yield match.start(), match.end(), self.term(token)


@cache
def analyzer_for(cfg: AnalyzerConfig) -> Analyzer:
    return Analyzer(cfg)


def analyze(text: str, cfg: AnalyzerConfig, keep_stopwords: bool = False) -> list[Term]:
    return analyzer_for(cfg).analyze(text, keep_stopwords)
