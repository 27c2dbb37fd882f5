from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple, TypeAlias

# post-analysis surface form: lowercase, stemmed, no whitespace
Term: TypeAlias = str

DEFAULT_TOKEN_PATTERN = r"[^\W_]+"


class Document(NamedTuple):
    doc_id: str
    text: str


@dataclass(frozen=True)
class AnalyzerConfig:
    stopwords: frozenset[str]
    stem: bool = True
    lowercase: bool = True
    # unicode letter/digit runs; everything else separates tokens
    token_pattern: str = DEFAULT_TOKEN_PATTERN
    # identifies the stemmer rule table + exception lexicon the index was built with
    stemmer_version: str = field(default="", compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "stopwords": sorted(self.stopwords),
            "stem": self.stem,
            "lowercase": self.lowercase,
            "token_pattern": self.token_pattern,
            "stemmer_version": self.stemmer_version,
        }

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> AnalyzerConfig:
        return cls(
            stopwords=frozenset(raw["stopwords"]),
            stem=bool(raw.get("stem", True)),
            lowercase=bool(raw.get("lowercase", True)),
            token_pattern=str(raw.get("token_pattern", DEFAULT_TOKEN_PATTERN)),
            stemmer_version=str(raw.get("stemmer_version", "")),
        )
