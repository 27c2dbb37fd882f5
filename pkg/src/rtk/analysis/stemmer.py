"""Inflectional rule-table stemmer in the Krovetz style.

Only plural, past-tense and progressive suffixes are handled, and the output
aims to be a real word ("injured" -> "injure", not "injur"). Rules apply
repeatedly until nothing changes, so `stem` is idempotent. Entries of the
exception lexicon are terminal.
"""

from __future__ import annotations

import re
import zlib
from collections.abc import Mapping
from functools import cache
from importlib.resources import files

from .analysis_resources import str_resources

RULES_VERSION = "inflect-1"
EXCEPTIONS_RESOURCE = "stem_exceptions.txt"

_VOWELS = frozenset("aeiou")
_MIN_STEM_INPUT = 4

# endings after which a dropped final "e" is restored (mak -> make, injur -> injure)
_RESTORE_E = re.compile(
    r"(?:(?:^|[^aeiou]|qu)[aiou][bdkmnrz]"
    r"|(?:au|ou|ea|ai|oi)s|[nrlp]s|[^aeiou][aiou]s"
    r"|[^aeiou]at|[bcdfgkptz]l|c|ang|[^n]g|v|[^z]z|u)$"
)


def parse_word_list(text: str) -> list[str]:
    """Non-empty lines with '#' comments and surrounding whitespace removed."""
    words: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            words.append(line)
    return words


def parse_exceptions(text: str) -> dict[str, str]:
    """Parse '<surface> <stem>' lines into a lexicon where every stem also maps to itself."""
    table: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(str_resources.err_exception_entry.format(line=number, text=line))
        surface, target = parts
        for key, value in ((surface, target), (target, target)):
            if table.get(key, value) != value:
                raise ValueError(
                    str_resources.err_exception_conflict.format(line=number, surface=key, stem=table[key])
                )
            table[key] = value
    return table


@cache
def _packaged_exceptions() -> tuple[str, dict[str, str]]:
    text = files("rtk.analysis").joinpath("data", EXCEPTIONS_RESOURCE).read_text(encoding="utf-8")
    version = f"{RULES_VERSION}+{zlib.crc32(text.encode('utf-8')):08x}"
    return version, parse_exceptions(text)


def _has_vowel(text: str) -> bool:
    return any(c in _VOWELS for c in text)


def _restore(base: str) -> str:
    last = base[-1]
    if len(base) >= 4 and last == base[-2] and last not in _VOWELS and last not in "lsfz":
        return base[:-1]
    if _RESTORE_E.search(base):
        return base + "e"
    return base


def _strip_plural(word: str) -> str:
    if word.endswith("ies"):
        return word[:-3] + "y" if len(word) > 4 else word[:-1]
    if word.endswith("sses") or word.endswith(("xes", "ches", "shes", "zzes")):
        return word[:-2]
    if word.endswith(("ss", "us", "is")):
        return word
    if word.endswith("s"):
        return word[:-1]
    return word


def _strip_past(word: str) -> str:
    if len(word) < 5 or word.endswith("eed"):
        return word
    if word.endswith("ied"):
        return word[:-3] + "y"
    base = word[:-2]
    if not _has_vowel(base):
        return word
    return _restore(base)


def _strip_progressive(word: str) -> str:
    if len(word) < 6:
        return word
    base = word[:-3]
    if not _has_vowel(base):
        return word
    return _restore(base)


def _step(word: str) -> str:
    if len(word) < _MIN_STEM_INPUT or not word.isalpha():
        return word
    if word.endswith("s"):
        return _strip_plural(word)
    if word.endswith("ed"):
        return _strip_past(word)
    if word.endswith("ing"):
        return _strip_progressive(word)
    return word


class RuleStemmer:
    def __init__(self, exceptions: Mapping[str, str] | None = None, version: str | None = None) -> None:
        if exceptions is None:
            packaged_version, packaged = _packaged_exceptions()
            self._exceptions: Mapping[str, str] = packaged
            self.version = version or packaged_version
        else:
            self._exceptions = dict(exceptions)
            self.version = version or RULES_VERSION

    def stem(self, word: str) -> str:
        if word in self._exceptions:
            return self._exceptions[word]
        current = word
        while True:
            reduced = _step(current)
            if reduced == current:
                return current
            current = reduced
            if current in self._exceptions:
                return self._exceptions[current]


@cache
def default_stemmer() -> RuleStemmer:
    return RuleStemmer()


def stem(word: str) -> str:
    """Stem a lowercase word with the packaged rule table and exception lexicon."""
    return default_stemmer().stem(word)
