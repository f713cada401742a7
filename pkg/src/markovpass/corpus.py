"""Corpus loading, normalization, and circular window extraction."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterator

from .errors import CorpusError, CorpusTooShortError


def normalize_text(text: str) -> str:
    """Collapse every whitespace run to a single space and trim the ends.

    Passwords must never contain newlines or tabs, but single spaces are
    kept: they are ordinary characters of the source text. Everything
    else, including case and punctuation, passes through verbatim.
    """
    return " ".join(text.split())


@dataclass(frozen=True)
class Corpus:
    """A normalized character sequence, treated as circular when windowed."""

    chars: str

    @classmethod
    def from_text(cls, text: str) -> "Corpus":
        normalized = normalize_text(text)
        if not normalized:
            raise CorpusError("corpus is empty after normalization")
        return cls(normalized)

    @property
    def length(self) -> int:
        return len(self.chars)

    @cached_property
    def fingerprint(self) -> str:
        """SHA-256 hex digest of the normalized characters."""
        return hashlib.sha256(self.chars.encode("utf-8")).hexdigest()


def load_corpus(path: str | Path) -> Corpus:
    """Read a UTF-8 text file and normalize it into a Corpus.

    The file is used as-is: boilerplate such as e-book license headers is
    the caller's job to strip beforehand.
    """
    try:
        # utf-8-sig so a leading BOM cannot leak into the character stream
        text = Path(path).read_text(encoding="utf-8-sig")
    except FileNotFoundError as exc:
        raise CorpusError(f"corpus file not found: {path}") from exc
    except IsADirectoryError as exc:
        raise CorpusError(f"corpus path is a directory: {path}") from exc
    except UnicodeDecodeError as exc:
        raise CorpusError(f"corpus file is not valid UTF-8: {path}") from exc
    return Corpus.from_text(text)


def circular_windows(corpus: Corpus, k: int) -> Iterator[tuple[str, str]]:
    """Yield (state, next) for every position, wrapping past the end.

    Produces exactly ``corpus.length`` pairs: the final k positions
    transition back into the start of the text, so every state that
    occurs also has at least one outgoing transition.
    """
    if k < 1:
        raise ValueError(f"order must be >= 1, got {k}")
    n = corpus.length
    if n < k + 1:
        raise CorpusTooShortError(
            f"corpus of length {n} cannot support order {k} (needs at least {k + 1} characters)"
        )
    doubled = corpus.chars + corpus.chars[:k]
    for i in range(n):
        yield doubled[i : i + k], doubled[i + k]
