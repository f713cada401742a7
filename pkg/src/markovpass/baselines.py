"""Fixed-choice password schemes and entropy arithmetic.

These generators make a fixed number of uniform draws from fixed sets, so
every possible output is equally likely and the reported entropy is simply
choices * log2(set size). They exist for side-by-side comparison with the
model-driven scheme and for quick arithmetic such as "how many random
characters clear a 56-bit target".
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import ConfigError

# 26 lowercase + 26 uppercase + 10 digits + 15 password-safe marks = 77.
CHAR_POOL = (
    "abcdefghijklmnopqrstuvwxyz"
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "1234567890"
    "!^-=+[]@#$%&*()"
)

# Four separators, so each one carries exactly 2 bits.
WORD_SEPARATORS = ",;.-"

VOWELS = ("a", "e", "i", "o", "u")

# Reconstructed 22-element consonant set: 20 single letters plus the ch
# and cl onsets. The letter c never stands alone, so a c in a generated
# word always starts a digraph and two different draw sequences can never
# collide on the same output string.
CONSONANTS = (
    "b", "d", "f", "g", "h", "j", "k", "l", "m", "n",
    "p", "q", "r", "s", "t", "v", "w", "x", "y", "z",
    "ch", "cl",
)

# Reconstructed template set: a marks a vowel slot, b a consonant slot.
# All 13 span the same choice space (four of each), which is what keeps
# every word equally likely regardless of which template was drawn.
SYLLABLE_TEMPLATES = (
    "abbabbaa",
    "babaabba",
    "baabbaab",
    "ababbaab",
    "abbaabab",
    "babbaaba",
    "aabbabab",
    "babaabab",
    "abbababa",
    "baababba",
    "aababbab",
    "babbabaa",
    "abaabbab",
)


def entropy_bits(set_size: int, choices: int) -> float:
    """Entropy of ``choices`` independent uniform draws from a set."""
    if set_size < 1:
        raise ValueError(f"set size must be >= 1, got {set_size}")
    if choices < 0:
        raise ValueError(f"choices must be >= 0, got {choices}")
    return choices * math.log2(set_size)


@dataclass(frozen=True)
class SchemeSpec:
    """A scheme drawing repeatedly from one set of ``choices_per_unit`` options."""

    name: str
    choices_per_unit: int

    @property
    def entropy_bits_per_unit(self) -> float:
        return math.log2(self.choices_per_unit)

    def units_needed(self, target_bits: int) -> int:
        """Smallest u with choices_per_unit**u >= 2**target_bits.

        Pure integer arithmetic: float log rounding must never change how
        many units a target requires.
        """
        if target_bits < 0:
            raise ValueError(f"target bits must be >= 0, got {target_bits}")
        if target_bits == 0:
            return 0
        if self.choices_per_unit == 1:
            raise ConfigError(f"{self.name}: a 1-element set can never reach {target_bits} bits")
        goal = 1 << target_bits
        reach, units = 1, 0
        while reach < goal:
            reach *= self.choices_per_unit
            units += 1
        return units


def random_chars(n: int, rng: random.Random | None = None) -> str:
    """n independent uniform draws from the 77-character pool."""
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    if rng is None:
        rng = random.SystemRandom()
    return "".join(rng.choice(CHAR_POOL) for _ in range(n))


def load_wordlist(path: str | Path) -> list[str]:
    """UTF-8 wordlist, one word per line; blank lines are ignored."""
    try:
        lines = Path(path).read_text(encoding="utf-8-sig").splitlines()
    except FileNotFoundError as exc:
        raise ConfigError(f"wordlist not found: {path}") from exc
    except UnicodeDecodeError as exc:
        raise ConfigError(f"wordlist is not valid UTF-8: {path}") from exc
    words = [word for word in (line.strip() for line in lines) if word]
    if not words:
        raise ConfigError(f"wordlist is empty: {path}")
    return words


def random_words(count: int, words: Sequence[str], rng: random.Random | None = None) -> str:
    """``count`` uniform words, each followed by a uniform separator.

    The separator follows every word (including the last) so the output is
    always ``count`` draws from the word set plus ``count`` draws from the
    separator set, 2 extra bits per word.
    """
    if count < 0:
        raise ValueError(f"word count must be >= 0, got {count}")
    if not words:
        raise ConfigError("wordlist is empty")
    if rng is None:
        rng = random.SystemRandom()
    return "".join(rng.choice(words) + rng.choice(WORD_SEPARATORS) for _ in range(count))


def words_entropy_bits(count: int, list_size: int) -> float:
    """Entropy of ``count`` word+separator draws from a ``list_size`` lexicon."""
    return entropy_bits(list_size * len(WORD_SEPARATORS), count)


@dataclass(frozen=True)
class SyllableConfig:
    """Template-driven word scheme configuration.

    Every template must use the same number of vowel and consonant slots;
    otherwise words from different templates would carry different
    probabilities and the equal-likelihood guarantee would break.
    """

    templates: tuple[str, ...] = SYLLABLE_TEMPLATES
    vowels: tuple[str, ...] = VOWELS
    consonants: tuple[str, ...] = CONSONANTS

    def __post_init__(self) -> None:
        if not self.templates or not self.vowels or not self.consonants:
            raise ConfigError("templates, vowels, and consonants must all be non-empty")
        if len(set(self.templates)) != len(self.templates):
            raise ConfigError("templates must be distinct")
        if len(set(self.vowels)) != len(self.vowels) or len(set(self.consonants)) != len(self.consonants):
            raise ConfigError("vowels and consonants must be distinct within their sets")
        shapes = {(t.count("a"), t.count("b")) for t in self.templates}
        for template in self.templates:
            if set(template) - {"a", "b"}:
                raise ConfigError(f"template {template!r} may contain only 'a' and 'b'")
        if len(shapes) != 1:
            raise ConfigError("all templates must have the same vowel and consonant slot counts")

    def word_space(self) -> int:
        """Exact number of distinct draw sequences (and therefore words)."""
        vowel_slots = self.templates[0].count("a")
        consonant_slots = self.templates[0].count("b")
        return len(self.templates) * len(self.vowels) ** vowel_slots * len(self.consonants) ** consonant_slots


DEFAULT_SYLLABLES = SyllableConfig()


def syllable_word(rng: random.Random, config: SyllableConfig = DEFAULT_SYLLABLES) -> str:
    """One word: a uniform template, then a uniform letter per slot."""
    template = rng.choice(config.templates)
    return "".join(
        rng.choice(config.vowels) if slot == "a" else rng.choice(config.consonants)
        for slot in template
    )


def random_syllable_words(
    count: int,
    rng: random.Random | None = None,
    config: SyllableConfig = DEFAULT_SYLLABLES,
) -> str:
    """``count`` template words joined by single spaces."""
    if count < 0:
        raise ValueError(f"word count must be >= 0, got {count}")
    if rng is None:
        rng = random.SystemRandom()
    return " ".join(syllable_word(rng, config) for _ in range(count))
