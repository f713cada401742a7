import math
import random
import re
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from markovpass.baselines import (
    CHAR_POOL,
    CONSONANTS,
    DEFAULT_SYLLABLES,
    SYLLABLE_TEMPLATES,
    SchemeSpec,
    SyllableConfig,
    VOWELS,
    WORD_SEPARATORS,
    entropy_bits,
    load_wordlist,
    random_chars,
    random_syllable_words,
    random_words,
    syllable_word,
    words_entropy_bits,
)
from markovpass.errors import ConfigError


class ScriptedRng:
    """random.Random stand-in replaying a fixed script of choice indices."""

    def __init__(self, picks):
        self._picks = iter(picks)

    def choice(self, seq):
        return seq[next(self._picks)]


class TestEntropyBits:
    def test_ten_bits_for_1024(self):
        assert entropy_bits(1024, 1) == 10.0

    def test_nine_characters_from_77(self):
        assert entropy_bits(77, 9) == pytest.approx(56.4, abs=0.05)

    def test_no_choice_no_entropy(self):
        assert entropy_bits(1, 100) == 0.0

    def test_three_characters_from_77(self):
        assert entropy_bits(77, 3) == pytest.approx(18.8, abs=0.05)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            entropy_bits(0, 1)
        with pytest.raises(ValueError):
            entropy_bits(2, -1)


class TestCharPool:
    def test_exactly_77_distinct_characters(self):
        assert len(CHAR_POOL) == 77
        assert len(set(CHAR_POOL)) == 77


class TestSchemeSpec:
    def test_chars_units_for_56_bits(self):
        spec = SchemeSpec("chars", 77)
        assert spec.units_needed(56) == 9
        # the integer comparison behind that answer
        assert 77**8 < 2**56 <= 77**9

    def test_zero_target_needs_zero_units(self):
        assert SchemeSpec("chars", 77).units_needed(0) == 0

    def test_one_element_set_cannot_reach_targets(self):
        with pytest.raises(ConfigError):
            SchemeSpec("degenerate", 1).units_needed(1)

    def test_negative_target_rejected(self):
        with pytest.raises(ValueError):
            SchemeSpec("chars", 77).units_needed(-1)

    def test_syllable_words_needed_for_56_bits(self):
        spec = SchemeSpec("syllables", DEFAULT_SYLLABLES.word_space())
        assert spec.units_needed(56) == 2


class TestRandomChars:
    def test_draws_from_pool(self):
        password = random_chars(9, random.Random(3))
        assert len(password) == 9
        assert set(password) <= set(CHAR_POOL)

    def test_zero_length(self):
        assert random_chars(0, random.Random(3)) == ""

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            random_chars(-1, random.Random(3))

    def test_seeded_reproducibility(self):
        assert random_chars(9, random.Random(11)) == random_chars(9, random.Random(11))

    def test_downscaled_enumeration_is_exhaustive(self):
        # with a scripted rng, 3 draws from a 2-set give all 8 outputs once
        pool = CHAR_POOL[:2]
        outputs = set()
        for picks in product(range(2), repeat=3):
            rng = ScriptedRng(picks)
            outputs.add("".join(rng.choice(pool) for _ in range(3)))
        assert len(outputs) == 8


class TestWords:
    def test_load_wordlist_skips_blanks(self, tmp_path):
        path = tmp_path / "words.txt"
        path.write_text("alpha\n\nbeta\n  \ngamma\n", encoding="utf-8")
        assert load_wordlist(path) == ["alpha", "beta", "gamma"]

    def test_load_missing_wordlist(self, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            load_wordlist(tmp_path / "nope.txt")

    def test_load_empty_wordlist(self, tmp_path):
        path = tmp_path / "none.txt"
        path.write_text("\n\n", encoding="utf-8")
        with pytest.raises(ConfigError, match="empty"):
            load_wordlist(path)

    def test_every_word_gets_a_separator(self):
        out = random_words(3, ["alpha", "beta"], random.Random(5))
        assert re.fullmatch(r"((alpha|beta)[,;.\-]){3}", out)

    def test_zero_words(self):
        assert random_words(0, ["alpha"], random.Random(5)) == ""

    def test_empty_list_rejected(self):
        with pytest.raises(ConfigError):
            random_words(2, [], random.Random(5))

    def test_entropy_arithmetic(self):
        assert words_entropy_bits(3, 2) == 9.0
        # a 456,000-word lexicon: ~18.8 bits per word plus 2 per separator
        assert words_entropy_bits(3, 456_000) == pytest.approx(62.4, abs=0.1)

    def test_separator_set_is_two_bits(self):
        assert len(WORD_SEPARATORS) == 4

    def test_downscaled_enumeration_is_exhaustive(self):
        words = ["aa", "bb"]
        outputs = set()
        for word_pick, sep_pick in product(range(2), range(4)):
            rng = ScriptedRng([word_pick, sep_pick])
            outputs.add(random_words(1, words, rng))
        assert len(outputs) == 8
        assert math.log2(len(outputs)) == words_entropy_bits(1, 2)


class TestSyllableConfig:
    def test_default_shape(self):
        assert len(SYLLABLE_TEMPLATES) == 13
        assert len(set(SYLLABLE_TEMPLATES)) == 13
        for template in SYLLABLE_TEMPLATES:
            assert template.count("a") == 4
            assert template.count("b") == 4
            assert len(template) == 8
        assert len(VOWELS) == 5
        assert len(CONSONANTS) == 22

    def test_word_space_exact(self):
        assert DEFAULT_SYLLABLES.word_space() == 13 * 5**4 * 22**4 == 1_903_330_000

    def test_per_word_entropy(self):
        assert entropy_bits(DEFAULT_SYLLABLES.word_space(), 1) == pytest.approx(30.83, abs=0.05)

    def test_rejects_mixed_shapes(self):
        with pytest.raises(ConfigError, match="same vowel"):
            SyllableConfig(templates=("ab", "aab"), vowels=("a",), consonants=("b",))

    def test_rejects_foreign_slot_characters(self):
        with pytest.raises(ConfigError, match="only 'a' and 'b'"):
            SyllableConfig(templates=("ax",), vowels=("a",), consonants=("b",))

    def test_rejects_duplicate_templates(self):
        with pytest.raises(ConfigError, match="distinct"):
            SyllableConfig(templates=("ab", "ab"), vowels=("a",), consonants=("b",))


class TestSyllableWords:
    def test_degenerate_config_is_deterministic(self):
        config = SyllableConfig(templates=("abbabbaa",), vowels=("o",), consonants=("d",))
        assert syllable_word(random.Random(1), config) == "oddoddoo"

    def test_two_words_joined_by_space(self):
        out = random_syllable_words(2, random.Random(9))
        left, right = out.split(" ")
        assert 8 <= len(left) <= 12 and 8 <= len(right) <= 12

    def test_zero_words(self):
        assert random_syllable_words(0, random.Random(9)) == ""

    def test_downscaled_enumeration_is_exhaustive(self):
        config = SyllableConfig(
            templates=("abab", "baba"),
            vowels=("a", "e"),
            consonants=("b", "c"),
        )
        outputs = set()
        total = 0
        for t_index, template in enumerate(config.templates):
            slot_ranges = [
                range(len(config.vowels)) if slot == "a" else range(len(config.consonants))
                for slot in template
            ]
            for picks in product(*slot_ranges):
                outputs.add(syllable_word(ScriptedRng([t_index, *picks]), config))
                total += 1
        assert total == config.word_space() == 32
        assert len(outputs) == 32
        assert math.log2(len(outputs)) == entropy_bits(config.word_space(), 1)

    @given(st.data())
    def test_default_config_never_collides(self, data):
        # two different draw sequences must always give different words
        config = DEFAULT_SYLLABLES

        def draw_sequence(label):
            t_index = data.draw(st.integers(0, len(config.templates) - 1), label=f"{label} template")
            picks = [t_index]
            for slot in config.templates[t_index]:
                size = len(config.vowels) if slot == "a" else len(config.consonants)
                picks.append(data.draw(st.integers(0, size - 1), label=f"{label} slot"))
            return tuple(picks)

        first = draw_sequence("first")
        second = draw_sequence("second")
        word_a = syllable_word(ScriptedRng(first), config)
        word_b = syllable_word(ScriptedRng(second), config)
        if first != second:
            assert word_a != word_b
        else:
            assert word_a == word_b
