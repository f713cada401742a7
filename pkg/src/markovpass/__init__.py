"""Equiprobable pronounceable passwords.

Uniform random bits are decoded through per-state prefix-code trees built
on character n-gram statistics from a text corpus. Frequent transitions
cost few bits and rare ones cost more, so outputs read like language while
every n-bit input still maps to a distinct password; re-encoding a
password recovers exactly the bits that produced it.
"""

__version__ = "0.1.0"

from .baselines import (
    SchemeSpec,
    SyllableConfig,
    entropy_bits,
    load_wordlist,
    random_chars,
    random_syllable_words,
    random_words,
)
from .codec import (
    BitStream,
    Model,
    ModelStats,
    build_model,
    decode,
    encode,
    generate,
    model_stats,
    verify_roundtrip,
)
from .corpus import Corpus, circular_windows, load_corpus, normalize_text
from .errors import (
    CodecError,
    ConfigError,
    CorpusError,
    CorpusTooShortError,
    DeterministicCycleError,
    MarkovpassError,
    ModelError,
    UnknownTransitionError,
)
from .huffman import CodeTree, build_tree, codeword, kraft_sum, traverse
from .markov import TransitionTable, build_table, state_closure_check

__all__ = [
    "__version__",
    "BitStream",
    "CodeTree",
    "CodecError",
    "ConfigError",
    "Corpus",
    "CorpusError",
    "CorpusTooShortError",
    "DeterministicCycleError",
    "MarkovpassError",
    "Model",
    "ModelError",
    "ModelStats",
    "SchemeSpec",
    "SyllableConfig",
    "TransitionTable",
    "UnknownTransitionError",
    "build_model",
    "build_table",
    "build_tree",
    "circular_windows",
    "codeword",
    "decode",
    "encode",
    "entropy_bits",
    "generate",
    "kraft_sum",
    "load_corpus",
    "load_wordlist",
    "model_stats",
    "normalize_text",
    "random_chars",
    "random_syllable_words",
    "random_words",
    "state_closure_check",
    "traverse",
    "verify_roundtrip",
]
