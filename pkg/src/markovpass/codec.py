"""Bit-string to text codec over per-state prefix codes.

Generation is decoding: a uniformly random n-bit string drives walks down
the code tree of whichever state the output currently ends in, so common
successors cost few bits and rare ones cost more, while every n-bit string
still maps to a distinct output. Running the compression direction over
the output recovers the bits, which is how callers audit that the mapping
really is one-to-one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .corpus import Corpus, circular_windows
from .errors import (
    CodecError,
    ConfigError,
    DeterministicCycleError,
    ModelError,
    UnknownTransitionError,
)
from .huffman import CodeTree, build_tree, traverse
from .markov import build_table, state_closure_check

# Start states default to prefixes of this text; longer orders need an
# explicit start because the default would no longer be k characters.
DEFAULT_START_TEXT = "The "


class BitStream:
    """A finite bit string that yields 0 once the real bits run out.

    ``cursor`` counts only real bits handed out; reads past the end return
    0 without advancing it. Streams are single-use: decoding consumes one.
    """

    __slots__ = ("_bits", "_cursor")

    def __init__(self, bits: str) -> None:
        if bits.strip("01"):
            raise ValueError("bit string may contain only '0' and '1'")
        self._bits = bits
        self._cursor = 0

    def __repr__(self) -> str:
        return f"BitStream({self._bits!r}, cursor={self._cursor})"

    @property
    def bits(self) -> str:
        return self._bits

    @property
    def length(self) -> int:
        return len(self._bits)

    @property
    def cursor(self) -> int:
        return self._cursor

    @property
    def exhausted(self) -> bool:
        return self._cursor >= len(self._bits)

    def read(self) -> int:
        cur = self._cursor
        if cur < len(self._bits):
            self._cursor = cur + 1
            return 1 if self._bits[cur] == "1" else 0
        return 0


@dataclass(frozen=True)
class Model:
    """Immutable bundle of per-state code trees.

    Safe to share across threads: nothing here mutates after construction,
    and each generation call owns its own BitStream.
    """

    order: int
    initial_state: str
    trees: Mapping[str, CodeTree]
    corpus_fingerprint: str
    corpus_length: int

    @property
    def state_count(self) -> int:
        return len(self.trees)


def default_start(k: int) -> str:
    """The default start state for order k, when one exists."""
    if k < 1:
        raise ConfigError(f"order must be >= 1, got {k}")
    if k > len(DEFAULT_START_TEXT):
        raise ConfigError(
            f"no default start state for order {k} (defaults cover orders 1-"
            f"{len(DEFAULT_START_TEXT)}); pass one explicitly"
        )
    return DEFAULT_START_TEXT[:k]


def build_model(corpus: Corpus, k: int, start: str | None = None) -> Model:
    """Count transitions over the circular corpus and grow one code tree per state."""
    if k < 1:
        raise ConfigError(f"order must be >= 1, got {k}")
    if start is None:
        start = default_start(k)
    elif len(start) != k:
        raise ConfigError(f"start state {start!r} must be exactly {k} characters")
    table = build_table(circular_windows(corpus, k), k)
    if not state_closure_check(table):
        raise ModelError("transition table is not closed under its own transitions")
    if start not in table.rows:
        raise ModelError(f"start state {start!r} never occurs in the corpus")
    trees = {state: build_tree(dist) for state, dist in table.rows.items()}
    return Model(
        order=k,
        initial_state=start,
        trees=trees,
        corpus_fingerprint=corpus.fingerprint,
        corpus_length=corpus.length,
    )


def decode(model: Model, bits: BitStream) -> str:
    """Map a bit stream to text; left-inverted by :func:`encode`.

    Characters are emitted until every real bit has been handed out. The
    final tree walk may be completed by the stream's zero padding, and no
    characters are emitted after the walk that consumes the last real bit,
    even if further transitions would be forced ones.
    """
    out = [model.initial_state]
    state = model.initial_state
    trees = model.trees
    k = model.order
    # A run of zero-bit steps longer than the corpus must have revisited a
    # single-successor state, so the walk is cycling and will never absorb
    # another bit. Bail out instead of spinning forever.
    zero_run = 0
    limit = model.corpus_length
    while not bits.exhausted:
        symbol, consumed = traverse(trees[state], bits)
        if consumed:
            zero_run = 0
        else:
            zero_run += 1
            if zero_run > limit:
                raise DeterministicCycleError(
                    f"{zero_run} successive forced transitions with bits still "
                    "unread; the model cannot absorb more entropy"
                )
        out.append(symbol)
        state = (state + symbol)[-k:]
    return "".join(out)


def encode(model: Model, text: str) -> str:
    """Concatenated codewords that regenerate ``text``.

    This is the compression direction: it returns the full codeword
    sequence, which may be longer than the bit string that produced the
    text because the final decode walk was finished on padding zeros.
    """
    k = model.order
    if len(text) < k or text[:k] != model.initial_state:
        raise CodecError(f"text must begin with the start state {model.initial_state!r}")
    trees = model.trees
    state = text[:k]
    parts: list[str] = []
    for ch in text[k:]:
        try:
            parts.append(trees[state].codewords[ch])
        except KeyError:
            raise UnknownTransitionError(
                f"no transition from state {state!r} to {ch!r} in the model"
            ) from None
        state = (state + ch)[-k:]
    return "".join(parts)


def verify_roundtrip(model: Model, bits: BitStream | str) -> bool:
    """Decode, re-encode, and confirm the bits come back.

    True iff the re-encoded string starts with the original bits and
    carries nothing but zeros after them (the padding that completed the
    final tree walk). Any codec failure along the way counts as False.
    """
    raw = bits if isinstance(bits, str) else bits.bits
    try:
        recoded = encode(model, decode(model, BitStream(raw)))
    except CodecError:
        return False
    n = len(raw)
    if len(recoded) < n or recoded[:n] != raw:
        return False
    return recoded.count("0", n) == len(recoded) - n


def generate(model: Model, n: int, rng: random.Random | None = None) -> tuple[str, str]:
    """Draw n random bits and decode them; returns (password, bits).

    Bits come from the operating system's entropy source unless an
    explicit rng is supplied (testing only). Every call re-verifies the
    round trip before returning, so a password is never emitted unless
    its exact bit string can be recovered from it.
    """
    if n < 0:
        raise ConfigError(f"bit count must be >= 0, got {n}")
    if rng is None:
        rng = random.SystemRandom()
    bits = format(rng.getrandbits(n), f"0{n}b") if n else ""
    password = decode(model, BitStream(bits))
    if not verify_roundtrip(model, bits):
        raise CodecError("round-trip verification failed; refusing to emit the password")
    return password, bits


@dataclass(frozen=True)
class ModelStats:
    order: int
    initial_state: str
    state_count: int
    transition_total: int
    min_branching: int
    max_branching: int
    mean_bits_per_char: float
    corpus_fingerprint: str


def model_stats(model: Model) -> ModelStats:
    """Shape statistics for reporting.

    ``mean_bits_per_char`` weights each codeword length by how often its
    transition occurs in the corpus, estimating how many bits one emitted
    character absorbs on average; higher orders absorb fewer, which is why
    their outputs run longer for the same bit budget.
    """
    total = 0
    weighted_bits = 0
    min_branching = max_branching = 0
    for tree in model.trees.values():
        branching = 0
        for _symbol, weight, depth in tree.leaves():
            branching += 1
            total += weight
            weighted_bits += weight * depth
        if min_branching == 0 or branching < min_branching:
            min_branching = branching
        if branching > max_branching:
            max_branching = branching
    return ModelStats(
        order=model.order,
        initial_state=model.initial_state,
        state_count=model.state_count,
        transition_total=total,
        min_branching=min_branching,
        max_branching=max_branching,
        mean_bits_per_char=weighted_bits / total,
        corpus_fingerprint=model.corpus_fingerprint,
    )
