"""In-memory model cache shared by every request."""

from __future__ import annotations

import hashlib
import threading

from ..codec import Model, build_model, default_start
from ..corpus import Corpus
from ..errors import MarkovpassError


class UnknownModelError(MarkovpassError):
    """No model with the requested id has been built on this server."""


def model_key(corpus_fingerprint: str, order: int, start: str) -> str:
    raw = f"{corpus_fingerprint}:{order}:{start}"
    return hashlib.sha256(raw.encode("utf-8")).hexdigest()[:16]


class ModelRegistry:
    """Deduplicates builds by (corpus, order, start state).

    Models are immutable, so concurrent readers need no coordination; the
    lock only serializes builds so the same model is never built twice.
    """

    def __init__(self) -> None:
        self._models: dict[str, Model] = {}
        self._lock = threading.Lock()

    def get_or_build(self, corpus: Corpus, order: int, start: str | None) -> tuple[str, Model]:
        resolved = start if start is not None else default_start(order)
        key = model_key(corpus.fingerprint, order, resolved)
        with self._lock:
            model = self._models.get(key)
            if model is None:
                model = build_model(corpus, order, resolved)
                self._models[key] = model
        return key, model

    def get(self, model_id: str) -> Model:
        try:
            return self._models[model_id]
        except KeyError:
            raise UnknownModelError(f"unknown model id: {model_id}") from None

    def items(self) -> list[tuple[str, Model]]:
        return list(self._models.items())
