"""HTTP front end: model building, password generation, verification.

Models are expensive to build and cheap to share, so a long-running
instance builds each (corpus, order, start) combination once and serves
every later generation request from the cache. All error responses carry
a ``kind`` of either "config" (bad request shape or parameters) or
"codec" (the model or codec itself refused), so thin clients can map them
to distinct exit codes without parsing messages.
"""

from __future__ import annotations

import random

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..baselines import (
    CHAR_POOL,
    DEFAULT_SYLLABLES,
    SchemeSpec,
    WORD_SEPARATORS,
    load_wordlist,
    random_chars,
    random_syllable_words,
    random_words,
)
from ..codec import BitStream, Model, decode, encode, generate, model_stats, verify_roundtrip
from ..corpus import Corpus, load_corpus
from ..errors import (
    CodecError,
    ConfigError,
    CorpusError,
    CorpusTooShortError,
    MarkovpassError,
    ModelError,
)
from .registry import ModelRegistry, UnknownModelError
from . import schemas

# Exception class -> (HTTP status, error kind). Config-kind errors mean
# the request itself was wrong; codec-kind means the model or codec
# refused. Clients map these to exit codes 2 and 3 respectively.
_ERROR_MAP: tuple[tuple[type[MarkovpassError], int, str], ...] = (
    (UnknownModelError, 404, "config"),
    (ConfigError, 400, "config"),
    (CorpusError, 400, "config"),
    (CorpusTooShortError, 422, "codec"),
    (ModelError, 422, "codec"),
    (CodecError, 422, "codec"),
)


def _error_response(status: int, kind: str, error: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"detail": {"kind": kind, "error": error, "message": message}},
    )


def _model_info(model_id: str, model: Model) -> schemas.ModelInfo:
    return schemas.ModelInfo(
        model_id=model_id,
        order=model.order,
        initial_state=model.initial_state,
        state_count=model.state_count,
        corpus_length=model.corpus_length,
        corpus_sha256=model.corpus_fingerprint,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="markovpass",
        version=__version__,
        description="Equiprobable pronounceable passwords from uniform random bits.",
    )
    registry = ModelRegistry()
    app.state.registry = registry

    @app.exception_handler(MarkovpassError)
    async def handle_package_error(request: Request, exc: MarkovpassError) -> JSONResponse:
        for klass, status, kind in _ERROR_MAP:
            if isinstance(exc, klass):
                return _error_response(status, kind, type(exc).__name__, str(exc))
        return _error_response(500, "codec", type(exc).__name__, str(exc))

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, exc: RequestValidationError) -> JSONResponse:
        return _error_response(422, "config", "RequestValidationError", str(exc.errors()))

    @app.get("/health", response_model=schemas.ServiceInfo)
    def health() -> schemas.ServiceInfo:
        return schemas.ServiceInfo(name="markovpass", version=__version__)

    @app.post("/models", response_model=schemas.ModelInfo)
    def build(req: schemas.BuildModelRequest) -> schemas.ModelInfo:
        if (req.corpus_text is None) == (req.corpus_path is None):
            raise ConfigError("provide exactly one of corpus_text or corpus_path")
        if req.corpus_text is not None:
            corpus = Corpus.from_text(req.corpus_text)
        else:
            corpus = load_corpus(req.corpus_path)
        model_id, model = registry.get_or_build(corpus, req.order, req.start_state)
        return _model_info(model_id, model)

    @app.get("/models", response_model=list[schemas.ModelInfo])
    def list_models() -> list[schemas.ModelInfo]:
        return [_model_info(model_id, model) for model_id, model in registry.items()]

    @app.get("/models/{model_id}", response_model=schemas.ModelInfo)
    def show_model(model_id: str) -> schemas.ModelInfo:
        return _model_info(model_id, registry.get(model_id))

    @app.get("/models/{model_id}/stats", response_model=schemas.ModelStatsResponse)
    def stats(model_id: str) -> schemas.ModelStatsResponse:
        info = model_stats(registry.get(model_id))
        return schemas.ModelStatsResponse(
            model_id=model_id,
            order=info.order,
            initial_state=info.initial_state,
            state_count=info.state_count,
            transition_total=info.transition_total,
            min_branching=info.min_branching,
            max_branching=info.max_branching,
            mean_bits_per_char=info.mean_bits_per_char,
            corpus_sha256=info.corpus_fingerprint,
        )

    @app.get("/models/{model_id}/tree", response_model=schemas.TreeDumpResponse)
    def tree_dump(model_id: str, state: str = Query(...)) -> schemas.TreeDumpResponse:
        from ..huffman import format_tree

        model = registry.get(model_id)
        tree = model.trees.get(state)
        if tree is None:
            raise ModelError(f"state {state!r} is not in the model")
        return schemas.TreeDumpResponse(model_id=model_id, state=state, tree=format_tree(tree))

    @app.post("/models/{model_id}/passwords", response_model=schemas.GenerateResponse)
    def make_passwords(model_id: str, req: schemas.GenerateRequest) -> schemas.GenerateResponse:
        model = registry.get(model_id)
        rng: random.Random = random.Random(req.seed) if req.seed is not None else random.SystemRandom()
        records = []
        for _ in range(req.count):
            password, bits = generate(model, req.bits, rng)
            records.append(
                schemas.PasswordRecord(password=password, bits=bits if req.include_bits else None)
            )
        return schemas.GenerateResponse(
            model_id=model_id,
            bits_per_password=req.bits,
            passwords=records,
            verified=True,
            not_for_real_use=req.seed is not None,
        )

    @app.post("/models/{model_id}/roundtrip", response_model=schemas.RoundTripResponse)
    def roundtrip(model_id: str, req: schemas.RoundTripRequest) -> schemas.RoundTripResponse:
        model = registry.get(model_id)
        password = decode(model, BitStream(req.bits))
        return schemas.RoundTripResponse(
            ok=verify_roundtrip(model, req.bits),
            password=password,
            reencoded_bits=encode(model, password),
        )

    @app.post("/baselines/passwords", response_model=schemas.BaselineResponse)
    def baseline_passwords(req: schemas.BaselineRequest) -> schemas.BaselineResponse:
        rng: random.Random = random.Random(req.seed) if req.seed is not None else random.SystemRandom()
        if req.scheme == "chars":
            spec = SchemeSpec("chars", len(CHAR_POOL))
            units = spec.units_needed(req.bits)
            passwords = [random_chars(units, rng) for _ in range(req.count)]
        elif req.scheme == "words":
            if not req.wordlist_path:
                raise ConfigError("scheme 'words' needs wordlist_path")
            words = load_wordlist(req.wordlist_path)
            spec = SchemeSpec("words", len(words) * len(WORD_SEPARATORS))
            units = spec.units_needed(req.bits)
            passwords = [random_words(units, words, rng) for _ in range(req.count)]
        else:
            spec = SchemeSpec("syllables", DEFAULT_SYLLABLES.word_space())
            units = spec.units_needed(req.bits)
            passwords = [random_syllable_words(units, rng) for _ in range(req.count)]
        return schemas.BaselineResponse(
            scheme=req.scheme,
            units_per_password=units,
            entropy_bits=units * spec.entropy_bits_per_unit,
            passwords=passwords,
            not_for_real_use=req.seed is not None,
        )

    return app


def main(argv: list[str] | None = None) -> None:
    """Run the service under uvicorn."""
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(prog="markovpass-server", description="Run the password generation service.")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8077)
    args = parser.parse_args(argv)
    uvicorn.run(create_app(), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
