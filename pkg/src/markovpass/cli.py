"""Command-line client for password generation.

Every command is a thin HTTP client of the service API. By default it
talks to an in-process copy of the app (no server or network needed);
point ``--server`` at a running ``markovpass-server`` instance to share
its cached models instead.

Passwords go to stdout, one per line; everything else (stats, tree dumps,
warnings) goes to stderr, so output stays pipeline-safe. Exit codes:
0 success, 2 configuration error, 3 model or codec error.
"""

from __future__ import annotations

import argparse
import asyncio
import os
import sys
from pathlib import Path
from typing import Any

import httpx

from . import __version__

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RUNTIME = 3

SCHEMES = ("markov", "chars", "words", "syllables")

SEED_WARNING = "WARNING: --seed output is deterministic. NOT FOR REAL USE."


class ClientError(Exception):
    def __init__(self, message: str, exit_code: int) -> None:
        super().__init__(message)
        self.exit_code = exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markovpass",
        description="Generate equiprobable pronounceable passwords from uniform random bits.",
    )
    parser.add_argument(
        "--corpus", "-c",
        default=os.environ.get("MARKOVPASS_CORPUS"),
        help="corpus text file for the markov scheme (env: MARKOVPASS_CORPUS)",
    )
    parser.add_argument("--order", "-k", type=int, default=2, help="characters of context per state (default 2)")
    parser.add_argument("--bits", "-n", type=int, default=56, help="entropy per password in bits (default 56)")
    parser.add_argument("--count", type=int, default=1, help="number of passwords (default 1)")
    parser.add_argument("--scheme", choices=SCHEMES, default="markov", help="generation scheme (default markov)")
    parser.add_argument("--start-state", help="initial state (default: prefix of 'The '; required for --order > 4)")
    parser.add_argument("--seed", type=int, help="deterministic output for testing only; never for real passwords")
    parser.add_argument("--wordlist", help="wordlist file for --scheme words")
    parser.add_argument("--show-bits", action="store_true", help="print '<bits><tab><password>' for the markov scheme")
    parser.add_argument("--stats", action="store_true", help="print model statistics to stderr")
    parser.add_argument("--dump-state", metavar="STATE", help="print one state's code tree to stderr")
    parser.add_argument(
        "--server",
        default=os.environ.get("MARKOVPASS_SERVER"),
        help="base URL of a running markovpass-server (env: MARKOVPASS_SERVER); default runs in-process",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def _client(server: str | None) -> httpx.AsyncClient:
    if server:
        return httpx.AsyncClient(base_url=server, timeout=120.0)
    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())
    return httpx.AsyncClient(transport=transport, base_url="http://markovpass.local", timeout=None)


def _raise_for_response(resp: httpx.Response) -> None:
    if resp.is_success:
        return
    try:
        detail = resp.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict):
        kind = detail.get("kind", "codec")
        message = detail.get("message", resp.text)
    else:
        kind = "codec"
        message = detail if isinstance(detail, str) else resp.text
    raise ClientError(message, EXIT_CONFIG if kind == "config" else EXIT_RUNTIME)


async def _post(client: httpx.AsyncClient, url: str, payload: dict[str, Any]) -> dict[str, Any]:
    resp = await client.post(url, json=payload)
    _raise_for_response(resp)
    return resp.json()


async def _get(client: httpx.AsyncClient, url: str, **params: Any) -> dict[str, Any]:
    resp = await client.get(url, params=params or None)
    _raise_for_response(resp)
    return resp.json()


def _read_corpus_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8-sig")
    except OSError as exc:
        raise ClientError(f"cannot read corpus file: {exc}", EXIT_CONFIG) from exc
    except UnicodeDecodeError as exc:
        raise ClientError(f"corpus file is not valid UTF-8: {path}", EXIT_CONFIG) from exc


async def _run_markov(client: httpx.AsyncClient, args: argparse.Namespace) -> int:
    if not args.corpus:
        raise ClientError("the markov scheme needs --corpus (or MARKOVPASS_CORPUS)", EXIT_CONFIG)
    model = await _post(
        client,
        "/models",
        {
            "corpus_text": _read_corpus_file(args.corpus),
            "order": args.order,
            "start_state": args.start_state,
        },
    )
    model_id = model["model_id"]

    if args.stats:
        stats = await _get(client, f"/models/{model_id}/stats")
        for key in (
            "order", "initial_state", "state_count", "transition_total",
            "min_branching", "max_branching", "mean_bits_per_char", "corpus_sha256",
        ):
            print(f"{key}: {stats[key]}", file=sys.stderr)
    if args.dump_state is not None:
        dump = await _get(client, f"/models/{model_id}/tree", state=args.dump_state)
        print(f"state {dump['state']!r}:", file=sys.stderr)
        print(dump["tree"], file=sys.stderr)

    result = await _post(
        client,
        f"/models/{model_id}/passwords",
        {
            "bits": args.bits,
            "count": args.count,
            "seed": args.seed,
            "include_bits": args.show_bits,
        },
    )
    if not result["verified"]:
        raise ClientError("service did not verify the round trip", EXIT_RUNTIME)
    if result["not_for_real_use"]:
        print(SEED_WARNING, file=sys.stderr)
    for record in result["passwords"]:
        if args.show_bits:
            print(f"{record['bits']}\t{record['password']}")
        else:
            print(record["password"])
    return EXIT_OK


async def _run_baseline(client: httpx.AsyncClient, args: argparse.Namespace) -> int:
    result = await _post(
        client,
        "/baselines/passwords",
        {
            "scheme": args.scheme,
            "bits": args.bits,
            "count": args.count,
            "wordlist_path": args.wordlist,
            "seed": args.seed,
        },
    )
    if result["not_for_real_use"]:
        print(SEED_WARNING, file=sys.stderr)
    print(
        f"scheme {result['scheme']}: {result['units_per_password']} units, "
        f"{result['entropy_bits']:.1f} bits of entropy",
        file=sys.stderr,
    )
    for password in result["passwords"]:
        print(password)
    return EXIT_OK


async def _run(args: argparse.Namespace) -> int:
    async with _client(args.server) as client:
        if args.scheme == "markov":
            return await _run_markov(client, args)
        return await _run_baseline(client, args)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return asyncio.run(_run(args))
    except ClientError as exc:
        print(f"markovpass: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except httpx.HTTPError as exc:
        print(f"markovpass: error: service request failed: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
