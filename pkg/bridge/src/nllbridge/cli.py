"""Command-line launcher for the nll server."""

from __future__ import annotations

import os

import click
import uvicorn

from .models import DEFAULT_CONTEXT_LENGTH, DEFAULT_VOCAB_SIZE, IdentityModel
from .server import create_app


@click.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=None,
              help="Defaults to $NLL_BRIDGE_PORT, then 8100.")
@click.option("--model", "model_kind", default="identity", show_default=True,
              type=click.Choice(["identity"]))
@click.option("--vocab-size", type=int, default=DEFAULT_VOCAB_SIZE,
              show_default=True)
@click.option("--context-length", type=int, default=DEFAULT_CONTEXT_LENGTH,
              show_default=True)
def main(host, port, model_kind, vocab_size, context_length):
    """Serve per-token negative log-likelihoods over HTTP."""
    if port is None:
        port = int(os.environ.get("NLL_BRIDGE_PORT", "8100"))
    model = IdentityModel(vocab_size=vocab_size, context_length=context_length)
    uvicorn.run(create_app(model), host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
