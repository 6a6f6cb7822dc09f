"""CLI module initialization."""

from regfact.cli.main import cli, main

__all__ = ["cli", "main"]
