"""Pluckx."""

from __future__ import annotations

from pluckx.cli import app

if __name__ == "__main__":
    app()
