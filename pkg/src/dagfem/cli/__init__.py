"""Command-line interface: ``dagfem <group> <command> [options]``."""

from .main import build_parser, execute, main, run

__all__ = ["build_parser", "execute", "main", "run"]
