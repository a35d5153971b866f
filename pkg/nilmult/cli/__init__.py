"""
Command-line front end.
"""
from nilmult.cli.main import CommandResult, build_parser, main

__all__ = ["CommandResult", "build_parser", "main"]
