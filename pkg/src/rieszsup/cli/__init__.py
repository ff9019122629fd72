from __future__ import annotations

__doc__ = """
The `cli` package holds the `rieszsup` command-line application.
"""
