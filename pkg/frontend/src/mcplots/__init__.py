"""Batch SVG rendering of multi-core mapping experiment results."""

from .render import build_figures, main, render_figures

__all__ = ["build_figures", "main", "render_figures"]
