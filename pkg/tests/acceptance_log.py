"""Collects one summary line per acceptance criterion for the terminal report."""

LINES = []
