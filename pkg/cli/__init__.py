"""Command-line interface for quivercanon."""
