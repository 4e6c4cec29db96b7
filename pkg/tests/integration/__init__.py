"""CLI and bench tests."""
