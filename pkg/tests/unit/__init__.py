"""Per-module tests."""
