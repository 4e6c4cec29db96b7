"""Tests for sampleclust."""
