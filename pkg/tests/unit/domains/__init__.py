"""Tests for domain layer (functional core)."""
