"""Persistence adapters - corpora, extraction inputs and tagger model files."""
