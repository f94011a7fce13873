"""Domain layer - the functional core: pure functions and immutable models."""
