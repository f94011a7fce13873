"""Application - Use cases and application services."""
