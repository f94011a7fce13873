"""
Test package for the patternrank toolkit.

This package contains all tests, organized by type:
- unit: Fast, isolated unit tests (domains/ holds the functional core)
- integration: End-to-end CLI runs against files on disk

Test categories are marked with pytest markers for selective running.
"""
