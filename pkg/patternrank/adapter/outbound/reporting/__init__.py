"""Reporting adapters - evaluation report and extraction output rendering."""
