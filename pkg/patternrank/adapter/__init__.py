"""Adapters - External interfaces to the application."""
