"""Core package - domain, ports and application use cases."""
