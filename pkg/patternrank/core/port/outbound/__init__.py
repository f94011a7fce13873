"""Output Ports - Interfaces for secondary/driven adapters."""
