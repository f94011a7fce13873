"""Primary/Driving Adapters - Inbound interfaces (the command line)."""
