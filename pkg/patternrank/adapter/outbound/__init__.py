"""Secondary/Driven Adapters - embedding backends, files, reports, telemetry."""
