"""Telemetry adapters - Prometheus metrics and OpenTelemetry spans."""
