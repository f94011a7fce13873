# Marks the infra package for infrastructure components (logging, telemetry)
