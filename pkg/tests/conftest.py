from __future__ import annotations

from hypothesis import HealthCheck, settings

# Search-backed properties can be slow on first call while caches warm up;
# wall-clock deadlines would make those flaky.
settings.register_profile(
    "cwmat",
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("cwmat")
