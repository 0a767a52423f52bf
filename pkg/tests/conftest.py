from hypothesis import HealthCheck, settings

# property tests share time with brute-force acceptance runs; a per-example
# deadline only adds flakiness on loaded machines
settings.register_profile(
    "chord_census",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("chord_census")
