from hypothesis import HealthCheck, settings

settings.register_profile(
    "ordsum",
    deadline=None,
    derandomize=True,
    max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ordsum")
