import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "pensionlab",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("pensionlab")


@pytest.fixture
def scenario_path(tmp_path):
    return tmp_path / "scenarios.jsonl"
