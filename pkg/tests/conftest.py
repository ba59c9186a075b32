import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def paper_ideal():
    from tropstrat.curve_example import build_example_ideal

    I = build_example_ideal()
    I.lifted_homogeneous()  # warm the cached lift once per session
    return I


@pytest.fixture(scope="session")
def support_xy():
    from tropstrat.curve_example import support_ideal

    return support_ideal()


@pytest.fixture(scope="session")
def paper_ray(paper_ideal):
    import math

    from tropstrat.strata import stratify_ray

    return stratify_ray(paper_ideal, (0, 0, 0), (0, 0, 1), -1, math.inf, cap=10)
