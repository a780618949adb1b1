import pytest

from czx.core import Window
from czx.models import ModelSpec


@pytest.fixture
def cz():
    return ModelSpec()


@pytest.fixture
def s1():
    return ModelSpec(ModelSpec.Model_S1)


@pytest.fixture
def s2():
    return ModelSpec(ModelSpec.Model_S2, k=6, n_div=2)


@pytest.fixture
def s3():
    return ModelSpec(ModelSpec.Model_S3)


@pytest.fixture
def s4():
    return ModelSpec(ModelSpec.Model_S4)


@pytest.fixture
def s5():
    return ModelSpec(ModelSpec.Model_S5, k=6, n_div=2)


@pytest.fixture
def small_window():
    return Window(-2, 2)


@pytest.fixture
def fast_settings(settings):
    """урезанные настройки проверок, чтобы полный прогон наборов занимал секунды"""
    settings.CZX_GREEN_SEARCH_MARGIN = 6
    settings.CZX_CONGRUENCE_WINDOW = 6
    settings.CZX_CONGRUENCE_BOX = 2
    settings.CZX_CONGRUENCE_CHECK_WINDOW = 2
    settings.CZX_CONGRUENCE_SAMPLES = 2
    settings.CZX_CONGRUENCE_EXHAUSTIVE = False
    settings.CZX_RANDOM_NEIGHBOURHOODS = 100
    return settings
