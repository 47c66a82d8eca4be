import pytest
from hypothesis import HealthCheck, settings

from algebra.tpoly import VolumeForm
from .strategies import twisted_volume

settings.register_profile('default', max_examples=25, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])
settings.load_profile('default')


@pytest.fixture
def standard2():
    return VolumeForm.standard(2)


@pytest.fixture
def twisted2():
    return twisted_volume()


@pytest.fixture(params=['standard', 'twisted'])
def vol2(request):
    return VolumeForm.standard(2) if request.param == 'standard' else twisted_volume()
