"""
Общие фикстуры тестов
"""
import pytest

from modules.core import init_config
from modules.ffield import field_make, ring_make


@pytest.fixture(autouse=True)
def fresh_config():
    """Каждый тест начинает с настроек окружения (CLI переопределяет их глобально)"""
    init_config()
    yield
    init_config()


@pytest.fixture
def F2():
    return ring_make([field_make(2)])


@pytest.fixture
def F3():
    return ring_make([field_make(3)])


@pytest.fixture
def F5():
    return ring_make([field_make(5)])


@pytest.fixture
def F2xF3():
    return ring_make([field_make(2), field_make(3)])
