import pytest

from qhlag.presets import load_preset


@pytest.fixture(scope="session")
def m2():
    return load_preset("M2")


@pytest.fixture(scope="session")
def m3():
    return load_preset("M3")


@pytest.fixture(scope="session")
def m2t():
    return load_preset("M2T")
