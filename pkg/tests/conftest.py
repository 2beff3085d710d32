import pytest

from mqmine.corpus import Pipeline
from mqmine.postag import default_tagger
from mqmine.units import default_catalog


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture(scope="session")
def tagger():
    return default_tagger()


@pytest.fixture(scope="session")
def pipeline():
    return Pipeline.default()
