from pathlib import Path

import pytest

from roadgen.config import load_defaults

DATA = Path(__file__).parent / 'data'
EXAMPLES = Path(__file__).parent.parent / 'roadgen' / 'data' / 'examples'
SUBSET_XSD = DATA / 'opendrive_subset.xsd'


def pytest_addoption(parser):
    parser.addoption(
        "--xsd-1.4", dest="xsd_14", default=None,
        help="official OpenDRIVE 1.4 schema; tests needing it are skipped "
             "without")
    parser.addoption(
        "--xsd-1.5", dest="xsd_15", default=None,
        help="official OpenDRIVE 1.5 schema")


@pytest.fixture(scope="session")
def defaults():
    return load_defaults()


@pytest.fixture(scope="session")
def examples():
    return EXAMPLES


@pytest.fixture
def official_xsd(request):
    """Function ``version -> path`` of the official schema; skips the test
    if that schema was not given on the command line."""
    def get(version):
        path = request.config.getoption(
            'xsd_14' if version == '1.4' else 'xsd_15')
        if path is None:
            pytest.skip("no OpenDRIVE {} schema given (--xsd-{})".format(
                version, version))
        return Path(path)
    return get
