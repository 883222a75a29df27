import pytest

import torsorkit as tk


def pytest_addoption(parser):
    parser.addoption(
        "--update-goldens",
        action="store_true",
        default=False,
        help="rewrite tests/golden from current CLI output",
    )


@pytest.fixture
def update_goldens(request):
    return request.config.getoption("--update-goldens")


@pytest.fixture(scope="session")
def z2():
    return tk.catalog_group("cyclic(2)")


@pytest.fixture(scope="session")
def z3():
    return tk.catalog_group("cyclic(3)")


@pytest.fixture(scope="session")
def s3():
    return tk.catalog_group("symmetric(3)")


@pytest.fixture(scope="session")
def psc():
    return tk.pseudocircle()
