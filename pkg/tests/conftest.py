# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import pytest

from ar.catalog import module_catalog
from morphism.catalog import h_catalog
from storage.local_backend import LocalReportBackend


@pytest.fixture(scope="session")
def backend(tmp_path_factory) -> LocalReportBackend:
    return LocalReportBackend(report_dir=str(tmp_path_factory.mktemp("reports")))


@pytest.fixture(scope="session")
def k_x2(backend):
    return backend.load_algebra("k_x2")


@pytest.fixture(scope="session")
def k_x3(backend):
    return backend.load_algebra("k_x3")


@pytest.fixture(scope="session")
def nakayama(backend):
    return backend.load_algebra("nakayama_cyclic2")


@pytest.fixture(scope="session")
def ka2(backend):
    return backend.load_algebra("kA2")


@pytest.fixture(scope="session")
def ka3(backend):
    return backend.load_algebra("kA3")


@pytest.fixture(scope="session")
def k_x2_modules(k_x2):
    return module_catalog(k_x2.algebra)


@pytest.fixture(scope="session")
def k_x2_h(k_x2):
    return h_catalog(k_x2.algebra)


@pytest.fixture(scope="session")
def k_x3_modules(k_x3):
    return module_catalog(k_x3.algebra)


@pytest.fixture(scope="session")
def k_x3_h(k_x3):
    return h_catalog(k_x3.algebra)


@pytest.fixture(scope="session")
def k_x4(backend):
    return backend.load_algebra("k_x4")


@pytest.fixture(scope="session")
def k_x4_modules(k_x4):
    return module_catalog(k_x4.algebra)


@pytest.fixture(scope="session")
def nakayama_modules(nakayama):
    return module_catalog(nakayama.algebra)


@pytest.fixture(scope="session")
def nakayama_h(nakayama):
    return h_catalog(nakayama.algebra)
