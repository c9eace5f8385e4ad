import pytest

import fixtures


@pytest.fixture(scope="session")
def data_dir(tmp_path_factory):
    """Directory of JSON documents shared by the CLI and acceptance tests."""
    directory = tmp_path_factory.mktemp("data")
    fixtures.write_data_files(directory)
    return directory
