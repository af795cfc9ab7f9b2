import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from kleinepw import group  # noqa: E402


@pytest.fixture(scope="session")
def generators():
    return group.gen_a(), group.gen_c(), group.weil_outside_borel()


@pytest.fixture(scope="session")
def table660(generators):
    return group.generate_group(list(generators))


@pytest.fixture(scope="session")
def labeled_classes(table660):
    return table660.labeled_classes()
