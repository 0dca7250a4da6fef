from pathlib import Path

import pytest

RESOURCES = Path(__file__).resolve().parent.parent / "src" / "mediawatch" / "resources"


@pytest.fixture(scope="session")
def resources_dir() -> Path:
    return RESOURCES


@pytest.fixture(scope="session")
def profiles(resources_dir):
    from mediawatch.langid import load_profiles

    return load_profiles(resources_dir / "langid" / "profiles")


@pytest.fixture(scope="session")
def norm_resources(resources_dir):
    from mediawatch.normalize import load_resources

    return load_resources(resources_dir / "normalize")


@pytest.fixture(scope="session")
def stack(resources_dir):
    from mediawatch.langstack import LanguageStack

    return LanguageStack.load(resources_dir)
