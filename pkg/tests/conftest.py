import os
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]

# Canterbury corpus location: the TRITCODE_CORPUS environment variable, or
# corpus/canterbury under the repo root. scripts/fetch_corpus.py fills the
# latter in.
CORPUS_ENV = "TRITCODE_CORPUS"


def corpus_location() -> Path:
    override = os.environ.get(CORPUS_ENV)
    if override:
        return Path(override)
    return REPO_ROOT / "corpus" / "canterbury"


@pytest.fixture(scope="session")
def canterbury_dir() -> Path:
    from tritcode.bench import CANTERBURY_FILES

    path = corpus_location()
    missing = [f for f in CANTERBURY_FILES if not (path / f).is_file()]
    if missing:
        pytest.skip(
            f"Canterbury corpus not found at {path} (missing {len(missing)} "
            f"of {len(CANTERBURY_FILES)} files). Run scripts/fetch_corpus.py "
            f"or point {CORPUS_ENV} at the corpus directory."
        )
    return path
