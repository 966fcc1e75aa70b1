import sys
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parent.parent
CORPUS = REPO / "corpus"

sys.path.insert(0, str(Path(__file__).resolve().parent))


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(scope="session")
def corpus_models():
    from hilali import load_model
    return {path.name.replace(".model.json", ""): load_model(path)
            for path in sorted(CORPUS.glob("*.model.json"))}
