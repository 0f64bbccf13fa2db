import pytest
from fastapi.testclient import TestClient

from app.core import config
from app.core.forest import forest_from_edges
from app.core.fixtures import load_figure2
from app.schemas.forest import Labeling


@pytest.fixture
def client():
    from main import app

    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture
def edge_cap(monkeypatch):
    """Set ANTIMAGIC_EDGE_CAP for one test and reload the settings around it."""

    def apply(value: int):
        monkeypatch.setenv("ANTIMAGIC_EDGE_CAP", str(value))
        return config.get_settings()

    yield apply
    monkeypatch.delenv("ANTIMAGIC_EDGE_CAP", raising=False)
    config.get_settings()


@pytest.fixture(scope="session")
def figure2():
    """(graph, forest, labeling) for each bundled panel."""
    panels = []
    for fixture in load_figure2():
        forest = forest_from_edges(fixture.edges)
        labeling = Labeling(edges=tuple(tuple(e) for e in fixture.edges), labels=tuple(fixture.labels))
        panels.append((fixture.graph, forest, labeling))
    return panels
