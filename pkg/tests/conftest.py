import json
from pathlib import Path

import pytest

from laminate.branched import from_support
from laminate.normal import fundamental_solutions, matching_system
from laminate.triangulation import parse_triangulation

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

TRI_NAMES = ("one_tet.tri", "two_tet.tri", "three_tet.tri")
MODEL_NAMES = ("three_tet_almost_normal.json", "three_tet_normal_genus2.json",
               "two_tet_klein.json", "three_tet_triangles.json")


def fixture_path(name):
    return FIXTURES / name


def load_triangulation(name):
    return parse_triangulation(fixture_path(name).read_text())


def load_model(name):
    data = json.loads((FIXTURES / "models" / name).read_text())
    tri = load_triangulation(data["triangulation"])
    return from_support(tri, data["support"])


@pytest.fixture(scope="session")
def triangulations():
    return {name: load_triangulation(name) for name in TRI_NAMES}


@pytest.fixture(scope="session")
def systems(triangulations):
    return {name: matching_system(tri)
            for name, tri in triangulations.items()}


@pytest.fixture(scope="session")
def models():
    return {name: load_model(name) for name in MODEL_NAMES}


@pytest.fixture(scope="session")
def fundamentals(triangulations):
    """Fundamental solutions per fixture, octagon orthants included."""
    return {name: fundamental_solutions(tri, include_octs=True)
            for name, tri in triangulations.items()}


@pytest.fixture(scope="session")
def plain_fundamentals(triangulations):
    """Fundamental solutions per fixture over the quad orthants only."""
    return {name: fundamental_solutions(tri)
            for name, tri in triangulations.items()}


@pytest.fixture(scope="session")
def one_tet(triangulations):
    return triangulations["one_tet.tri"]


@pytest.fixture(scope="session")
def two_tet(triangulations):
    return triangulations["two_tet.tri"]


@pytest.fixture(scope="session")
def three_tet(triangulations):
    return triangulations["three_tet.tri"]
