"""Fixture catalogue."""

from cspalgebra.fixtures.catalog import CATALOG, EDGE, FixtureEntry, get_fixture

__all__ = ["CATALOG", "EDGE", "FixtureEntry", "get_fixture"]
