"""The canonical small instances used throughout the tests and docs.

FIX-A  one vertex, the group Z2 = {1, g}
FIX-B  two vertices, no edge (free product of two 2-element semilattices)
FIX-C  path 0-1-2, three 2-element semilattices
FIX-D  two vertices joined by an edge
FIX-E  triangle, i.e. the direct product of three semilattices
"""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..errors import UnknownFixture
from ..product import GraphProductSpec

FIXTURE_NAMES = ("FIX-A", "FIX-B", "FIX-C", "FIX-D", "FIX-E")


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    filename = name.lower().replace("-", "_") + ".json"
    return resources.files(__name__).joinpath(filename).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load_fixture(name: str) -> GraphProductSpec:
    from ..formats import parse_instance
    return parse_instance(fixture_text(name))
