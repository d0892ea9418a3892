"""Shared instances and brute-force helpers for the test suite."""
import itertools

from hypothesis import strategies as st

from graphprod import CommutationGraph, GraphProductSpec, load_fixture, FIXTURE_NAMES
from graphprod.monoid import adjoin_identity, validate_monoid
from graphprod.normalform import Letter


def cyclic(n):
    return validate_monoid([[(i + j) % n for j in range(n)] for i in range(n)], 0,
                           ["1"] + [f"g{i}" for i in range(1, n)])


def semilattice(label="a"):
    return validate_monoid([[0, 1], [1, 1]], 0, ["1", label])


# xy = y for non-identity x, y
RIGHT_ZERO = adjoin_identity([[0, 1], [0, 1]], ["p", "q"])
# xy = x for non-identity x, y
LEFT_ZERO = adjoin_identity([[0, 0], [1, 1]], ["l", "r"])
# n*n = z, z absorbing
NILPOTENT = validate_monoid([[0, 1, 2], [1, 2, 2], [2, 2, 2]], 0, ["1", "n", "z"])


def _full_transformations(points):
    maps = list(itertools.product(range(points), repeat=points))
    ident = tuple(range(points))
    maps.remove(ident)
    maps.insert(0, ident)
    index = {m: i for i, m in enumerate(maps)}
    table = [[index[tuple(g[f[p]] for p in range(points))] for g in maps] for f in maps]
    return validate_monoid(table, 0, ["".join(map(str, m)) for m in maps])


T2 = _full_transformations(2)

EXTRA_MONOIDS = [cyclic(2), cyclic(3), semilattice(), RIGHT_ZERO, LEFT_ZERO, NILPOTENT, T2]


def make_spec(monoids, edges=()):
    graph = CommutationGraph.from_edges(len(monoids), edges)
    return GraphProductSpec(graph, tuple(monoids))


# a few hand-picked products with vertex monoids larger than 2 elements
EXTRA_SPECS = {
    "Z3*RZ": make_spec([cyclic(3), RIGHT_ZERO]),
    "Z3xRZ": make_spec([cyclic(3), RIGHT_ZERO], [(0, 1)]),
    "path-NIL-Z2-LZ": make_spec([NILPOTENT, cyclic(2), LEFT_ZERO], [(0, 1), (1, 2)]),
    "square-mixed": make_spec([semilattice(), cyclic(2), RIGHT_ZERO, NILPOTENT],
                              [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "T2-edge-Z2": make_spec([T2, cyclic(2), semilattice()], [(0, 1)]),
}


def fixtures():
    return [load_fixture(name) for name in FIXTURE_NAMES]


def all_words(spec, max_len, include_identity=False):
    letters = spec.letters(include_identity)
    for n in range(max_len + 1):
        yield from itertools.product(letters, repeat=n)


def L(v, e):
    return Letter(v, e)


@st.composite
def specs(draw, max_vertices=4):
    n = draw(st.integers(1, max_vertices))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    monoids = [draw(st.sampled_from(EXTRA_MONOIDS)) for _ in range(n)]
    return make_spec(monoids, edges)


@st.composite
def spec_and_word(draw, max_len=10, max_vertices=4, identities=True):
    spec = draw(specs(max_vertices))
    letters = spec.letters(include_identity=identities)
    word = draw(st.lists(st.sampled_from(letters), max_size=max_len))
    return spec, tuple(word)
