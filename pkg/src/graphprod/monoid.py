"""Finite monoids given by Cayley tables, and morphisms between them.

Elements are referred to by their index in the table everywhere in the
library; labels only matter when reading and writing files.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .errors import (
    DuplicateLabel,
    IdentityLawViolated,
    IdentityNotPreserved,
    NotAssociative,
    NotHomomorphic,
    ShapeMismatch,
)


@dataclass(frozen=True)
class FiniteMonoid:
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise KeyError(label) from None

    def non_identity(self) -> list[int]:
        return [i for i in range(self.size) if i != self.identity]

    def __repr__(self):
        return f"FiniteMonoid({list(self.elements)}, identity={self.elements[self.identity]!r})"


@dataclass(frozen=True)
class VertexMorphism:
    source: FiniteMonoid
    target: FiniteMonoid
    map: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.map[i]

    @classmethod
    def identity(cls, monoid: FiniteMonoid) -> "VertexMorphism":
        return cls(monoid, monoid, tuple(range(monoid.size)))


def _square(raw_table) -> tuple[tuple[int, ...], ...]:
    n = len(raw_table)
    if n == 0:
        raise ShapeMismatch("table is empty")
    rows = []
    for r, row in enumerate(raw_table):
        if len(row) != n:
            raise ShapeMismatch(f"row {r} has {len(row)} entries, expected {n}")
        for c, entry in enumerate(row):
            if isinstance(entry, bool) or not isinstance(entry, int) or not 0 <= entry < n:
                raise ShapeMismatch(f"entry ({r}, {c}) = {entry!r} is not an element index")
        rows.append(tuple(row))
    return tuple(rows)


def _first_non_associative(table) -> Optional[tuple[int, int, int]]:
    n = len(table)
    for i, j, k in product(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            return i, j, k
    return None


def validate_monoid(raw_table: Sequence[Sequence[int]], identity_index: int = 0,
                    labels: Optional[Sequence[str]] = None) -> FiniteMonoid:
    """Check a Cayley table exhaustively and wrap it as a FiniteMonoid.

    ``labels`` defaults to the element indices written as strings.
    """
    table = _square(raw_table)
    n = len(table)
    if labels is None:
        labels = [str(i) for i in range(n)]
    labels = tuple(str(label) for label in labels)
    if len(labels) != n:
        raise ShapeMismatch(f"{len(labels)} labels for a table of size {n}")
    if len(set(labels)) != n:
        dupes = sorted({x for x in labels if labels.count(x) > 1})
        raise DuplicateLabel(f"duplicate element labels: {dupes}")
    if isinstance(identity_index, bool) or not isinstance(identity_index, int) \
            or not 0 <= identity_index < n:
        raise ShapeMismatch(f"identity index {identity_index!r} out of range")
    e = identity_index
    for j in range(n):
        if table[e][j] != j or table[j][e] != j:
            raise IdentityLawViolated(j, f"identity {labels[e]!r} does not fix {labels[j]!r}")
    bad = _first_non_associative(table)
    if bad is not None:
        i, j, k = bad
        raise NotAssociative(i, j, k, f"not associative on ({labels[i]}, {labels[j]}, {labels[k]})")
    return FiniteMonoid(labels, table, e)


def validate_morphism(source: FiniteMonoid, target: FiniteMonoid,
                      map: Sequence[int]) -> VertexMorphism:
    if len(map) != source.size:
        raise ShapeMismatch(f"map has length {len(map)}, source has {source.size} elements")
    for i, m in enumerate(map):
        if isinstance(m, bool) or not isinstance(m, int) or not 0 <= m < target.size:
            raise ShapeMismatch(f"image of element {i} is {m!r}, not a target index")
    if map[source.identity] != target.identity:
        raise IdentityNotPreserved(
            f"identity {source.elements[source.identity]!r} maps to "
            f"{target.elements[map[source.identity]]!r}")
    for i, j in product(range(source.size), repeat=2):
        if map[source.table[i][j]] != target.table[map[i]][map[j]]:
            raise NotHomomorphic(i, j, f"map is not multiplicative on "
                                       f"({source.elements[i]}, {source.elements[j]})")
    return VertexMorphism(source, target, tuple(map))


def adjoin_identity(semigroup_table: Sequence[Sequence[int]],
                    labels: Optional[Sequence[str]] = None) -> FiniteMonoid:
    """Return S with a fresh identity appended at index ``len(S)``.

    This is done even when S already has an identity, since the new element
    must not coincide with anything in S.
    """
    table = _square(semigroup_table)
    n = len(table)
    bad = _first_non_associative(table)
    if bad is not None:
        raise NotAssociative(*bad)
    if labels is None:
        labels = [str(i) for i in range(n)]
    labels = [str(label) for label in labels]
    fresh = "1"
    while fresh in labels:
        fresh += "'"
    rows = [list(row) + [i] for i, row in enumerate(table)]
    rows.append(list(range(n + 1)))
    return validate_monoid(rows, n, labels + [fresh])


def trivial_monoid(label: str = "1") -> FiniteMonoid:
    return FiniteMonoid((label,), ((0,),), 0)
