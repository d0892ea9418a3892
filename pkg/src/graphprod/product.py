"""Graph products of finite monoids as concrete monoids of normal forms."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

from .errors import (
    ElementOutOfRange,
    EmptyVertexSet,
    GraphMismatch,
    ShapeMismatch,
    SpecMismatch,
    VertexOutOfRange,
)
from .graph import CommutationGraph, induced_subgraph
from .monoid import FiniteMonoid, VertexMorphism
from .normalform import (
    EMPTY,
    Letter,
    NormalForm,
    check_word,
    flatten,
    is_identity_letter,
    lfnf,
    support,
    _push,
)


@dataclass(frozen=True)
class GraphProductSpec:
    graph: CommutationGraph
    monoids: tuple[FiniteMonoid, ...]
    vertex_labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.monoids) != self.graph.vertex_count:
            raise ShapeMismatch(
                f"{len(self.monoids)} monoids for {self.graph.vertex_count} vertices")
        if self.vertex_labels is None:
            object.__setattr__(self, "vertex_labels",
                               tuple(str(v) for v in range(self.graph.vertex_count)))
        if len(self.vertex_labels) != self.graph.vertex_count:
            raise ShapeMismatch("one label per vertex is required")

    @cached_property
    def digest(self) -> str:
        """Content hash of the graph and the multiplication tables; labels are ignored."""
        payload = {
            "n": self.graph.vertex_count,
            "edges": self.graph.edges(),
            "monoids": [[m.identity, [list(r) for r in m.table]] for m in self.monoids],
        }
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode()).hexdigest()

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def letters(self, include_identity: bool = False) -> list[Letter]:
        return [Letter(v, e) for v, m in enumerate(self.monoids) for e in range(m.size)
                if include_identity or e != m.identity]

    def letter_label(self, x) -> str:
        v, e = x
        return f"{self.vertex_labels[v]}:{self.monoids[v].elements[e]}"

    def identity(self) -> "GPElement":
        return GPElement(self, EMPTY)

    def element(self, word: Iterable) -> "GPElement":
        return element_of(self, word)

    def __hash__(self):
        return hash(self.digest)


class GPElement:
    """An element of a graph product, always stored as its normal form."""

    __slots__ = ("spec", "nf")

    def __init__(self, spec: GraphProductSpec, nf: NormalForm):
        self.spec = spec
        self.nf = nf

    @property
    def word(self) -> tuple:
        return flatten(self.nf)

    @property
    def block_length(self) -> int:
        return len(self.nf)

    @property
    def support(self) -> frozenset:
        return support(self.word)

    def is_identity(self) -> bool:
        return not self.nf

    def __mul__(self, other: "GPElement") -> "GPElement":
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, GPElement):
            return NotImplemented
        return self.nf == other.nf and self.spec.digest == other.spec.digest

    def __hash__(self):
        return hash(self.nf)

    def __repr__(self):
        from .normalform import format_normal_form
        return f"GPElement({format_normal_form(self.spec, self.nf)})"


def element_of(spec: GraphProductSpec, word: Iterable) -> GPElement:
    return GPElement(spec, lfnf(spec, word))


def _same_spec(u: GPElement, v: GPElement) -> None:
    if u.spec is not v.spec and u.spec.digest != v.spec.digest:
        raise SpecMismatch("elements belong to different graph products")


def multiply(u: GPElement, v: GPElement) -> GPElement:
    _same_spec(u, v)
    blocks = list(u.nf)
    for x in flatten(v.nf):
        _push(u.spec, blocks, x, opposite=False)
    return GPElement(u.spec, tuple(blocks))


def embed_vertex(spec: GraphProductSpec, vertex: int, element_index: int) -> GPElement:
    if not 0 <= vertex < spec.vertex_count:
        raise VertexOutOfRange(f"vertex {vertex} out of range")
    if not 0 <= element_index < spec.monoids[vertex].size:
        raise ElementOutOfRange(f"element {element_index} out of range at vertex {vertex}")
    x = Letter(vertex, element_index)
    if is_identity_letter(spec, x):
        return spec.identity()
    return GPElement(spec, ((x,),))


def induced_morphism(spec_src: GraphProductSpec, spec_tgt: GraphProductSpec,
                     vertex_morphisms: Sequence[VertexMorphism]) -> Callable[[GPElement], GPElement]:
    """Extend one morphism per vertex to a morphism of graph products.

    Letters are mapped one by one and the result is renormalised in the
    target product.
    """
    if spec_src.graph != spec_tgt.graph:
        raise GraphMismatch("source and target products have different graphs")
    if len(vertex_morphisms) != spec_src.vertex_count:
        raise SpecMismatch("need exactly one vertex morphism per vertex")
    for v, phi in enumerate(vertex_morphisms):
        if phi.source != spec_src.monoids[v] or phi.target != spec_tgt.monoids[v]:
            raise SpecMismatch(f"vertex morphism {v} does not match the vertex monoids")
    maps = [phi.map for phi in vertex_morphisms]

    def apply(u: GPElement) -> GPElement:
        if u.spec.digest != spec_src.digest:
            raise SpecMismatch("element is not in the source product")
        return element_of(spec_tgt, [(v, maps[v][e]) for v, e in u.word])

    return apply


def restrict_spec(spec: GraphProductSpec, vertex_subset: Iterable[int]):
    """Sub-product on an induced subgraph, plus the old-to-new vertex map."""
    subset = sorted(set(vertex_subset))
    if not subset:
        raise EmptyVertexSet("cannot restrict to the empty vertex set")
    graph, index_map = induced_subgraph(spec.graph, subset)
    sub = GraphProductSpec(graph, tuple(spec.monoids[v] for v in subset),
                           tuple(spec.vertex_labels[v] for v in subset))
    return sub, index_map


def retract(spec: GraphProductSpec, vertex_subset: Iterable[int]):
    """Return ``(retraction, restricted_spec)``.

    The retraction kills every letter outside the subset and re-indexes
    the rest; composed with :func:`inclusion` it is idempotent.
    """
    sub, index_map = restrict_spec(spec, vertex_subset)

    def apply(u: GPElement) -> GPElement:
        if u.spec.digest != spec.digest:
            raise SpecMismatch("element is not in the source product")
        return element_of(sub, [(index_map[v], e) for v, e in u.word if v in index_map])

    return apply, sub


def inclusion(spec: GraphProductSpec, vertex_subset: Iterable[int]) -> Callable[[GPElement], GPElement]:
    """The embedding of the restricted product back into ``spec``."""
    sub, index_map = restrict_spec(spec, vertex_subset)
    back = {new: old for old, new in index_map.items()}

    def apply(u: GPElement) -> GPElement:
        if u.spec.digest != sub.digest:
            raise SpecMismatch("element is not in the restricted product")
        return element_of(spec, [(back[v], e) for v, e in u.word])

    return apply
