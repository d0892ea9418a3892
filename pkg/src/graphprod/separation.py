"""Finite separating morphisms for pairs of distinct graph-product elements.

A certificate records everything needed to recompute the separating map
from scratch: optional vertex quotients, the retained vertices, the
block-length bound k, and the two transformations of F_k together with a
state on which they differ.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .action import DEFAULT_STATE_LIMIT, Transformation, enumerate_fk, theta
from .errors import ElementsEqual, GraphProductError, QuotientInsufficient, SpecMismatch
from .monoid import VertexMorphism, validate_morphism
from .normalform import NormalForm, is_normal_form
from .product import GPElement, GraphProductSpec, element_of, induced_morphism, retract


@dataclass(frozen=True)
class Pipeline:
    quotients: tuple[VertexMorphism, ...]
    retained: tuple[int, ...]


@dataclass(frozen=True)
class SeparationCertificate:
    spec_digest: str
    u: NormalForm
    v: NormalForm
    pipeline: Optional[Pipeline]
    k: int
    fk_size: int
    image_u: Transformation
    image_v: Transformation
    witness_state: int = 0


def _separate(spec, u, v, state_limit):
    k = max(u.block_length, v.block_length)
    table = enumerate_fk(spec, k, state_limit)
    return k, len(table), theta(table, u), theta(table, v)


def _check_pair(spec, u, v):
    for w in (u, v):
        if w.spec.digest != spec.digest:
            raise SpecMismatch("element is not in the given graph product")
    if u == v:
        raise ElementsEqual("cannot separate an element from itself")


def separate_finite(spec: GraphProductSpec, u: GPElement, v: GPElement,
                    state_limit: int = DEFAULT_STATE_LIMIT) -> SeparationCertificate:
    """Separate ``u`` and ``v`` by acting on F_k with k the larger block length.

    The identity state is sent to ``u`` and ``v`` respectively, so state 0
    always witnesses the difference.
    """
    _check_pair(spec, u, v)
    k, size, image_u, image_v = _separate(spec, u, v, state_limit)
    assert image_u[0] != image_v[0]
    return SeparationCertificate(spec.digest, u.nf, v.nf, None, k, size, image_u, image_v, 0)


def check_quotients(spec: GraphProductSpec, u: GPElement, v: GPElement,
                    vertex_quotients: Sequence[VertexMorphism]) -> None:
    """Each quotient must keep the letters of u and v apart from each other
    and from the identity at their vertex."""
    if len(vertex_quotients) != spec.vertex_count:
        raise SpecMismatch("need exactly one quotient per vertex")
    relevant: dict[int, set] = {}
    for x in u.word + v.word:
        relevant.setdefault(x.vertex, set()).add(x.element)
    for alpha in sorted(relevant):
        q = vertex_quotients[alpha]
        if q.source != spec.monoids[alpha]:
            raise SpecMismatch(f"quotient at vertex {alpha} has the wrong source monoid")
        m = q.source
        seen = {q.map[m.identity]: m.identity}
        for x in sorted(relevant[alpha]):
            image = q.map[x]
            if image in seen:
                raise QuotientInsufficient(
                    spec.vertex_labels[alpha], m.elements[x], m.elements[seen[image]])
            seen[image] = x


def quotient_spec(spec: GraphProductSpec, vertex_quotients: Sequence[VertexMorphism]) -> GraphProductSpec:
    return GraphProductSpec(spec.graph, tuple(q.target for q in vertex_quotients),
                            spec.vertex_labels)


def run_pipeline(spec: GraphProductSpec, u: GPElement, v: GPElement,
                 vertex_quotients: Sequence[VertexMorphism]):
    """Apply the quotient stage then the retraction stage.

    Returns ``(retained_vertices, restricted_spec, u_image, v_image)``.
    """
    target = quotient_spec(spec, vertex_quotients)
    to_quotient = induced_morphism(spec, target, vertex_quotients)
    u1, v1 = to_quotient(u), to_quotient(v)
    # reduced words stay reduced and inequivalent under a quotient that
    # separates their letters from each other and from the identity
    if len(u1.word) != len(u.word) or len(v1.word) != len(v.word) or u1 == v1:
        raise AssertionError("quotient stage collapsed u and v despite valid quotients")
    retained = tuple(sorted(u.support | v.support))
    to_sub, sub = retract(target, retained)
    return retained, sub, to_sub(u1), to_sub(v1)


def separate_pipeline(spec: GraphProductSpec, u: GPElement, v: GPElement,
                      vertex_quotients: Sequence[VertexMorphism],
                      state_limit: int = DEFAULT_STATE_LIMIT) -> SeparationCertificate:
    """Quotient the vertex monoids, retract onto supp(u) ∪ supp(v), then act on F_k."""
    _check_pair(spec, u, v)
    check_quotients(spec, u, v, vertex_quotients)
    retained, sub, u2, v2 = run_pipeline(spec, u, v, vertex_quotients)
    k, size, image_u, image_v = _separate(sub, u2, v2, state_limit)
    assert image_u[0] != image_v[0]
    return SeparationCertificate(spec.digest, u.nf, v.nf,
                                 Pipeline(tuple(vertex_quotients), retained),
                                 k, size, image_u, image_v, 0)


def verify_certificate(spec: GraphProductSpec, cert: SeparationCertificate,
                       state_limit: int = DEFAULT_STATE_LIMIT) -> bool:
    """Recompute every stage of ``cert`` from scratch; never raises on bad input."""
    try:
        return _verify(spec, cert, state_limit)
    except (GraphProductError, AssertionError, IndexError, KeyError, TypeError, ValueError):
        return False


def _verify(spec, cert, state_limit) -> bool:
    if cert.spec_digest != spec.digest:
        return False
    if not (is_normal_form(spec, cert.u) and is_normal_form(spec, cert.v)):
        return False
    u, v = (element_of(spec, [x for block in nf for x in block]) for nf in (cert.u, cert.v))
    if u == v:
        return False
    if cert.pipeline is None:
        work, u2, v2 = spec, u, v
    else:
        quotients = tuple(validate_morphism(q.source, q.target, q.map)
                          for q in cert.pipeline.quotients)
        check_quotients(spec, u, v, quotients)
        retained, work, u2, v2 = run_pipeline(spec, u, v, quotients)
        if tuple(cert.pipeline.retained) != retained:
            return False
    if cert.k != max(u2.block_length, v2.block_length):
        return False
    table = enumerate_fk(work, cert.k, state_limit)
    if cert.fk_size != len(table):
        return False
    image_u, image_v = theta(table, u2), theta(table, v2)
    if tuple(cert.image_u) != image_u or tuple(cert.image_v) != image_v:
        return False
    w = cert.witness_state
    return 0 <= w < len(table) and image_u[w] != image_v[w]

