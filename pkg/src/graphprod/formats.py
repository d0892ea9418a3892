"""JSON documents for instances, vertex quotients and certificates, plus word syntax.

Instance document::

    {
      "vertices": ["0", "1"],
      "edges": [["0", "1"]],
      "monoids": {
        "0": {"elements": ["1", "a"], "table": [["1", "a"], ["a", "a"]]},
        "1": {"elements": ["1", "b"], "table": [["1", "b"], ["b", "b"]]}
      }
    }

The first listed element of each monoid is its identity, and ``table[i][j]``
is the label of ``elements[i] * elements[j]``. Edges are unordered;
repeats collapse, loops are rejected.

Words are whitespace-separated ``vertex:element`` tokens. Square brackets
are ignored and ``ε`` stands for the empty word, so printed normal forms
read back as words.
"""
from __future__ import annotations

import json
from typing import Any, Optional

from .errors import InvalidLetter, ParseError, ValidationError
from .graph import CommutationGraph
from .monoid import FiniteMonoid, VertexMorphism, validate_monoid, validate_morphism
from .normalform import Letter, NormalForm
from .product import GraphProductSpec
from .separation import Pipeline, SeparationCertificate

CERTIFICATE_FORMAT = "graphprod-certificate/1"


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise ParseError(message)


def _is_str_list(x) -> bool:
    return isinstance(x, list) and all(isinstance(s, str) for s in x)


def monoid_from_doc(doc: Any, where: str) -> FiniteMonoid:
    _expect(isinstance(doc, dict), f"{where}: expected an object")
    elements, table = doc.get("elements"), doc.get("table")
    _expect(_is_str_list(elements) and elements, f"{where}: 'elements' must be a non-empty list of strings")
    _expect(isinstance(table, list) and all(_is_str_list(r) for r in table),
            f"{where}: 'table' must be a list of lists of element labels")
    if len(set(elements)) != len(elements):
        raise ValidationError(f"{where}: duplicate element labels")
    pos = {label: i for i, label in enumerate(elements)}
    rows = []
    for r, row in enumerate(table):
        out = []
        for c, label in enumerate(row):
            if label not in pos:
                raise ValidationError(f"{where}: table entry ({r}, {c}) = {label!r} is not an element")
            out.append(pos[label])
        rows.append(out)
    try:
        return validate_monoid(rows, 0, elements)
    except ValidationError as exc:
        raise type(exc)(*_reraise_args(exc, where)) from None


def _reraise_args(exc, where):
    # keep the structured fields of the validator's exception, prefix the message
    msg = f"{where}: {exc}"
    if hasattr(exc, "triple"):
        return (*exc.triple, msg)
    if hasattr(exc, "pair"):
        return (*exc.pair, msg)
    if hasattr(exc, "j"):
        return (exc.j, msg)
    return (msg,)


def monoid_to_doc(m: FiniteMonoid) -> dict:
    order = [m.identity] + [i for i in range(m.size) if i != m.identity]
    return {
        "elements": [m.elements[i] for i in order],
        "table": [[m.elements[m.table[i][j]] for j in order] for i in order],
    }


def parse_instance(text: str) -> GraphProductSpec:
    return instance_from_doc(_load_json(text))


def instance_from_doc(doc: Any) -> GraphProductSpec:
    _expect(isinstance(doc, dict), "instance must be an object")
    unknown = set(doc) - {"vertices", "edges", "monoids"}
    _expect(not unknown, f"unknown fields: {sorted(unknown)}")
    vertices = doc.get("vertices")
    _expect(_is_str_list(vertices) and vertices, "'vertices' must be a non-empty list of strings")
    if len(set(vertices)) != len(vertices):
        raise ValidationError("duplicate vertex labels")
    if any(":" in v or not v or v.split() != [v] for v in vertices):
        raise ValidationError("vertex labels must be non-empty and contain no ':' or whitespace")
    vid = {v: i for i, v in enumerate(vertices)}
    edges = doc.get("edges", [])
    _expect(isinstance(edges, list) and all(_is_str_list(e) and len(e) == 2 for e in edges),
            "'edges' must be a list of label pairs")
    pairs = []
    for a, b in edges:
        for x in (a, b):
            if x not in vid:
                raise ValidationError(f"edge [{a!r}, {b!r}] mentions unknown vertex {x!r}")
        pairs.append((vid[a], vid[b]))
    graph = CommutationGraph.from_edges(len(vertices), pairs)
    monoids = doc.get("monoids")
    _expect(isinstance(monoids, dict), "'monoids' must be an object keyed by vertex label")
    if set(monoids) != set(vertices):
        raise ValidationError("'monoids' must have exactly one entry per vertex")
    ms = tuple(monoid_from_doc(monoids[v], f"monoid {v!r}") for v in vertices)
    return GraphProductSpec(graph, ms, tuple(vertices))


def instance_to_doc(spec: GraphProductSpec) -> dict:
    labels = spec.vertex_labels
    return {
        "vertices": list(labels),
        "edges": [[labels[a], labels[b]] for a, b in spec.graph.edges()],
        "monoids": {labels[v]: monoid_to_doc(m) for v, m in enumerate(spec.monoids)},
    }


def parse_word(spec: GraphProductSpec, text: str) -> tuple[Letter, ...]:
    vid = {label: i for i, label in enumerate(spec.vertex_labels)}
    letters = []
    for token in text.replace("[", " ").replace("]", " ").split():
        if token == "ε":
            continue
        vertex, sep, element = token.partition(":")
        if not sep or vertex not in vid:
            raise InvalidLetter(f"bad letter {token!r}: expected vertex:element")
        v = vid[vertex]
        try:
            letters.append(Letter(v, spec.monoids[v].index(element)))
        except KeyError:
            raise InvalidLetter(f"bad letter {token!r}: no element {element!r} at vertex {vertex!r}") from None
    return tuple(letters)


def letter_to_doc(spec: GraphProductSpec, x) -> list:
    v, e = x
    return [spec.vertex_labels[v], spec.monoids[v].elements[e]]


def nf_to_doc(spec: GraphProductSpec, nf: NormalForm) -> list:
    return [[letter_to_doc(spec, x) for x in block] for block in nf]


def _letter_from_doc(spec, pair) -> Letter:
    _expect(_is_str_list(pair) and len(pair) == 2, f"letter {pair!r} must be a [vertex, element] pair")
    (x,) = parse_word(spec, f"{pair[0]}:{pair[1]}")
    return x


def nf_from_doc(spec: GraphProductSpec, doc: Any) -> NormalForm:
    _expect(isinstance(doc, list) and all(isinstance(b, list) for b in doc),
            "normal form must be a list of blocks")
    return tuple(tuple(_letter_from_doc(spec, pair) for pair in block) for block in doc)


def quotient_to_doc(q: VertexMorphism) -> dict:
    doc = monoid_to_doc(q.target)
    doc["map"] = {q.source.elements[i]: q.target.elements[q.map[i]] for i in range(q.source.size)}
    return doc


def quotient_from_doc(source: FiniteMonoid, doc: Any, where: str) -> VertexMorphism:
    target = monoid_from_doc(doc, where)
    mapping = doc.get("map")
    _expect(isinstance(mapping, dict), f"{where}: 'map' must be an object")
    if set(mapping) != set(source.elements):
        raise ValidationError(f"{where}: 'map' must list every source element exactly once")
    try:
        images = [target.index(mapping[label]) for label in source.elements]
    except (KeyError, TypeError):
        raise ValidationError(f"{where}: 'map' sends an element outside the target") from None
    try:
        return validate_morphism(source, target, images)
    except ValidationError as exc:
        raise type(exc)(*_reraise_args(exc, where)) from None


def quotients_from_doc(spec: GraphProductSpec, doc: Any) -> tuple[VertexMorphism, ...]:
    """Read ``{"quotients": {vertex: {...}}}``; unlisted vertices get the identity."""
    _expect(isinstance(doc, dict) and isinstance(doc.get("quotients"), dict),
            "quotient document must have a 'quotients' object")
    given = doc["quotients"]
    unknown = set(given) - set(spec.vertex_labels)
    if unknown:
        raise ValidationError(f"quotients for unknown vertices: {sorted(unknown)}")
    out = []
    for v, label in enumerate(spec.vertex_labels):
        m = spec.monoids[v]
        if label in given:
            out.append(quotient_from_doc(m, given[label], f"quotient {label!r}"))
        else:
            out.append(VertexMorphism.identity(m))
    return tuple(out)


def parse_quotients(spec: GraphProductSpec, text: str) -> tuple[VertexMorphism, ...]:
    return quotients_from_doc(spec, _load_json(text))


def certificate_to_doc(spec: GraphProductSpec, cert: SeparationCertificate) -> dict:
    labels = spec.vertex_labels
    pipeline = None
    if cert.pipeline is not None:
        pipeline = {
            "quotients": {labels[v]: quotient_to_doc(q) for v, q in enumerate(cert.pipeline.quotients)},
            "retained": [labels[v] for v in cert.pipeline.retained],
        }
    return {
        "format": CERTIFICATE_FORMAT,
        "spec": cert.spec_digest,
        "u": nf_to_doc(spec, cert.u),
        "v": nf_to_doc(spec, cert.v),
        "pipeline": pipeline,
        "k": cert.k,
        "fk_size": cert.fk_size,
        "image_u": list(cert.image_u),
        "image_v": list(cert.image_v),
        "witness_state": cert.witness_state,
    }


def certificate_from_doc(spec: GraphProductSpec, doc: Any) -> SeparationCertificate:
    _expect(isinstance(doc, dict) and doc.get("format") == CERTIFICATE_FORMAT,
            f"not a {CERTIFICATE_FORMAT} document")
    for key in ("k", "fk_size", "witness_state"):
        _expect(isinstance(doc.get(key), int), f"'{key}' must be an integer")
    for key in ("image_u", "image_v"):
        _expect(isinstance(doc.get(key), list) and all(isinstance(i, int) for i in doc[key]),
                f"'{key}' must be a list of state indices")
    _expect(isinstance(doc.get("spec"), str), "'spec' must be a digest string")
    pipeline: Optional[Pipeline] = None
    if doc.get("pipeline") is not None:
        p = doc["pipeline"]
        _expect(isinstance(p, dict) and _is_str_list(p.get("retained")), "malformed 'pipeline'")
        quotients = quotients_from_doc(spec, {"quotients": p.get("quotients")})
        vid = {label: i for i, label in enumerate(spec.vertex_labels)}
        _expect(all(r in vid for r in p["retained"]), "'retained' mentions unknown vertices")
        pipeline = Pipeline(quotients, tuple(vid[r] for r in p["retained"]))
    return SeparationCertificate(
        doc["spec"], nf_from_doc(spec, doc.get("u")), nf_from_doc(spec, doc.get("v")),
        pipeline, doc["k"], doc["fk_size"], tuple(doc["image_u"]), tuple(doc["image_v"]),
        doc["witness_state"])


def parse_certificate(spec: GraphProductSpec, text: str) -> SeparationCertificate:
    return certificate_from_doc(spec, _load_json(text))


def dumps_machine(obj: Any) -> str:
    """Canonical compact JSON: sorted keys, ASCII only, one trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"
