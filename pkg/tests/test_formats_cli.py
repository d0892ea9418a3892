import json
import subprocess
import sys

import pytest

from graphprod import load_fixture
from graphprod.cli import run
from graphprod.errors import (
    IdentityLawViolated,
    LoopEdge,
    NotAssociative,
    NotHomomorphic,
    ParseError,
    ValidationError,
)
from graphprod.fixtures import fixture_text
from graphprod.formats import (
    certificate_from_doc,
    certificate_to_doc,
    dumps_machine,
    nf_from_doc,
    nf_to_doc,
    parse_certificate,
    parse_instance,
    parse_quotients,
    parse_word,
)
from graphprod.monoid import VertexMorphism
from graphprod.normalform import lfnf
from graphprod.product import element_of
from graphprod.separation import separate_finite, separate_pipeline

from helpers import L

SEMI = {"elements": ["1", "a"], "table": [["1", "a"], ["a", "a"]]}


def instance(**overrides):
    doc = {"vertices": ["x", "y"], "edges": [], "monoids": {"x": SEMI, "y": SEMI}}
    doc.update(overrides)
    return json.dumps(doc)


def test_parse_fix_a():
    spec = parse_instance(fixture_text("FIX-A"))
    assert spec.vertex_count == 1
    assert spec.monoids[0].table == ((0, 1), (1, 0))


def test_parse_edges_deduplicated():
    spec = parse_instance(instance(edges=[["x", "y"], ["y", "x"], ["x", "y"]]))
    assert spec.graph.edges() == [(0, 1)]


def test_loop_rejected():
    with pytest.raises(LoopEdge) as info:
        parse_instance(instance(edges=[["x", "x"]]))
    assert isinstance(info.value, ValidationError)


def test_non_associative_table_names_triple():
    # pp = q, pq = p, qp = q: (pp)p = qp = q but p(pp) = pq = p, so (p, p, p) fails first
    bad = {"elements": ["1", "p", "q"],
           "table": [["1", "p", "q"], ["p", "q", "p"], ["q", "q", "p"]]}
    with pytest.raises(NotAssociative) as info:
        parse_instance(instance(monoids={"x": bad, "y": SEMI}))
    assert info.value.triple == (1, 1, 1)
    assert "'x'" in str(info.value)


def test_identity_law_checked():
    bad = {"elements": ["1", "a"], "table": [["a", "a"], ["a", "a"]]}
    with pytest.raises(IdentityLawViolated):
        parse_instance(instance(monoids={"x": bad, "y": SEMI}))


@pytest.mark.parametrize("text, line, column", [
    ('{"vertices": ["x"],\n  "edges": [,]}', 2, 13),
    ("", 1, 1),
    ('{"vertices": ["x"]', 1, 19),
])
def test_json_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert (info.value.line, info.value.column) == (line, column)


@pytest.mark.parametrize("doc", [
    [],
    {"vertices": [], "edges": [], "monoids": {}},
    {"vertices": ["x"], "edges": [], "monoids": {"x": SEMI}, "extra": 1},
    {"vertices": ["x"], "edges": "none", "monoids": {"x": SEMI}},
    {"vertices": ["x"], "edges": [], "monoids": {"x": {"elements": ["1"], "table": "1"}}},
])
def test_structural_errors(doc):
    with pytest.raises(ParseError):
        parse_instance(json.dumps(doc))


@pytest.mark.parametrize("doc, exc", [
    ({"vertices": ["x", "x"], "edges": [], "monoids": {"x": SEMI}}, ValidationError),
    ({"vertices": ["x:y"], "edges": [], "monoids": {"x:y": SEMI}}, ValidationError),
    ({"vertices": ["x"], "edges": [["x", "z"]], "monoids": {"x": SEMI}}, ValidationError),
    ({"vertices": ["x"], "edges": [], "monoids": {}}, ValidationError),
    ({"vertices": ["x"], "edges": [], "monoids": {"x": {"elements": ["1", "1"], "table": []}}},
     ValidationError),
    ({"vertices": ["x"], "edges": [], "monoids": {"x": {"elements": ["1", "a"],
                                                          "table": [["1", "b"], ["a", "a"]]}}},
     ValidationError),
])
def test_validation_errors(doc, exc):
    with pytest.raises(exc):
        parse_instance(json.dumps(doc))


def test_parse_word():
    spec = load_fixture("FIX-C")
    assert parse_word(spec, "0:a 2:b 1:c") == (L(0, 1), L(2, 1), L(1, 1))
    assert parse_word(spec, "[0:a 1:c][2:b]") == (L(0, 1), L(1, 1), L(2, 1))
    assert parse_word(spec, "ε") == ()
    assert parse_word(spec, "0:1") == (L(0, 0),)
    for bad in ("0", "3:a", "0:b", "0a"):
        with pytest.raises(ValidationError):
            parse_word(spec, bad)


def test_normal_form_doc_round_trip():
    spec = load_fixture("FIX-C")
    nf = lfnf(spec, parse_word(spec, "0:a 2:b 1:c"))
    doc = nf_to_doc(spec, nf)
    assert doc == [[["0", "a"], ["1", "c"]], [["2", "b"]]]
    assert nf_from_doc(spec, json.loads(json.dumps(doc))) == nf


def test_certificate_round_trip():
    spec = load_fixture("FIX-B")
    u, v = element_of(spec, (L(0, 1), L(1, 1))), element_of(spec, (L(1, 1),))
    identities = [VertexMorphism.identity(m) for m in spec.monoids]
    for cert in (separate_finite(spec, u, v), separate_pipeline(spec, u, v, identities)):
        doc = json.loads(dumps_machine(certificate_to_doc(spec, cert)))
        assert certificate_from_doc(spec, doc) == cert
    with pytest.raises(ParseError):
        parse_certificate(spec, json.dumps({"format": "other"}))


def test_quotient_documents():
    spec = load_fixture("FIX-B")
    doc = {"quotients": {"0": {"elements": ["1"], "table": [["1"]], "map": {"1": "1", "a": "1"}}}}
    qs = parse_quotients(spec, json.dumps(doc))
    assert qs[0].map == (0, 0) and qs[1].map == (0, 1)
    doc["quotients"]["7"] = doc["quotients"]["0"]
    with pytest.raises(ValidationError):
        parse_quotients(spec, json.dumps(doc))
    # a non-homomorphic map into Z2
    z2 = {"elements": ["1", "g"], "table": [["1", "g"], ["g", "1"]], "map": {"1": "1", "a": "g"}}
    with pytest.raises(NotHomomorphic):
        parse_quotients(spec, json.dumps({"quotients": {"0": z2}}))
    dup = {"elements": ["1", "1"], "table": [["1", "1"], ["1", "1"]], "map": {"1": "1", "a": "1"}}
    with pytest.raises(ValidationError):
        parse_quotients(spec, json.dumps({"quotients": {"0": dup}}))


def test_dumps_machine_is_canonical():
    assert dumps_machine({"b": [1, 2], "a": "ε"}) == '{"a":"\\u03b5","b":[1,2]}\n'


# command line

def test_cli_examples():
    assert run(["normalize", "FIX-C", "0:a", "2:b", "1:c"]) == (0, "[0:a 1:c][2:b]\n")
    assert run(["equal", "FIX-D", "0:a 1:b", "1:b 0:a"]) == (0, "true\n")
    assert run(["blocklen", "FIX-A"]) == (0, "0\n")
    assert run(["equal", "FIX-B", "0:a 1:b", "1:b 0:a"]) == (1, "false\n")
    assert run(["mul", "FIX-A", "0:g", "0:g"]) == (0, "ε\n")
    assert run(["oracle-equal", "FIX-D", "0:a 1:b", "1:b 0:a"]) == (0, "true\n")
    assert run(["oracle-equal", "FIX-B", "0:a 1:b", "1:b 0:a"]) == (1, "false\n")


def test_cli_identity_letters_accepted():
    assert run(["normalize", "FIX-B", "0:1", "1:b", "1:1"]) == (0, "[1:b]\n")


def test_cli_machine_outputs():
    code, out = run(["normalize", "FIX-C", "0:a 2:b 1:c", "--format", "machine"])
    assert code == 0
    assert out == '{"block_length":2,"normal_form":[[["0","a"],["1","c"]],[["2","b"]]]}\n'
    code, out = run(["enumerate", "FIX-D", "--k", "1", "--format", "machine"])
    assert json.loads(out)["size"] == 4
    code, out = run(["check", "FIX-E", "--format", "machine"])
    assert json.loads(out)["edges"] == 3


@pytest.mark.parametrize("word", ["0:a 2:b 1:c", "1:c 0:a 1:c 2:b 0:a", "2:b 2:b", "ε"])
def test_normalize_is_a_fixed_point(word):
    _, once = run(["normalize", "FIX-C", word])
    _, twice = run(["normalize", "FIX-C", once.strip()])
    assert once == twice


def test_enumerate_text():
    code, out = run(["enumerate", "FIX-B", "--k", "1"])
    assert code == 0
    assert out.splitlines() == ["# F_1: 3 states", "0\tε", "1\t[0:a]", "2\t[1:b]"]


def test_separate_and_verify_round_trip(tmp_path):
    code, out = run(["separate", "FIX-B", "0:a", "1:b", "--format", "machine"])
    assert code == 0
    cert_path = tmp_path / "cert.json"
    cert_path.write_text(out)
    assert run(["verify", "FIX-B", str(cert_path)]) == (0, "valid\n")

    doc = json.loads(out)
    doc["image_v"] = doc["image_u"]
    cert_path.write_text(json.dumps(doc))
    assert run(["verify", "FIX-B", str(cert_path)]) == (2, "invalid\n")
    # a certificate for another instance is rejected, not an input error
    cert_path.write_text(out)
    assert run(["verify", "FIX-D", str(cert_path)])[0] == 2


def test_separate_with_quotients(tmp_path):
    q = tmp_path / "q.json"
    q.write_text(json.dumps({"quotients": {"0": {
        "elements": ["1", "e", "0"],
        "table": [["1", "e", "0"], ["e", "e", "0"], ["0", "0", "0"]],
        "map": {"1": "1", "a": "e"}}}}))
    code, out = run(["separate", "FIX-B", "0:a 1:b", "1:b 0:a", "--quotients", str(q)])
    assert code == 0
    cert = tmp_path / "c.json"
    cert.write_text(out)
    assert run(["verify", "FIX-B", str(cert)]) == (0, "valid\n")

    q.write_text(json.dumps({"quotients": {"0": {
        "elements": ["1"], "table": [["1"]], "map": {"1": "1", "a": "1"}}}}))
    assert run(["separate", "FIX-B", "0:a", "1:b", "--quotients", str(q)])[0] == 3


def test_instance_and_word_files(tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(instance(edges=[["x", "y"]]))
    word = tmp_path / "w.txt"
    word.write_text("x:a\ny:a\n")
    assert run(["normalize", str(inst), f"@{word}"]) == (0, "[x:a y:a]\n")
    assert run(["equal", str(inst), f"@{word}", "y:a x:a"]) == (0, "true\n")


@pytest.mark.parametrize("argv, code", [
    (["normalize", "FIX-C", "0:z"], 3),
    (["normalize", "no-such-file.json"], 3),
    (["bogus", "FIX-A"], 3),
    (["enumerate", "FIX-A"], 3),
    (["enumerate", "FIX-A", "--k", "0"], 3),
    (["equal", "FIX-A", "0:g", "0:g"], 0),
    (["separate", "FIX-A", "0:g", "0:g 0:g 0:g"], 3),
    (["verify", "FIX-A", "missing.json"], 3),
    (["enumerate", "FIX-C", "--k", "3", "--limit", "4"], 4),
    (["oracle-equal", "FIX-A", "0:g", "0:g 0:g 0:g", "--max-len", "2"], 4),
    (["oracle-equal", "FIX-A", "", "0:g 0:g", "--max-visited", "1"], 4),
    (["separate", "FIX-C", "0:a 1:c 2:b", "2:b 1:c 0:a", "--limit", "3"], 4),
])
def test_exit_codes(argv, code):
    assert run(argv)[0] == code


def test_bad_instance_exit_code(tmp_path):
    inst = tmp_path / "loop.json"
    inst.write_text(instance(edges=[["x", "x"]]))
    assert run(["check", str(inst)])[0] == 3
    inst.write_text("{")
    assert run(["check", str(inst)])[0] == 3


def test_entry_point_subprocess(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "graphprod", "equal", "FIX-B", "0:a 1:b", "1:b 0:a"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == "false\n"
    proc = subprocess.run([sys.executable, "-m", "graphprod", "check", "-"],
                          input=fixture_text("FIX-D"), capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("ok: 2 vertices, 1 edges")
    proc = subprocess.run([sys.executable, "-m", "graphprod", "normalize", "FIX-C", "9:a"],
                          capture_output=True, text=True)
    assert proc.returncode == 3 and proc.stdout == "" and "error" in proc.stderr
