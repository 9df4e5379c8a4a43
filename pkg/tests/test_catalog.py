import json

import pytest

from cytkit import DomainError, catalog, painted

FAMILY_LINES = {
    "SU(n)/SU(n_1)x...xSU(n_k), k odd, sum n_i = n",
    "SU(n)/SU(n_1)x...xSU(n_k), sum n_i <= n, n - sum n_i + k odd",
    "SO(2n)/SU(n_1)x...xSU(n_2k)xSO(2l)",
    "SO(2n)/SU(n_1)x...xSU(n_2k+1)",
    "SO(2n+1)/SU(n_1)x...xSU(n_2k)xSO(2l+1)",
    "Sp(n)/SU(n_1)x...xSU(n_2k)xSp(l)",
    "SU(n)/U(1), n even",
    "worked A-series example",
    "worked C-series example",
}


def test_every_family_line_has_an_instance():
    fams = {e.construction["family"] for e in catalog.ENTRIES if e.kind == "homogeneous"}
    assert fams == FAMILY_LINES


@pytest.mark.parametrize("entry", [e for e in catalog.ENTRIES], ids=lambda e: e.name)
def test_entry_rederives(entry):
    res = catalog.check(entry.name)
    assert res.ok, (res.derived, entry.tags)


@pytest.mark.parametrize("entry", [e for e in catalog.ENTRIES if e.kind == "homogeneous"], ids=lambda e: e.name)
def test_family_instances_have_c1_zero(entry):
    c = entry.construction
    d = painted.PaintedDiagram.parse(c["diagram"])
    blocks = painted.BlockStructure.parse(c["blocks"])
    assert blocks == painted.block_structure(d)
    basis = catalog.torus_basis(c)
    assert painted.c1_vanishes(d, blocks, basis)
    # the Tits fibre T^(#black - dim a) must be even-dimensional
    assert (len(d.black) - len(basis)) % 2 == 0


def test_semisimple_so12_line_is_odd_dimensional():
    d = painted.PaintedDiagram.parse("D6:2,4,6")
    assert painted.quotient_dimension(d, 0) % 2 == 1
    assert painted.quotient_dimension(d, 1) % 2 == 0


def test_classification_cases():
    cases = {e.name: e for e in catalog.ENTRIES if e.kind == "classification"}
    assert sorted(cases) == ["case-i", "case-ii", "case-iii", "case-iv", "case-v", "case-vi"]
    for name, e in cases.items():
        assert e.status
        if e.status == "CYT":
            assert "cyt" in e.tags
    assert "cyt-open-set" in cases["case-ii"].tags
    assert "c1-nonzero" in cases["case-iii"].tags


def test_tampered_tags_are_caught(monkeypatch):
    e = catalog.get("alg-s3")
    bad = catalog.CatalogEntry(e.name, e.kind, e.title, e.construction, e.tags | {"unimodular"})
    assert not catalog.CheckResult(bad, catalog.derive_tags(bad)).ok


def test_unknown_entry():
    with pytest.raises(DomainError):
        catalog.get("nope")


def test_entries_serialize():
    for e in catalog.ENTRIES:
        doc = e.to_json()
        assert json.loads(json.dumps(doc)) == doc
