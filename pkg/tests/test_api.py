"""HTTP service endpoints: happy paths, validation, and determinism."""

import fermicode.corpus as corpus

BAD_MAP_ROWS = {
    # identity with a non-self-conjugate monomial planted in the pairing block
    "rows": [
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["x", "0", "1", "0"],
        ["0", "0", "0", "1"],
    ]
}


def test_health(api_client):
    doc = api_client.get("/health").json()
    assert doc["status"] == "ok"
    assert doc["version"]


def test_automorphism_catalog(api_client):
    doc = api_client.get("/automorphisms").json()
    assert "I" in doc["named_maps"]
    assert {f"A{k}" for k in range(1, 17)} <= set(doc["named_maps"])
    assert len(doc["bundled_codes"]) == 8
    exprs = {row["expr"] for row in doc["bundled_codes"]}
    assert "A4*A7" in exprs and "A1*A11*A5*A14*A9" in exprs


def test_automorphism_detail_and_404(api_client):
    doc = api_client.get("/automorphisms/A4").json()
    assert doc["is_automorphism"] is True
    assert len(doc["rows"]) == 4 and len(doc["matrix"]) == 4
    assert api_client.get("/automorphisms/A99").status_code == 404


def test_verify_accepts_and_rejects(api_client):
    good = api_client.post("/verify", json={"map": {"expr": "A4*A7"}}).json()
    assert good["is_automorphism"] is True
    assert set(good["identities"]) == {
        "pairing_identity",
        "x_sector_symmetry",
        "z_sector_symmetry",
    }
    bad = api_client.post("/verify", json={"map": BAD_MAP_ROWS}).json()
    assert bad["is_automorphism"] is False
    assert bad["identities"]["x_sector_symmetry"] is False


def test_map_spec_must_be_exactly_one_form(api_client):
    r = api_client.post("/verify", json={"map": {"expr": "A1", "factors": [1]}})
    assert r.status_code == 422
    r = api_client.post("/verify", json={"map": {}})
    assert r.status_code == 422


def test_unknown_name_is_a_client_error(api_client):
    r = api_client.post("/verify", json={"map": {"expr": "A99"}})
    assert r.status_code == 400


def test_compose_matches_expression_parsing(api_client):
    via_parts = api_client.post(
        "/compose", json={"maps": [{"expr": "A4"}, {"expr": "A7"}]}
    ).json()
    via_expr = api_client.post("/compose", json={"maps": [{"expr": "A4*A7"}]}).json()
    assert via_parts == via_expr
    assert via_parts["map"]["is_automorphism"] is True


def test_apply_reproduces_frozen_images(api_client):
    doc = corpus.load("transformed_vectors.json")
    rec = next(r for r in doc["codes"] if r["expr"] == "A4*A7")
    im = next(i for i in rec["images"] if i["source"] == "flux")
    got = api_client.post(
        "/apply", json={"map": {"expr": "A4*A7"}, "vector": {"name": "flux"}}
    ).json()["vector"]
    assert got["text"] == im["text"]
    assert got["weight"] == im["weight"]
    assert {k: got[k] for k in ("a1", "a2", "c1", "c2")} == im["vector"]


def test_weights_endpoint(api_client):
    doc = api_client.post("/weights", json={"map": {"expr": "I"}}).json()
    assert doc["hopping"] == [2, 6]
    assert doc["occupation"] == 4
    assert doc["stabilizer"] == 6
    labels = {t["label"] for t in doc["terms"]}
    assert {"hop_h", "hop_v", "flux"} <= labels
    assert any("*" in label for label in labels)  # composite occupation terms


def test_weights_rejects_non_automorphism(api_client):
    r = api_client.post("/weights", json={"map": BAD_MAP_ROWS})
    assert r.status_code == 400


def test_syndrome_detects_and_classifies(api_client):
    # single Z on the horizontal edge at the origin of the base code
    detected = api_client.post(
        "/syndrome",
        json={"code": {"expr": "I"}, "error": {"c1": "1"}},
    ).json()
    assert detected["commutes"] is False
    assert detected["is_logical"] is None
    assert sorted(map(tuple, detected["syndrome"])) == [(0, 0), (1, 0)]
    # the stabilizer itself commutes and acts trivially
    trivial = api_client.post(
        "/syndrome", json={"code": {"expr": "I"}, "error": {"name": "stab"}}
    ).json()
    assert trivial["commutes"] is True
    assert trivial["syndrome"] == [] and trivial["is_logical"] is False
    # a logical commutes but acts on the code space
    logical = api_client.post(
        "/syndrome", json={"code": {"expr": "I"}, "error": {"name": "hop_h"}}
    ).json()
    assert logical["commutes"] is True and logical["is_logical"] is True


def test_distance_endpoint_certifies_exactly(api_client):
    doc = api_client.post(
        "/distance", json={"code": {"factors": [1]}, "max_weight": 4}
    ).json()
    assert doc["kind"] == "exact"
    assert doc["distance"] == 3
    assert doc["witness"]["weight"] == 3
    assert doc["capped"] is None
    assert doc["level_sizes"][0] == 6


def test_distance_degrades_to_lower_bound(api_client):
    doc = api_client.post(
        "/distance", json={"code": {"expr": "A4*A7"}, "max_weight": 3}
    ).json()
    assert doc["kind"] == "lower_bound"
    assert doc["distance"] == 3
    assert doc["witness"] is None


def test_search_shortlist_and_skip(api_client):
    body = {"target_distance": 4, "max_len": 2, "confirm": False}
    doc = api_client.post("/search", json=body).json()
    assert doc["count"] == len(doc["hits"]) > 0
    assert all(h["result"] is None for h in doc["hits"])
    assert {tuple(h["factors"]) for h in doc["hits"]} >= {(4, 7)}
    assert len(doc["examined"]) >= doc["count"]

    skipped = api_client.post(
        "/search", json={**body, "skip_factors": [[4, 7]]}
    ).json()
    assert (4, 7) not in {tuple(h["factors"]) for h in skipped["hits"]}
    assert (4, 7) not in {tuple(h["factors"]) for h in skipped["examined"]}


def test_search_confirmed_hits_certify_target(api_client):
    doc = api_client.post(
        "/search",
        json={"target_distance": 4, "max_len": 2, "confirm": True, "limit": 1},
    ).json()
    assert doc["count"] == 1
    hit = doc["hits"][0]
    assert hit["result"]["kind"] == "exact"
    assert hit["result"]["distance"] >= 4


def test_decode_check_reports_failures_honestly(api_client):
    doc = api_client.post(
        "/decode-check", json={"code": {"expr": "I"}, "L": 4, "t": 1}
    ).json()
    assert doc["qubits"] == 32
    assert doc["stabilizer_rank"] == 15
    assert doc["correction"]["errors_checked"] == 96
    assert doc["correction"]["correctable"] is False
    assert doc["correction"]["failures"]
    assert doc["detection"] is None


def test_decode_check_enforces_margin(api_client):
    r = api_client.post("/decode-check", json={"code": {"expr": "A1"}, "L": 4})
    assert r.status_code == 400


def test_export_with_torus(api_client):
    doc = api_client.post(
        "/export", json={"code": {"expr": "A1"}, "L": 6, "include_stats": True}
    ).json()
    assert doc["expr"] == "A1"
    assert doc["torus"]["qubits"] == 72
    assert doc["torus"]["stabilizer_rank"] == 35
    assert "weight_stats" in doc


def test_render_both_formats(api_client):
    body = {"vector": {"name": "stab"}, "format": "ascii", "marks": [[0, 0]]}
    doc = api_client.post("/render", json=body).json()
    assert doc["format"] == "ascii" and "(*)" in doc["content"]
    doc = api_client.post("/render", json={**body, "format": "svg"}).json()
    assert doc["content"].startswith("<svg")


def test_table1_is_deterministic_and_matches_corpus(api_client):
    first = api_client.get("/table1")
    second = api_client.get("/table1")
    assert first.content == second.content
    rows = {r["expr"]: r for r in first.json()["rows"]}
    frozen = corpus.load("weight_table.json")["rows"]
    assert len(rows) == len(frozen) == 8
    for ref in frozen:
        row = rows[ref["expr"]]
        assert row["hopping"] == ref["hopping"]
        assert row["occupation"] == ref["occupation"]
        assert row["stabilizer"] == ref["stabilizer"]
        assert row["distance"] == ref["distance"]


def test_table2_fast_tier_matches(api_client):
    first = api_client.get("/table2", params={"tier": "fast"})
    assert first.content == api_client.get("/table2", params={"tier": "fast"}).content
    doc = first.json()
    assert doc["tier"] == "fast"
    assert [r["claimed"] for r in doc["rows"]] == [2, 3, 4, 4, 5]
    assert all(r["match"] and r["kind"] == "exact" for r in doc["rows"])
    assert api_client.get("/table2", params={"tier": "bogus"}).status_code == 422
