import pytest
from fastapi.testclient import TestClient

from braidsep import schemas, service
from braidsep.braid import parse_braid, trace_pair
from braidsep.family import family_for_type, make_representation
from braidsep.field import parse_scalar
from braidsep.linalg import ExactMatrix


@pytest.fixture(scope="module")
def client():
    return TestClient(service.app)


FULL_6B = {
    "type_code": "6b",
    "params": {"a": "1", "b": "-1", "c": "1", "d": "-1", "e": "1", "f": "-1", "g": "1"},
    "lambda": "-1",
}


def test_health(client):
    reply = client.get("/health")
    assert reply.status_code == 200
    assert reply.json() == {"status": "ok"}


def test_components_endpoint(client):
    reply = client.post("/components", json={"n": 10})
    assert reply.status_code == 200
    payload = reply.json()
    assert [row["name"] for row in payload["rows"]] == [
        "10a", "10b", "10c", "10d", "10e", "10f",
    ]
    assert [row["dim_b3"] for row in payload["rows"]] == [10, 14, 16, 18, 14, 16]


def test_components_rejects_nonpositive_n(client):
    assert client.post("/components", json={"n": 0}).status_code == 422


def test_components_unnamed_sizes_have_no_labels(client):
    payload = client.post("/components", json={"n": 12}).json()
    assert payload["rows"]
    assert all(row["name"] is None for row in payload["rows"])


def test_family_endpoint_roundtrips_matrices(client):
    reply = client.post("/family", json=FULL_6B)
    assert reply.status_code == 200
    payload = reply.json()
    assert payload["source"] == "printed"
    assert payload["code"] == "1_1A111"
    assert payload["lambda"] == "-1"
    # the wire matrices re-parse exactly and still satisfy the braid relation
    s1 = ExactMatrix.from_json_dict(payload["sigma1"])
    s2 = ExactMatrix.from_json_dict(payload["sigma2"])
    assert s1 @ s2 @ s1 == s2 @ s1 @ s2
    rep = make_representation(
        ExactMatrix.from_json_dict(payload["b"]),
        family_for_type("6b").family.alpha,
        parse_scalar(payload["lambda"]),
    )
    assert rep.sigma1 == s1 and rep.sigma2 == s2
    fwd, rev = trace_pair(parse_braid("s1^-1 s2^2 s1^-2 s2"), rep)
    assert fwd == parse_scalar("-228+648r")
    assert rev == parse_scalar("-876-648r")


def test_family_random_draw_is_seeded(client):
    body = {"alpha": [1, 1, 1, 1, 1, 1], "random": True, "seed": 1}
    first = client.post("/family", json=body).json()
    second = client.post("/family", json=body).json()
    assert first == second
    assert len(first["free_params"]) == 12
    moved = client.post("/family", json={**body, "seed": 2}).json()
    assert moved["bindings"] != first["bindings"]


@pytest.mark.parametrize(
    "body, fragment",
    [
        ({"params": {}, "lambda": "1"}, "exactly one"),
        ({"type_code": "6b", "alpha": [1, 1, 1, 1, 1, 1], "lambda": "1"}, "exactly one"),
        ({"type_code": "6b"}, "lambda is required"),
        ({"type_code": "6b", "lambda": "-1"}, "unbound parameters"),
        ({"type_code": "6b", "random": True, "lambda": "-1"}, "do not bind"),
        ({"type_code": "zz", "lambda": "1"}, "unknown component type"),
        ({"alpha": [9, 1, 1, 1, 1, 1], "lambda": "1"}, "not a simple root"),
        ({"type_code": "6b", "params": FULL_6B["params"], "lambda": "0"}, "nonzero"),
    ],
)
def test_family_domain_errors_are_422(client, body, fragment):
    reply = client.post("/family", json=body)
    assert reply.status_code == 422
    assert fragment in reply.json()["detail"]


def test_family_rejects_short_alpha(client):
    reply = client.post("/family", json={"alpha": [1, 1, 1], "lambda": "1"})
    assert reply.status_code == 422


def test_separate_endpoint_witness_replays(client):
    body = {
        "braid": "s1^-2 s2 s1^-1 s2 s1^-1 s2^2",
        "component": "6b",
        "trials": 50,
        "seed": 3,
    }
    payload = client.post("/separate", json=body).json()
    assert payload["status"] == "SEPARATED"
    witness = payload["witness"]
    family = family_for_type("6b").family
    bindings = {k: parse_scalar(v) for k, v in witness["bindings"].items()}
    rep = family.representation(bindings, parse_scalar(witness["lambda"]))
    fwd, rev = trace_pair(parse_braid(payload["braid"]), rep)
    assert fwd == parse_scalar(witness["trace_word"])
    assert rev == parse_scalar(witness["trace_reversed"])
    assert fwd != rev


def test_separate_palindrome_is_probable(client):
    body = {"braid": "s1", "component": "6b", "trials": 3, "seed": 0}
    payload = client.post("/separate", json=body).json()
    assert payload["status"] == "INDISTINGUISHABLE_PROBABLE"
    assert payload["witness"] is None
    assert "Schwartz-Zippel" in payload["explanation"]


@pytest.mark.parametrize(
    "body, fragment",
    [
        ({"braid": "s3", "component": "6b"}, "bad token"),
        ({"braid": "s1", "component": "nope"}, "unknown component type"),
        ({"braid": "s1", "component": "6b", "trials": 0}, "trials"),
    ],
)
def test_separate_domain_errors_are_422(client, body, fragment):
    reply = client.post("/separate", json=body)
    assert reply.status_code == 422
    assert fragment in str(reply.json()["detail"])


def test_sweep_endpoint_with_inline_entries(client):
    body = {
        "component": "6b",
        "trials": 3,
        "seed": 5,
        "knots": [
            {"name": "8_17", "braid": "s1^-2 s2 s1^-1 s2 s1^-1 s2^2", "crossings": 8},
            {"name": "3_1", "braid": "s1^3 s2", "crossings": 3},
        ],
    }
    payload = client.post("/knots/sweep", json=body).json()
    assert [row["name"] for row in payload["rows"]] == ["8_17", "3_1"]
    assert [row["status"] for row in payload["rows"]] == [
        "SEPARATED",
        "INDISTINGUISHABLE_PROBABLE",
    ]


def test_sweep_endpoint_defaults_to_bundled_table(client):
    body = {"component": "6b", "trials": 1, "seed": 9}
    payload = client.post("/knots/sweep", json=body).json()
    assert len(payload["rows"]) == 20


def test_selftest_endpoint(client):
    payload = client.post("/selftest").json()
    assert payload["ok"] is True
    assert len(payload["checks"]) == 6
    assert all(check["ok"] for check in payload["checks"])


def test_endpoint_agrees_with_in_process_handler(client):
    request = schemas.SeparateRequest(
        braid="s1^-1 s2^2 s1^-2 s2", component="6b", trials=5, seed=2
    )
    direct = service.run_separate(request)
    wire = client.post(
        "/separate", json=request.model_dump(mode="json", by_alias=True)
    ).json()
    assert wire == direct.model_dump(mode="json", by_alias=True)
