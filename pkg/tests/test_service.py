"""Tests for the HTTP service.

Every endpoint must return exactly the payload the local computation
produces (the pydantic response models are pass-throughs), reject bad
parameters with 422, and stay deterministic across calls.
"""

import json

import pytest
from fastapi.testclient import TestClient

import prymal
from prymal import payloads
from prymal.cli import cli
from prymal.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


class TestHealth:
    def test_health(self, client):
        body = client.get("/api/health").json()
        assert body == {"status": "ok", "version": prymal.__version__}


class TestPayloadParity:
    def test_lines(self, client):
        response = client.get("/api/lines")
        assert response.status_code == 200
        assert response.json() == payloads.lines_payload()

    @pytest.mark.parametrize("variant", ["surfaces", "curves"])
    def test_pairings(self, client, variant):
        response = client.get("/api/pairings", params={"variant": variant})
        assert response.status_code == 200
        assert response.json() == payloads.pairings_payload(variant)

    @pytest.mark.parametrize("g", [4, 5])
    def test_hodge(self, client, g):
        response = client.get("/api/hodge", params={"g": g})
        assert response.status_code == 200
        assert response.json() == payloads.hodge_payload(g)

    @pytest.mark.parametrize("which", ["S", "V", "W"])
    def test_hilbert(self, client, which):
        response = client.get("/api/hilbert", params={"which": which})
        assert response.status_code == 200
        assert response.json() == payloads.hilbert_payload(which)

    @pytest.mark.parametrize("g,d", [(2, 3), (6, 6)])
    def test_pushforward(self, client, g, d):
        response = client.get("/api/pushforward", params={"g": g, "d": d})
        assert response.status_code == 200
        assert response.json() == payloads.pushforward_payload(g, d)

    def test_defaults_match_explicit_parameters(self, client):
        assert client.get("/api/pairings").json() == \
            payloads.pairings_payload("surfaces")
        assert client.get("/api/hodge").json() == payloads.hodge_payload(5)
        assert client.get("/api/hilbert").json() == \
            payloads.hilbert_payload("V")
        assert client.get("/api/pushforward").json() == \
            payloads.pushforward_payload(6, 6)


class TestResponseShape:
    def test_hilbert_omits_inapplicable_fields(self, client):
        body = client.get("/api/hilbert", params={"which": "V"}).json()
        assert set(body) == {"hilbert", "two_route_agreement", "which"}
        body = client.get("/api/hilbert", params={"which": "W"}).json()
        assert set(body) == {"chi_nPhi", "hilbert", "self_intersection",
                             "which"}

    def test_pushforward_entry_keeps_class_key(self, client):
        body = client.get("/api/pushforward",
                          params={"g": 2, "d": 2}).json()
        entry = body["entries"]["1,0"]["value"]
        assert set(entry) == {"class", "coefficients"}
        assert entry["class"] == "2*eta"

    def test_service_json_matches_cli_bytes(self, client):
        from click.testing import CliRunner
        body = client.get("/api/hilbert", params={"which": "V"}).json()
        service_text = json.dumps(body, sort_keys=True, indent=2) + "\n"
        cli_text = CliRunner().invoke(
            cli, ["hilbert", "--which", "V", "--format", "json"]).output
        assert service_text == cli_text

    def test_responses_are_deterministic(self, client):
        first = client.get("/api/pairings", params={"variant": "curves"})
        second = client.get("/api/pairings", params={"variant": "curves"})
        assert first.content == second.content


class TestVerifyEndpoint:
    def test_single_suite(self, client):
        response = client.get("/api/verify", params={"only": "ring"})
        assert response.status_code == 200
        body = response.json()
        assert body == payloads.verify_payload(
            ["ring"], flags={"only": "ring"})
        assert body["passed"] is True
        assert body["counts"]["fail"] == 0

    def test_comma_separated_suites(self, client):
        body = client.get("/api/verify",
                          params={"only": "primal,ring"}).json()
        assert {c["suite"] for c in body["checks"]} == {"primal", "ring"}

    def test_unknown_suite_is_422(self, client):
        response = client.get("/api/verify", params={"only": "nope"})
        assert response.status_code == 422
        assert "unknown suite" in response.json()["detail"]


class TestParameterValidation:
    @pytest.mark.parametrize("path,params", [
        ("/api/pairings", {"variant": "cubic"}),
        ("/api/hodge", {"g": 1}),
        ("/api/hodge", {"g": 17}),
        ("/api/hodge", {"g": "x"}),
        ("/api/hilbert", {"which": "Q"}),
        ("/api/pushforward", {"g": 0}),
        ("/api/pushforward", {"g": 25}),
        ("/api/pushforward", {"d": 13}),
    ])
    def test_rejected_parameters(self, client, path, params):
        assert client.get(path, params=params).status_code == 422
