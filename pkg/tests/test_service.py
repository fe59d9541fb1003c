import pytest
from fastapi.testclient import TestClient

from vfassign.runner import run_check
from vfassign.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_check_expression(client):
    response = client.post("/check", json={"expression": "cube(3)"})
    assert response.status_code == 200
    body = response.json()
    assert body["exit_code"] == 0
    assert body["report"]["certificate"]["outcome"] == "ASSIGNED"
    assert body["dot"] is None


def test_check_matches_local(client):
    local = run_check("join(cube(3),cross(3))", oracle=True)
    response = client.post("/check", json={"expression": "join(cube(3),cross(3))",
                                           "oracle": True})
    assert response.json()["text"] == local.text
    assert response.json()["exit_code"] == 1


def test_check_document(client):
    doc = client.post("/construct", json={"expression": "simplex(3)"}).json()
    assert doc["name"] == "simplex(3)"
    response = client.post("/check", json={"document": doc})
    assert response.status_code == 200
    assert response.json()["report"]["name"] == "simplex(3)"


def test_check_with_dot(client):
    response = client.post("/check", json={"expression": "simplex(2)",
                                           "with_dot": True})
    assert response.json()["dot"].startswith("graph vertex_facet {")


def test_dot_endpoint(client):
    response = client.post("/dot", json={"expression": "simplex(2)"})
    assert response.status_code == 200
    assert response.text.startswith("graph vertex_facet {")


def test_selfdual_endpoint(client):
    response = client.post("/selfdual", json={"expression": "simplex(3)"})
    assert response.json()["status"] == "FOUND"


def test_bad_expression_is_400(client):
    response = client.post("/check", json={"expression": "cube(99)"})
    assert response.status_code == 400
    assert "practical limit" in response.json()["detail"]


def test_neither_or_both_sources_rejected(client):
    assert client.post("/check", json={}).status_code == 400
    doc = client.post("/construct", json={"expression": "simplex(2)"}).json()
    response = client.post("/check", json={"expression": "cube(2)", "document": doc})
    assert response.status_code == 400


def test_corpus_endpoint(client):
    response = client.get("/corpus")
    assert response.status_code == 200
    body = response.json()
    assert body["exit_code"] == 0
    assert len(body["report"]["rows"]) == 61
    assert body["text"].splitlines()[0].startswith("name")
    assert body["csv"].splitlines()[0].startswith("name,")
