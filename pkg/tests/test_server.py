import pytest
from fastapi.testclient import TestClient

from blaschke.server import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/api/v1/health")
    assert r.status_code == 200
    assert r.text == "ok"


def test_critical_unperturbed(client):
    r = client.get("/api/v1/critical?a=0.5&lambda=0")
    assert r.status_code == 200
    doc = r.json()
    assert doc["c_minus"][0] == pytest.approx(0.381966, abs=1e-6)
    assert doc["ringCriticals"] == []


def test_critical_perturbed(client):
    r = client.get("/api/v1/critical?a=0.5i&lambda=1e-6")
    doc = r.json()
    assert len(doc["ringCriticals"]) == 5
    assert len(doc["ringZeros"]) == 5
    assert doc["maxResidual"] <= 1e-10


def test_dynamical_tile_and_cache(client):
    url = "/api/v1/dynamical?a=0.5i&lambda=1e-6&cx=0&cy=0&w=3&res=48&maxIter=300"
    r1 = client.get(url)
    assert r1.status_code == 200
    assert r1.headers["content-type"].startswith("image/x-portable-pixmap")
    assert r1.content.startswith(b"P6\n48 48\n255\n")
    r2 = client.get(url)
    assert r1.content == r2.content


def test_dynamical_json_format(client):
    r = client.get("/api/v1/dynamical?a=0.5i&lambda=1e-6&res=48&maxIter=300&format=json")
    doc = r.json()
    assert doc["spec"]["planeKind"] == "dynamical"


def test_resolution_cap(client):
    r = client.get("/api/v1/dynamical?a=0.5i&lambda=1e-6&res=32768")
    assert r.status_code == 400
    assert r.json()["field"] == "res"


def test_missing_and_invalid_params(client):
    r = client.get("/api/v1/dynamical?lambda=1e-6")
    assert r.status_code == 400
    assert r.json()["field"] == "a"
    r = client.get("/api/v1/orbit?a=0.5i&lambda=1e-6&x=0.1")
    assert r.status_code == 400
    assert r.json()["field"] == "y"


def test_precondition_422(client):
    r = client.get("/api/v1/dynamical?a=0.5i&lambda=1e-2&res=48")
    assert r.status_code == 422
    assert "check" in r.json()


def test_orbit_endpoint(client):
    r = client.get("/api/v1/orbit?a=0.5i&lambda=1e-6&x=0.2&y=0.1")
    doc = r.json()
    assert doc["kind"] == "escape-through-t0"
    assert isinstance(doc["orbit"], list)
    assert doc["orbit"][0] == [0.2, 0.1]


def test_parameter_endpoint(client):
    r = client.get("/api/v1/parameter?a=0.5i&cx=2e-5&cy=1e-5&w=3e-5&res=24&format=json")
    assert r.status_code == 200
    doc = r.json()
    assert doc["spec"]["planeKind"] == "parameter"
    assert "precondFailPx" in doc
