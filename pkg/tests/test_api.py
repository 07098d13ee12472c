import pytest
from fastapi.testclient import TestClient

from pcflag.api import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_catalog(client):
    resp = client.get("/catalog")
    assert resp.status_code == 200
    names = {e["name"] for e in resp.json()["entries"]}
    assert {"pm1", "G7", "sullivan"} <= names


def test_group_info(client):
    resp = client.post("/group/info", json={"group": "G7", "prime": 13})
    assert resp.status_code == 200
    body = resp.json()
    assert body["order"] == 144
    assert body["degrees"] == [12, 12]
    assert body["dimension"] == 46
    assert body["rPrime"] == 3 and body["kappa"] == 0


def test_flag_poincare(client):
    resp = client.post("/flag/poincare", json={"group": "S3", "prime": 7})
    assert resp.status_code == 200
    body = resp.json()
    assert body["poincare"] == [1, 0, 2, 0, 2, 0, 1]
    assert body["euler"] == 6

    resp = client.post(
        "/flag/poincare", json={"group": "S3", "prime": 7, "subset": [1]}
    )
    assert resp.json()["euler"] == 3


def test_adjoint(client):
    resp = client.post("/adjoint", json={"group": "sullivan", "prime": 5})
    assert resp.status_code == 200
    body = resp.json()
    assert body["dim"] == 7
    assert body["verdict"] == "not a sphere"
    assert body["ranks"] == {"3": 1, "5": 1, "7": 1}

    resp = client.post("/adjoint", json={"group": "pm1", "prime": 5})
    assert resp.json()["verdict"] == "sphere"


def test_splitting_verify(client):
    resp = client.post("/splitting/verify", json={"prime": 13, "l": 3})
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is True
    assert body["umkehrResidues"] == [2, 5, 8, 11]
    assert body["checksFailed"] == []


def test_centralizer(client):
    resp = client.post(
        "/centralizer", json={"group": "S3", "prime": 7, "reflection": 0}
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["order"] == 2 and body["dimCentralizer"] == 4


def test_embed(client):
    resp = client.post(
        "/embed", json={"group": "G7", "prime": 13, "precision": 6}
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["residueDegree"] == 2
    assert len(body["matrices"]) == 3


def test_domain_errors_are_400(client):
    resp = client.post("/embed", json={"group": "G7", "prime": 7})
    assert resp.status_code == 400
    assert resp.json()["detail"]["error"] == "NoEmbedding"

    resp = client.post("/group/info", json={"group": "E8", "prime": 5})
    assert resp.status_code == 400
    assert resp.json()["detail"]["error"] == "UnknownGroup"

    resp = client.post("/splitting/verify", json={"prime": 13, "l": 5})
    assert resp.status_code == 400
    assert resp.json()["detail"]["error"] == "InvalidL"


def test_validation_errors_are_422(client):
    resp = client.post("/group/info", json={"group": "G7"})
    assert resp.status_code == 422
