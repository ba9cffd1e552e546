import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient

from covergraph.service import app

from conftest import SIX_VERTEX_EXAMPLE
from covergraph.graph import parse_graph


@pytest.fixture(scope="module")
def client():
    with TestClient(app, raise_server_exceptions=False) as c:
        yield c


def graph_payload(text=SIX_VERTEX_EXAMPLE):
    g = parse_graph(text)
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


SQUARE = {"n": 4, "edges": [[1, 2], [1, 4], [2, 3], [3, 4]]}
PENTAGON = {"n": 5, "edges": [[1, 2], [1, 5], [2, 3], [3, 4], [4, 5]]}


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


class TestClassify:
    def test_worked_example(self, client):
        r = client.post("/classify", json={"graph": graph_payload()})
        assert r.status_code == 200
        body = r.json()
        assert body["msc"] and body["unmixed"] and body["domain"]
        assert body["sc"] is False
        assert body["consistent"] is True
        assert body["msc_conditions"] == {str(i): True for i in range(1, 9)}
        assert body["witnesses"]["matching"] == [[1, 2], [3, 4], [5, 6]]
        assert body["k_max"] == 3

    def test_pentagon_with_counterexample(self, client):
        r = client.post(
            "/classify",
            json={"graph": PENTAGON, "counterexample_max_level": 2},
        )
        body = r.json()
        assert body["domain"] is False
        ce = body["witnesses"]["domain_counterexample"]
        assert ce["total"] == {"k": 2, "prices": [1, 1, 1, 1, 2]}
        assert ce["lop_vertex"] == 5

    def test_edgeless_is_input_error(self, client):
        r = client.post("/classify", json={"graph": {"n": 3, "edges": []}})
        assert r.status_code == 400
        assert r.json()["error"]["type"] == "input"

    def test_self_loop_is_input_error(self, client):
        r = client.post(
            "/classify", json={"graph": {"n": 2, "edges": [[1, 1]]}}
        )
        assert r.status_code == 400
        assert r.json()["error"]["type"] == "input"

    def test_budget_error(self, client):
        big = {
            "n": 30,
            "edges": [[i, i + 1] for i in range(1, 30)],
        }
        r = client.post(
            "/classify", json={"graph": big, "budget": 1000}
        )
        assert r.status_code == 400
        assert r.json()["error"]["type"] == "budget"


class TestCovers:
    def test_square_level_one(self, client):
        r = client.post("/covers", json={"graph": SQUARE, "k": 1})
        assert r.json() == {
            "k": 1,
            "covers": [
                {"k": 1, "prices": [0, 1, 0, 1]},
                {"k": 1, "prices": [1, 0, 1, 0]},
            ],
        }

    def test_square_level_two(self, client):
        r = client.post("/covers", json={"graph": SQUARE, "k": 2})
        prices = [c["prices"] for c in r.json()["covers"]]
        assert prices == [[0, 2, 0, 2], [1, 1, 1, 1], [2, 0, 2, 0]]

    def test_indecomposable_pentagon(self, client):
        r = client.post(
            "/covers",
            json={"graph": PENTAGON, "k": 2, "indecomposable": True},
        )
        assert r.json()["covers"] == [{"k": 2, "prices": [1, 1, 1, 1, 1]}]

    def test_indecomposable_wrong_level(self, client):
        r = client.post(
            "/covers",
            json={"graph": PENTAGON, "k": 1, "indecomposable": True},
        )
        assert r.status_code == 400


class TestIdeal:
    def test_level_one_includes_edges(self, client):
        r = client.post("/ideal", json={"graph": SQUARE, "power": 1})
        body = r.json()
        assert body["generators"] == [[0, 1, 0, 1], [1, 0, 1, 0]]
        assert body["degrees"] == [2, 2]
        assert body["single_degree"] is True
        assert body["edge_generators"] == SQUARE["edges"]

    def test_level_two(self, client):
        r = client.post("/ideal", json={"graph": SQUARE, "power": 2})
        body = r.json()
        assert body["generators"] == [[0, 2, 0, 2], [1, 1, 1, 1], [2, 0, 2, 0]]
        assert body["degrees"] == [4, 4, 4]
        assert "edge_generators" not in body

    def test_mixed_degrees(self, client):
        hexagon = {
            "n": 6,
            "edges": [[1, 2], [1, 6], [2, 3], [3, 4], [4, 5], [5, 6]],
        }
        r = client.post("/ideal", json={"graph": hexagon, "power": 1})
        body = r.json()
        assert body["degrees"] == [3, 3, 4, 4, 4]
        assert body["single_degree"] is False


class TestConstruct:
    def test_cycle(self, client):
        r = client.post("/construct", json={"family": "cycle", "n": 4})
        assert r.json() == SQUARE

    def test_complete_bipartite(self, client):
        r = client.post(
            "/construct", json={"family": "complete-bipartite", "a": 1, "b": 2}
        )
        assert r.json() == {"n": 3, "edges": [[1, 2], [1, 3]]}

    def test_plus(self, client):
        r = client.post(
            "/construct",
            json={"plus": True, "base": {"n": 2, "edges": [[1, 2]]}},
        )
        assert r.json() == {
            "n": 4,
            "edges": [[1, 2], [1, 3], [2, 4]],
        }

    def test_prime_on_square_is_identity(self, client):
        r = client.post("/construct", json={"prime": True, "base": SQUARE})
        assert r.json() == SQUARE

    def test_missing_parameters(self, client):
        assert client.post("/construct", json={}).status_code == 400
        assert (
            client.post("/construct", json={"family": "cycle"}).status_code
            == 400
        )
        assert (
            client.post("/construct", json={"family": "nope", "n": 4}).status_code
            == 400
        )
        assert client.post("/construct", json={"plus": True}).status_code == 400


class TestSuite:
    def test_small_run_passes(self, client):
        r = client.post("/suite", json={"max_n": 4, "samples": 10})
        body = r.json()
        assert body["passed"] is True
        assert body["checks"]
        for check in body["checks"]:
            assert check["passed"] is True
            assert check["failures"] == []
            assert check["checked"] > 0
