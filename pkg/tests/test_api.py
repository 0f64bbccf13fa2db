import anyio


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["edge_cap"] == 14


def test_tau(client):
    response = client.get("/tau", params={"a": 7, "b": 22})
    assert response.status_code == 200
    detail = response.json()["detail"]
    assert detail["value"] == 66
    assert detail["attained_case"] == "tau_6"


def test_tau_rejects_a_above_b(client):
    response = client.get("/tau", params={"a": 5, "b": 4})
    assert response.status_code == 400
    assert response.json()["detail"].startswith("invalid-parameters")


def test_tau_validates_query(client):
    assert client.get("/tau", params={"a": 0, "b": 4}).status_code == 422


def test_table1(client):
    response = client.get("/table1", params={"m_lo": 26, "m_hi": 26})
    assert response.status_code == 200
    (row,) = response.json()["detail"]
    assert [cell["offset"] for cell in row["cells"]] == [1, 1, 2, 3, 4, 5, 5, 6, 6, 6, 6, 6]


def test_construct(client):
    response = client.get("/construct", params={"a": 1, "b": 2, "c": 5})
    assert response.status_code == 200
    detail = response.json()["detail"]
    assert detail["antimagic"] is True
    assert detail["partition"]["internal"] == [3]


def test_construct_out_of_range(client):
    response = client.get("/construct", params={"a": 1, "b": 1, "c": 3})
    assert response.status_code == 422
    assert response.json()["detail"].startswith("out-of-range")


def test_verify(client):
    body = {"edges": [[0, 1], [1, 2], [3, 4], [4, 5]], "labels": [1, 2, 3, 4]}
    response = client.post("/verify", json=body)
    assert response.status_code == 200
    detail = response.json()["detail"]
    assert detail["antimagic"] is False
    assert detail["duplicate_witness"]["shared_sum"] == 3


def test_verify_expected_progression(client):
    body = {"edges": [[0, 1], [1, 2]], "labels": [1, 2], "graph": "P3", "expect_ad": [1, 1]}
    detail = client.post("/verify", json=body).json()["detail"]
    assert detail["matches_expected"] is True


def test_verify_rejects_a_cycle(client):
    body = {"edges": [[0, 1], [1, 2], [2, 0]], "labels": [1, 2, 3]}
    response = client.post("/verify", json=body)
    assert response.status_code == 400
    assert response.json()["detail"].startswith("parse-error")


def test_figure2(client):
    response = client.get("/figure2")
    assert response.status_code == 200
    detail = response.json()["detail"]
    assert len(detail) == 6
    assert all(panel["passed"] for panel in detail)


def test_search(client):
    response = client.post("/search", json={"graph": "S(1,1)+3*P3"})
    assert response.status_code == 200
    assert response.json()["detail"]["verdict"] == "refuted"


def test_search_one_one(client):
    response = client.post("/search", json={"graph": "S(1,2)+5*P3", "mode": "one-one"})
    detail = response.json()["detail"]
    assert detail["verdict"] == "found"
    assert sorted(detail["labeling"]["labels"]) == list(range(1, 15))


def test_search_refuses_large_forests(client):
    response = client.post("/search", json={"graph": "S(1,2)+6*P3"})
    assert response.status_code == 422
    assert response.json()["detail"].startswith("refuse-to-run")


def test_pell(client):
    response = client.get("/pell", params={"max_n": 1000, "screen": True})
    rows = response.json()["detail"]
    assert [(row["n"], row["m"]) for row in rows] == [(3, 2), (20, 14), (119, 84), (696, 492)]
    assert rows[3]["screen"]["reason"] == "203 > 178 = 2*86+6"


def test_census(client):
    response = client.get("/census", params={"n": 20, "m": 14})
    graphs = {row["graph"] for row in response.json()["detail"]}
    assert graphs == {"P5+5*P3", "S4+5*P3", "S(1,2)+5*P3", "2*P4+4*P3", "2*S3+4*P3", "P4+S3+4*P3"}


def _spy_on_threads(monkeypatch):
    calls = []
    original = anyio.to_thread.run_sync

    async def spy(func, *args, **kwargs):
        calls.append(getattr(func, "__name__", repr(func)))
        return await original(func, *args, **kwargs)

    monkeypatch.setattr(anyio.to_thread, "run_sync", spy)
    return calls


def test_census_search_runs_in_a_worker_thread(client, monkeypatch):
    calls = _spy_on_threads(monkeypatch)
    response = client.get("/census", params={"n": 8, "m": 6, "check_one_one": True})
    assert response.status_code == 200
    assert all("one_one" in row for row in response.json()["detail"])
    assert "sync_census" in calls


def test_construct_runs_in_a_worker_thread(client, monkeypatch):
    calls = _spy_on_threads(monkeypatch)
    response = client.get("/construct", params={"a": 3, "b": 12, "c": 34})
    assert response.status_code == 200
    assert "sync_construct" in calls
