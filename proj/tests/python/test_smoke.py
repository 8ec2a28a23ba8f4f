import pytest

import tfund


def test_lattice_normal_forms():
    assert tfund.hnf([[2, 4], [1, 3]]) == [[1, 1], [0, 2]]
    assert tfund.snf([[2, 0], [0, 3]])["diag"] == [1, 6]
    assert tfund.saturate([[2, 0]], 2) == [[1, 0]]
    inv = tfund.quotient_invariants(2, [[0, 1], [2, -1]])
    assert inv == {"torsion": [2], "free_rank": 0, "text": "Z^0 x Z/2"}


def test_big_integers_round_trip():
    n = 2**90 + 1
    assert tfund.hnf([[n]]) == [[n]]


def test_run_accepts_dicts_and_reports_like_the_cli():
    report = tfund.run("local-pi1", tfund.builtin_document("duval:E8"))
    assert report["exit_code"] == 0
    assert report["group"]["order"] == "Finite(120)"
    assert report["group"]["abelian"]["text"] == "Z^0"

    fan = {"kind": "fan", "rank": 2, "cones": [[[0, 1]], [[2, -1]]]}
    toric = tfund.run("toric", fan)
    assert toric["invariants"]["text"] == "Z^0 x Z/2"


def test_exit_codes_surface_in_the_report():
    free = {"kind": "presentation", "generators": ["a", "b"], "relators": ["a^2", "b^2"]}
    report = tfund.run("analyze", free, max_cosets=50)
    assert report["exit_code"] == 3
    assert report["group"]["order"] == "Unknown(limit=50)"


def test_analyze_presentations_directly():
    group = tfund.analyze(["a", "b"], ["a^2", "b^3", "a b a b a b a b a b"])
    assert group["order"] == "Finite(60)"


def test_errors_raise_input_error():
    with pytest.raises(tfund.InputError):
        tfund.run("pi1", "{not json")
    with pytest.raises(tfund.InputError):
        tfund.analyze(["a"], ["zz"])
    with pytest.raises(tfund.InputError):
        tfund.run("frobnicate", {"kind": "fan", "rank": 1, "cones": []})


def test_corpus_is_green():
    code, text = tfund.corpus("duval:A")
    assert code == 0
    assert "all 8 entries" in text
