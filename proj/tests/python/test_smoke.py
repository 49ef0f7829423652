import json

import pytest

import srdef


def test_bset_cycle4():
    assert srdef.b_set(srdef.load("cycle:4")) == [[0, 2], [1, 3]]


def test_degree_zero_cyclic4_8():
    d = srdef.degree_zero_totals(srdef.load("cyclic4:8"), workers=2)
    assert d["t2"] == 64
    assert d["t2_by_face_dim"] == {0: 40, 1: 24}


def test_surface_counts():
    K = srdef.load("suspension:cycle:6")
    assert len(srdef.versal_variables(K)) == 30
    assert srdef.degree_zero_totals(K)["t1"] == 30
    assert srdef.krull_dimension(K) == 26


def test_oracle_agrees_with_topology():
    K = srdef.load("suspension:cycle:5")
    assert srdef.oracle_dim(K, 1, "0", "1,3") == srdef.t_dim(K, 1, [0], [1, 3])


def test_p_series():
    assert srdef.p_series(3) == ["-1", "1", "-4", "22"]


def test_complex_from_facets():
    K = srdef.Complex.from_facets([[0, 1, 2], [1, 2]], 3)
    assert K.facets == [[0, 1, 2]]
    assert K.f_vector() == [3, 3, 1]


def test_errors():
    with pytest.raises(srdef.SrdefError):
        srdef.load("nosuch:1")
    code, out, err = srdef.run_cli(["info", "nosuch:1"])
    assert code == 1 and "usage" in err


def test_cli_json_round_trip():
    code, d = srdef.cli_json("versal-ideal", "suspension:cycle:6")
    assert code == 0 and d["ok"]
    r = d["result"]
    assert r["n_variables"] == 30 and len(r["minors"]) == 6
    assert r["exact"] and r["krull_dimension"] == 26
    assert json.loads(json.dumps(d)) == d
    code2, d2 = srdef.cli_json("versal-ideal", "suspension:cycle:6")
    assert d2 == d


def test_verify_nf_exit_codes():
    assert srdef.run_cli(["verify-nf", "--n", "5", "--order", "3"])[0] == 0
    assert srdef.run_cli(["verify-nf", "--n", "5", "--order", "3", "--mutate"])[0] == 2
