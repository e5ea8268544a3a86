import pytest

import xtop


def test_s3_spectrum():
    rep = xtop.s3().spectrum()
    assert rep["ideals"] == [["0"], ["0", "a"], ["0", "a", "1"]]
    assert rep["spec"] == [["0"], ["0", "a"]]
    assert rep["max"] == [["0", "a"]]
    assert rep["kdim"] == 1
    assert rep["is_local"] and rep["is_idempotent"] and rep["is_reduced"]
    assert rep["jacobson"] == ["0", "a"]
    assert rep["nilradical"] == ["0"]


def test_s3_topology():
    space = xtop.s3().spec_space()
    report = space.report()
    assert report["t0"] and not report["t1"]
    assert report["kdim"] == 1
    assert len(space.open_sets()) == 3


def test_forest_axioms():
    trees = xtop.Space.from_poset(xtop.forest("T2+T3")).report()
    assert trees["t_threequarter"] and not trees["t1"]
    mixed = xtop.Space.from_poset(xtop.forest("T2+V2")).report()
    assert mixed["t_half"] and not mixed["t_threequarter"]


def test_closure_and_kernel():
    p = xtop.Poset(["a", "b", "c"], [("a", "b"), ("a", "c")])
    space = xtop.Space.from_poset(p)
    assert len(space) == 3
    for check in space.cross_check():
        assert check["holds"], check


def test_bni_prediction():
    v = xtop.verify_bni(12, 3)
    assert v["match"]
    assert v["case"] == 4
    assert v["computed_kdim"] == 2


def test_zn_discrete():
    space = xtop.zn(30).spec_space()
    assert len(space) == 3
    assert space.report()["discrete"]


def test_bad_semiring_raises():
    with pytest.raises(xtop.AxiomError):
        xtop.Semiring(["0", "1"], [["0", "1"], ["1", "1"]], [["0", "0"], ["0", "0"]], "0", "1")


def test_bad_space_raises():
    lattice = {"labels": ["0", "a", "b", "c", "1"],
               "leq": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "1"], ["b", "1"], ["c", "1"]]}
    assert not xtop.is_xtop(lattice, ["a", "b", "c"])
    with pytest.raises(xtop.NotXTopError):
        xtop.Space.from_dict({"lattice": lattice, "X": ["a", "b", "c"]})


def test_small_suite():
    results = xtop.run_suite("quarter", max_size=4)
    assert all(r["passed"] for r in results)
