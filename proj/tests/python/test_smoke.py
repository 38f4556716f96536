import pytest

import mirrorcell as mc


def test_build_and_charpoly():
    text = mc.build(2, 2, 1)
    assert text.splitlines()[0] == "arrangement dim=2 r=1 count=3"
    assert len(text.splitlines()) == 4
    assert mc.charpoly(2, 2, 1) == "t^2 - 3t + 2"
    assert mc.charpoly_coefficients(2, 2, 1) == [2, -3, 1]
    assert mc.charpoly(0, 3, 2) == "t^3 - 6t^2 + 11t - 6"


def test_reflection_matches_monomial():
    # G(2,1,3) is the full monomial arrangement, G(2,2,3) drops the coordinates
    assert mc.reflection(2, 1, 3) == mc.build(3, 3, 2)
    assert mc.reflection(2, 2, 3) == mc.build(0, 3, 2)


def test_lattice_lines():
    lines = mc.lattice(2, 2, 1).splitlines()
    assert lines[0] == "rank=0 mobius=1 hyperplanes="
    assert lines[-1] == "rank=2 mobius=2 hyperplanes=0,1,2"


def test_triple_check_deletion_restriction():
    # A^0_3(2) has six hyperplanes
    for i in range(6):
        assert mc.triple_check(0, 3, 2, i)


def test_identify_pencil():
    cands = mc.identify(mc.build(1, 2, 2), 3)
    assert cands == [(2, 2, 1), (1, 2, 2), (0, 2, 3)]


def test_scan_reflection():
    text, ok = mc.scan(3, 3, 3)
    assert ok
    lines = text.splitlines()
    assert lines[0].startswith("flat= dim=3 induced_count=9")
    assert all("candidates=" in ln for ln in lines)


def test_map_f_values():
    out = mc.map_f(1, 2, 1, [2 + 0j, 1 + 0j])
    assert len(out) == 1
    assert abs(out[0] - 2) < 1e-14
    assert abs(mc.map_f(0, 2, 2, [1 + 0j, -1 + 0j])[0]) < 1e-14


def test_invariants():
    assert (mc.genus(2, 2, 1), mc.punctures(2, 2, 1), mc.free_rank(2, 2, 1)) == (1, 3, 4)
    assert mc.free_rank(1, 3, 2) == 13


def test_verify_payload():
    v = mc.verify(1, 2, 1, samples=12, seed=5)
    assert v["pass"] is True
    assert v["seed"] == 5
    assert v["samples_requested"] == 12
    assert v["checks"]["max_residual"]["pass"] is True


def test_report_payload():
    rep = mc.report(1, 3, 2)
    assert rep["pass"] is True
    assert rep["genus"] == 4
    assert rep["free_rank"] == 13
    assert rep["pi1"]["descriptor"] == "F_13 ⋊ B_3"
    names = [c["name"] for c in rep["checks"]]
    assert "bezout_infinity_count" in names


def test_bad_parameters_raise():
    with pytest.raises(ValueError):
        mc.build(5, 3, 1)
    with pytest.raises(ValueError):
        mc.map_f(0, 1, 1, [1 + 0j])
