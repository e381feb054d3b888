import pytest

pf = pytest.importorskip("pellfrieze")


def test_quadint_arithmetic():
    x = pf.QuadInt(1, 1)
    assert x * x == pf.QuadInt(3, 2)
    assert str(pf.QuadInt(-3, 3)) == "-3+3√2"
    assert pf.QuadInt.parse("1+sqrt(2)") == x
    assert pf.norm(pf.QuadInt(1, 2)) == 7
    assert pf.unit_log(pf.unit_power(12)) == 12
    big = pf.unit_power(200)
    assert pf.norm(big) == 1
    assert big.a > 10**70  # arbitrary precision survives the boundary


def test_pentagon_frieze():
    d = pf.Dissection(5, [(0, 3)])
    t = pf.frieze_from_dissection(d)
    assert t[(2, 4)] == pf.QuadInt(1, 1)
    assert t[(0, 2)] == pf.QuadInt.sqrt2()
    assert t.verify() is None
    assert t.classify() == {"ge1": True, "nonneg_coeffs": True}
    assert sorted(pf.unit_arcs(t)) == [(0, 3), (1, 4), (2, 4)]


def test_ten_gon_example():
    d = pf.Dissection(10, [(1, 9), (2, 8), (4, 8), (5, 7)])
    assert pf.type_of(d) == 3
    witnesses = pf.enumerate_unitary_triangulations(pf.frieze_from_dissection(d))
    assert len(witnesses) == 2
    decs = pf.enumerate_tower_decompositions(d)
    assert len(decs) == 2
    assert {tower.roof for dec in decs for tower in dec.towers} == {0, 6}
    fan = pf.unitary_from_towers(d, decs[0])
    assert pf.is_triangulation(fan)


def test_sequences():
    assert [str(pf.s(i)) for i in range(4)] == ["0", "1", "2√2", "7"]
    assert pf.convergent(5) == (41, 29)
    assert pf.pell(6) == 70
    for n in range(20):
        assert pf.s(n) + pf.d(n) == pf.ell(n)


def test_scan():
    report = pf.conjecture_scan(6, workers=2)
    assert report["family_total"] > 0
    assert report["counterexamples"] == []
    assert report["hard_violations"] == []
    assert report["unitary"] == report["both"]


def test_json_and_svg():
    d = pf.Dissection(5, [(0, 3)])
    assert pf.dissection_from_json(pf.dissection_to_json(d)) == d
    svg = pf.render_svg(d, pf.frieze_from_dissection(d))
    assert svg.count('class="chord"') == 1
    assert 'class="overlay"' in svg


def test_errors():
    with pytest.raises(ValueError):
        pf.Dissection(5, [(0, 2), (1, 3)])
    with pytest.raises(ValueError):
        pf.unit_log(pf.QuadInt.sqrt2())
    with pytest.raises(ValueError):
        pf.euclidean_frieze(5)
