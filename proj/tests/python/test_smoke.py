from fractions import Fraction

import spingeo


def test_octonion_table_and_products():
    assert spingeo.oct_verify()
    t = spingeo.oct_table()
    assert len(t) == 7 and all(len(row) == 7 for row in t)
    # e1 * e1 = -1
    assert t[0][0] == (-1, 0)

    e1 = [0, 1, 0, 0, 0, 0, 0, 0]
    e2 = [0, 0, 1, 0, 0, 0, 0, 0]
    prod = spingeo.oct_mul(e1, e2)
    sign, idx = t[0][1]
    want = [Fraction(0)] * 8
    want[idx] = Fraction(sign)
    assert prod == want

    half = [Fraction(1, 2)] + [0] * 7
    assert spingeo.oct_mul(half, half) == [Fraction(1, 4)] + [Fraction(0)] * 7


def test_quaternions():
    i = [0, 1, 0, 0]
    j = [0, 0, 1, 0]
    assert spingeo.quat_mul(i, j) == [Fraction(0), Fraction(0), Fraction(0), Fraction(1)]
    assert spingeo.quat_mul(i, i)[0] == Fraction(-1)


def test_fano():
    f = spingeo.fano()
    assert len(f["points"]) == 7
    assert len(f["lines"]) == 7
    assert len(spingeo.fano_triads()) == 7


def test_pauli():
    assert spingeo.pauli_mul("XI", "YI") == "+iZI"
    assert spingeo.pauli_mul("XX", "ZZ") == "-YY"
    assert not spingeo.pauli_commutes("XI", "ZI")
    assert spingeo.pauli_commutes("XX", "ZZ")
    assert len(spingeo.all_points(2)) == 15
    assert [spingeo.degree(n) for n in (1, 2, 3, 4)] == [0, 6, 30, 126]
    assert len(spingeo.centralizer("YY")) == 6


def test_geometry():
    d = spingeo.doily()
    assert len(d["points"]) == 15
    assert len(d["lines"]) == 15
    assert all(l["kind"] == "commuting" for l in d["lines"])

    lines = spingeo.operator_lines(2)["lines"]
    assert len(lines) == 35
    assert sum(l["kind"] == "anticommuting" for l in lines) == 20


def test_subalgebras():
    hs = spingeo.heptads()
    assert len(hs) == 15
    assert all(h["label"] == "su2su2u1-heptad" for h in hs)

    ps = spingeo.pentads()
    assert len(ps) == 6
    decad = spingeo.decad_from_pentad(ps[0])
    assert decad["label"] == "so5-decad"
    assert len(decad["members"]) == 10

    closure = spingeo.lie_closure(["XX", "ZZ", "XZ"])
    assert set(closure) == {"XX", "ZZ", "XZ", "ZX", "IY", "YI"}


def test_verify_all():
    reports = spingeo.verify_all()
    assert len(reports) == 11
    assert all(ok for _, ok in reports)
    assert spingeo.verify_report() == spingeo.verify_report()
