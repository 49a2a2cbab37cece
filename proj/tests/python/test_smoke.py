import itertools

import pytest

import ccloops as cc


def a2():
    return cc.CoxeterDiagram([[1, 3], [3, 1]])


def moufang_right(table):
    n = len(table)
    m = lambda a, b: table[a][b]
    return all(
        m(z, m(x, m(y, x))) == m(m(m(z, x), y), x)
        for x, y, z in itertools.product(range(n), repeat=3)
    )


def test_a2_chein_loop():
    g = cc.enumerate_group(a2())
    assert g.order == 6
    loop = cc.chein_loop(g)
    assert loop.order == 12
    assert all(r["holds"] for r in cc.is_moufang(loop))
    assert moufang_right(loop.table())
    assoc = cc.is_associative(loop)
    assert not assoc["holds"]
    x, y, z = assoc["counterexample"]
    assert loop.mul(loop.mul(x, y), z) != loop.mul(x, loop.mul(y, z))


def test_spherical_type_and_orders():
    a3 = cc.CoxeterDiagram.parse("coxeter v1\nrank 3\nedge 1 2 3\nedge 2 3 3\n")
    assert a3.spherical_type() == "A3"
    assert cc.enumerate_group(a3).order == 24
    affine = cc.CoxeterDiagram.parse("coxeter v1\nrank 2\nedge 1 2 inf\n")
    assert affine.spherical_type() is None


def test_chein_consequences():
    g = cc.enumerate_group(cc.CoxeterDiagram([[1, 4], [4, 1]]))
    assert all(r["holds"] for r in cc.chein_consequences(g))


@pytest.mark.parametrize(
    "group, case, order",
    [
        (cc.dihedral(2), "case1", 168),
        (cc.quaternion8(), "case2", 192),
        (cc.dihedral(3), "case3", 108),
        (cc.dihedral(4), "case3", 192),
    ],
)
def test_automorphisms(group, case, order):
    assert cc.classify_trichotomy(group) == case
    assert cc.automorphism_group_order(cc.chein_loop(group)) == order


def test_automorphisms_are_homomorphisms():
    loop = cc.chein_loop(cc.dihedral(3))
    n = loop.order
    for f in cc.automorphisms(loop)[:10]:
        assert sorted(f) == list(range(n))
        assert all(f[loop.mul(x, y)] == loop.mul(f[x], f[y]) for x in range(n) for y in range(n))


def test_cohomology_triangle():
    d = cc.cohomology(3, [(0, 1), (1, 2), (0, 2)])
    assert (d["Z1"], d["B1"], d["H1"]) == (3, 2, 1)
    assert d["ok"]


def test_cohomology_strict_rejects_disconnected():
    with pytest.raises(cc.PreconditionError):
        cc.cohomology(4, [(0, 1)], strict=True)


def test_amalgam_classes():
    triangle = cc.CoxeterDiagram([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    c = cc.classify_amalgams(triangle)
    assert c["n"] == 1
    assert c["representatives"] == [[], [0]]
    assert c["valid"]


def test_parse_error():
    with pytest.raises(cc.ParseError, match="edge label must be >= 3"):
        cc.CoxeterDiagram.parse("coxeter v1\nrank 2\nedge 1 2 2")


def test_run_reports():
    code, report = cc.run("cohomology", "graph v1\nedge 1 2\nedge 2 3\nedge 1 3\n")
    assert code == 0
    assert report["schema"] == 1
    assert report["dims"]["H1"] == 1
    code, report = cc.run("group", "coxeter v1\nrank 3\nedge 1 2 3\nedge 2 3 3", cap=5)
    assert code == 3
    assert report["error"]["kind"] == "resource_limit"


def test_loop_from_table_rejects_non_loop():
    with pytest.raises(cc.PreconditionError):
        cc.Loop.from_table([[0, 1], [0, 1]])
