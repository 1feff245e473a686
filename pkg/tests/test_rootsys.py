import pytest

from schubdist.rootsys import (
    WEYL_ORDER_CAP, CartanType, RootSystemError, build_root_system, cartan_matrix,
    in_parabolic_span, pairing,
)

SUPPORTED = ["A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "C2", "C3", "C4",
             "D4", "D5", "F4", "G2"]


def expected_positive_count(t):
    n = t.rank
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1),
            "F": 24, "G": 6}[t.family]


def test_small_systems():
    assert build_root_system("A1").positive_roots == ((1,),)
    a2 = build_root_system("A2")
    assert len(a2.positive_roots) == 3
    assert a2.highest_root() == (1, 1)
    assert len(build_root_system("G2").positive_roots) == 6


@pytest.mark.parametrize("name", SUPPORTED)
def test_positive_root_count(name):
    rs = build_root_system(name)
    assert len(rs.positive_roots) == expected_positive_count(rs.cartan_type)


@pytest.mark.parametrize("name", SUPPORTED)
def test_cartan_matrix_shape(name):
    a = cartan_matrix(CartanType.parse(name))
    n = len(a)
    for i in range(n):
        assert a[i][i] == 2
        for j in range(n):
            if i != j:
                assert a[i][j] <= 0
                assert (a[i][j] == 0) == (a[j][i] == 0)


@pytest.mark.parametrize("name", SUPPORTED)
def test_reflection_closure_and_signs(name):
    rs = build_root_system(name)
    for alpha in rs.positive_roots:
        for i in range(1, rs.rank + 1):
            beta = rs.simple_reflect(i, alpha)
            assert rs.is_root(beta)
            if not rs.is_positive(beta):
                assert alpha == rs.simple_root(i)
    for alpha in rs.roots:
        assert all(c >= 0 for c in alpha) or all(c <= 0 for c in alpha)


@pytest.mark.parametrize("name", SUPPORTED)
def test_coroots(name):
    rs = build_root_system(name)
    for alpha in rs.roots:
        cor = rs.coroot(alpha)
        assert pairing(rs, alpha, cor) == 2
        if rs.is_positive(alpha):
            assert all(c >= 0 for c in cor)
        for beta in rs.roots:
            assert isinstance(pairing(rs, beta, cor), int)


@pytest.mark.parametrize("name", ["B3", "C3", "F4", "G2"])
def test_coroots_form_dual_root_system(name):
    # coroots of type X are the roots of the transposed Cartan matrix
    rs = build_root_system(name)
    a = rs.cartan_matrix
    n = rs.rank
    cor = {rs.coroot(alpha) for alpha in rs.roots}
    for c in cor:
        for i in range(n):
            # reflect c by s_i acting on coroots: c - <alpha_i, c> alpha_i^vee
            k = sum(c[j] * a[j][i] for j in range(n))
            img = tuple(c[m] - (k if m == i else 0) for m in range(n))
            assert img in cor


def test_pairing_values():
    a2 = build_root_system("A2")
    assert pairing(a2, (1, 0), a2.simple_coroot(2)) == -1
    g2 = build_root_system("G2")
    # alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3, <alpha_1, alpha_2^vee> = -1
    assert pairing(g2, (0, 1), g2.simple_coroot(1)) == -3
    assert pairing(g2, (1, 0), g2.simple_coroot(2)) == -1
    b2 = build_root_system("B2")
    assert pairing(b2, (1, 0), b2.simple_coroot(2)) == -2
    with pytest.raises(RootSystemError):
        pairing(a2, (1, 0, 0), (1, 0))


def test_in_parabolic_span():
    assert in_parabolic_span((1, 0), {1})
    assert not in_parabolic_span((1, 1), {1})
    assert not in_parabolic_span((1, 1, 1), {1, 3})
    assert in_parabolic_span((1, 0, 0), {1, 3})


@pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "Z"])
def test_invalid_types(bad):
    with pytest.raises(RootSystemError):
        CartanType.parse(bad)


def test_weyl_cap():
    assert CartanType.parse("E6").weyl_order > WEYL_ORDER_CAP
    with pytest.raises(RootSystemError, match="cap"):
        build_root_system("E6")
    with pytest.raises(RootSystemError):
        build_root_system("A8")


def test_not_a_root():
    with pytest.raises(RootSystemError):
        build_root_system("A2").coroot((2, 0))
