import itertools
import json

import pytest

from schubdist.distance import Degree, dist
from schubdist.qkcore import KClass
from schubdist.verify import (
    TableError, bundled_table, check_euler_dist, check_ringhom, check_sumcoef, load_table,
    mobius_coeffs, parse_table, product, run_checks,
)
from schubdist.weyl import weyl_group

P1 = """\
type A1
parabolic
e | e | e | 0 | 1
e | 1 | 1 | 0 | 1
1 | 1 | e | 1 | 1
"""

POINT = """\
type A2
parabolic 1,2
e | e | e |  | 1
"""


def term_lines(text):
    lines = text.splitlines()
    return [k for k, line in enumerate(lines) if "|" in line and not line.startswith("#")]


def corruptions(text):
    """Every single-entry change: N +- 1 and each degree component +- 1."""
    lines = text.splitlines()
    for k in term_lines(text):
        fields = [f.strip() for f in lines[k].split("|")]
        for delta in (1, -1):
            f = list(fields)
            f[4] = str(int(f[4]) + delta)
            yield f"line {k + 1} N{delta:+d}", _replace(lines, k, f)
            dv = [int(x) for x in f[3].split(",") if x] if fields[3] else []
            for j in range(len(dv)):
                f = list(fields)
                d2 = list(dv)
                d2[j] += delta
                f[3] = ",".join(map(str, d2))
                yield f"line {k + 1} d{j}{delta:+d}", _replace(lines, k, f)


def _replace(lines, k, fields):
    out = list(lines)
    out[k] = " | ".join(fields)
    return "\n".join(out) + "\n"


def test_load_bundled_p1():
    t = bundled_table("p1")
    assert t.n_product_rows() == 3
    assert len(t.labels) == 2
    assert parse_table(t.to_text()).entries == t.entries


def test_load_from_path(tmp_path):
    path = tmp_path / "p1.txt"
    path.write_text(P1)
    assert load_table(path).entries == bundled_table("p1").entries


@pytest.mark.parametrize("text,match", [
    (P1.replace("1 | 1 | e | 1 | 1", "1 | 1 | e | -1 | 1"), "ineffective degree"),
    (P1.replace("e | e | e | 0 | 1\n", ""), "unit violation"),
    (P1 + "1 | e | 1 | 1 | 1\n", "symmetry violation"),
    (P1.replace("1 | 1 | e", "1 | 2 | e"), "unknown Weyl label"),
    (P1.replace("1 | 1 | e | 1 | 1", "1 | 1 | e | 1,0 | 1"), "components"),
    (P1.replace("1 | 1 | e | 1 | 1", "1 | 1 | e | 1"), "5 '|'-separated"),
    (P1.replace("1 | 1 | e | 1 | 1", "1 | 1 | e | x | 1"), "cannot parse degree"),
    (P1.replace("type A1\n", ""), "header"),
    (P1.replace("type A1", "type Q1"), "Cartan"),
])
def test_load_errors(text, match):
    with pytest.raises(TableError, match=match):
        parse_table(text)


def test_error_reports_line_and_column():
    with pytest.raises(TableError) as info:
        parse_table(P1.replace("1 | 1 | e | 1 | 1", "1 | 1 | e | -1 | 1"), "t.txt")
    assert info.value.line == 5
    assert info.value.column == 13
    assert str(info.value).startswith("t.txt:5:13:")


def test_labels_must_be_minimal_representatives():
    text = "type A2\nparabolic 2\ne | e | e | 0 | 1\n2 | e | e | 0 | 1\n"
    with pytest.raises(TableError, match="minimal coset"):
        parse_table(text)


def test_product():
    t = bundled_table("p1")
    W, p = t.group, t.parabolic
    e, s1 = W.identity, W.s(1)
    one = KClass.opposite(W, p, e)
    pt = KClass.opposite(W, p, s1)
    zero = Degree((1,), (0,))
    assert product(t, one, pt) == {zero: pt}
    assert product(t, pt, pt) == {Degree((1,), (1,)): one}
    assert product(t, 2 * pt, pt) == {Degree((1,), (1,)): 2 * one}
    # O_e is the point class O^{s1}
    assert product(t, pt, KClass.schubert(W, p, e)) == product(t, pt, pt)
    g = one + pt
    assert product(t, g, one) == {zero: g}


def test_checks_pass_on_bundled_tables():
    for name in ("p1", "p2"):
        t = bundled_table(name)
        for check in (check_euler_dist, check_sumcoef, check_ringhom):
            assert check(t).passed, name


def test_p1_sumcoef_values():
    t = bundled_table("p1")
    r = {(x.check, x.u, x.v): x for x in check_sumcoef(t).results}
    assert r["sumcoef-degree", "1", "1"].actual == "q^(1)"
    assert r["sumcoef-total", "1", "1"].actual == "1"
    assert r["sumcoef-degree", "e", "1"].actual == "q^(0)"


def test_point_variety_table():
    t = parse_table(POINT)
    assert len(t.labels) == 1
    assert run_checks(t).passed


def test_euler_fails_on_q_squared():
    t = parse_table(P1.replace("1 | 1 | e | 1 | 1", "1 | 1 | e | 2 | 1"))
    r = check_euler_dist(t)
    assert not r.passed
    witness = r.failures()[0]
    assert (witness.u, witness.v) == ("1", "e")
    assert witness.actual == "q^(2)" and witness.expected == "q^(1)"


def test_sumcoef_total_two_fails():
    t = parse_table(P1.replace("1 | 1 | e | 1 | 1", "1 | 1 | e | 1 | 2"))
    r = check_sumcoef(t)
    assert any(x.check == "sumcoef-total" and x.actual == "2" for x in r.failures())


def test_ringhom_empty_row_fails():
    t = parse_table(P1.replace("1 | 1 | e | 1 | 1\n", ""))
    r = check_ringhom(t)
    assert not r.passed
    assert r.failures()[0].actual == "0"


@pytest.mark.parametrize("name", ["p1", "p2"])
def test_every_corruption_is_caught(name):
    text = bundled_table(name).to_text()
    n = 0
    for label, bad in corruptions(text):
        try:
            t = parse_table(bad, strict=False)
        except TableError:
            continue
        assert not run_checks(t).passed, label
        n += 1
    assert n >= 6


def test_json_report():
    rep = json.loads(run_checks(bundled_table("p1")).to_json())
    assert rep["passed"] is True
    assert set(rep["results"][0]) == {"check", "u", "v", "expected", "actual", "passed"}


def test_mobius_examples():
    W = weyl_group("A1")
    assert mobius_coeffs(W, (), W.s(1)) == {W.identity: 1}
    W = weyl_group("A3")
    p = {1, 3}
    top = W.enumerate_WP(p)[-1]
    assert mobius_coeffs(W, p, W.identity) == {top: 1}


@pytest.mark.parametrize("name,p", [("A2", ()), ("A3", ()), ("B2", (2,)), ("G2", ()),
                                    ("A3", (1, 3))])
def test_mobius_round_trip(name, p):
    W = weyl_group(name)
    wp = W.enumerate_WP(p)
    for v in wp:
        f = mobius_coeffs(W, p, v)
        assert sum(f.values()) == 1
        # sum_z f_z O^{dual(z)} paired with O^u
        for u in wp:
            paired = sum(fz * int(W.bruhat_leq(u, z)) for z, fz in f.items())
            assert paired == int(W.bruhat_leq(v, W.dual(u, p)))


def test_euler_and_sumcoef_agree():
    for name in ("p1", "p2"):
        t = bundled_table(name)
        W, p = t.group, t.parabolic
        for u, v in itertools.product(t.labels, repeat=2):
            moebius = {}
            for z, fz in mobius_coeffs(W, p, v).items():
                d = dist(W, u, z, p)
                moebius[d] = moebius.get(d, 0) + fz
            chi = {}
            for d, k in product(t, KClass.opposite(W, p, u), KClass.opposite(W, p, v)).items():
                chi[d] = sum(k.terms.values())
            assert {d: c for d, c in chi.items() if c} == {d: c for d, c in moebius.items() if c}
