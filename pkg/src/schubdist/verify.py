"""
Quantum K-theory structure-constant tables and the checks run against them.

A table lists products ``O^u * O^v = sum N^{w,d}_{u,v} q^d O^w`` in a small
text format::

    # comments start with '#'
    type A1
    parabolic
    e | e | e | 0 | 1
    e | 1 | 1 | 0 | 1
    1 | 1 | e | 1 | 1

Each term line is ``u | v | w | d1,d2,... | N`` with Weyl group elements as
comma-separated reduced words (``e`` for the identity) and the degree indexed
by the simple roots outside the parabolic subset, in increasing order.  The
table is complete: a pair with no lines has product zero.  A pair may be
listed in either order.

The checks are necessary conditions only.  The Euler characteristic cannot
tell ``q O^e`` from ``q O^{s1}`` on P^1, so a passing table is not proven
correct.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from importlib import resources
from itertools import product as cartesian
from pathlib import Path

from .distance import Degree, complement, dist
from .qkcore import KClass, euler_char
from .rootsys import CartanType
from .weyl import WeylElement, WeylGroup, parabolic_subset, parse_word, weyl_group

__all__ = [
    "TableError", "QKTable", "parse_table", "load_table", "bundled_table",
    "product", "mobius_coeffs", "CheckResult", "Report", "check_euler_dist",
    "check_sumcoef", "check_ringhom", "run_checks", "format_poly", "CHECKS",
]


class TableError(ValueError):
    def __init__(self, message: str, source: str = "<table>", line: int | None = None,
                 column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = source if line is None else f"{source}:{line}:{column or 1}"
        super().__init__(f"{where}: {message}")


# (w, degree) -> N
Row = dict[tuple[WeylElement, Degree], int]


@dataclass
class QKTable:
    group: WeylGroup
    parabolic: frozenset[int]
    entries: dict[tuple[WeylElement, WeylElement], Row]
    header: list[str] = field(default_factory=list)

    @property
    def labels(self) -> tuple[WeylElement, ...]:
        return self.group.enumerate_WP(self.parabolic)

    @property
    def degree_indices(self) -> tuple[int, ...]:
        return complement(self.group, self.parabolic)

    def row(self, u: WeylElement, v: WeylElement) -> Row:
        for w in (u, v):
            if not self.group.is_min_rep(w, self.parabolic):
                raise KeyError(f"no table row for label {w}: not in W^P")
        return self.entries.get((u, v), {})

    def n_product_rows(self) -> int:
        """Number of unordered pairs with at least one term."""
        return len({frozenset((u, v)) for (u, v), row in self.entries.items() if row})

    def validate(self, source: str = "<table>"):
        """Raise :class:`TableError` on a symmetry or unit violation."""
        for (u, v), row in self.entries.items():
            if self.entries.get((v, u), {}) != row:
                raise TableError(f"symmetry violation: rows ({u}, {v}) and ({v}, {u}) differ",
                                 source)
        e = self.group.identity
        zero = Degree.zero(self.degree_indices)
        for v in self.labels:
            if self.entries.get((e, v), {}) != {(v, zero): 1}:
                raise TableError(f"unit violation: O^e * O^{{{v}}} != O^{{{v}}}", source)

    def to_text(self) -> str:
        out = list(self.header)
        out.append(f"type {self.group.cartan_type}")
        out.append("parabolic " + ",".join(map(str, sorted(self.parabolic))))
        done = set()
        order = {w: k for k, w in enumerate(self.labels)}
        for (u, v) in sorted(self.entries, key=lambda uv: (order[uv[0]], order[uv[1]])):
            if frozenset((u, v)) in done:
                continue
            done.add(frozenset((u, v)))
            for (w, d), n in sorted(self.entries[u, v].items(),
                                    key=lambda t: (t[0][1].values, order[t[0][0]])):
                degree = ",".join(map(str, d.values))
                out.append(f"{u} | {v} | {w} | {degree} | {n}")
        return "\n".join(out) + "\n"


def _field_columns(line: str) -> list[int]:
    """1-based column of the first non-blank character of each '|' field."""
    cols, start = [], 0
    for part in line.split("|"):
        cols.append(start + len(part) - len(part.lstrip()) + 1)
        start += len(part) + 1
    return cols


def parse_table(text: str, source: str = "<table>", strict: bool = True) -> QKTable:
    """Parse table text.  With ``strict=False`` symmetry and unit checks are skipped
    (pairs listed in one order only are still mirrored)."""
    ctype = None
    parabolic_text = None
    header = []
    raw: dict[tuple[WeylElement, WeylElement], Row] = {}
    group = p = None

    def fail(msg, lineno, col=1):
        raise TableError(msg, source, lineno, col)

    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            if line.strip().startswith("#") and group is None:
                header.append(line.rstrip())
            continue
        if group is None:
            key, _, rest = body.partition(" ")
            if key == "type":
                try:
                    ctype = CartanType.parse(rest)
                except ValueError as exc:
                    fail(str(exc), lineno, len(key) + 2)
            elif key == "parabolic":
                parabolic_text = rest.strip()
            else:
                if ctype is None or parabolic_text is None:
                    fail("expected 'type' and 'parabolic' header lines before terms", lineno)
            if ctype is not None and parabolic_text is not None:
                try:
                    group = weyl_group(ctype)
                    p = parabolic_subset(parabolic_text, group.rank)
                except ValueError as exc:
                    fail(str(exc), lineno)
                idx = complement(group, p)
            if key in ("type", "parabolic"):
                continue

        fields = [f.strip() for f in body.split("|")]
        cols = _field_columns(line)
        if len(fields) != 5:
            fail(f"expected 5 '|'-separated fields, found {len(fields)}", lineno)
        labels = []
        for k in range(3):
            try:
                w = group.from_word(parse_word(fields[k]))
            except ValueError as exc:
                fail(f"unknown Weyl label {fields[k]!r}: {exc}", lineno, cols[k])
            if not group.is_min_rep(w, p):
                fail(f"unknown Weyl label {fields[k]!r}: not a minimal coset representative",
                     lineno, cols[k])
            labels.append(w)
        try:
            dvals = tuple(int(x) for x in fields[3].split(",") if x.strip())
        except ValueError:
            fail(f"cannot parse degree {fields[3]!r}", lineno, cols[3])
        if len(dvals) != len(idx):
            fail(f"degree {fields[3]!r} must have {len(idx)} components", lineno, cols[3])
        if any(x < 0 for x in dvals):
            fail(f"ineffective degree {fields[3]!r}", lineno, cols[3])
        try:
            n = int(fields[4])
        except ValueError:
            fail(f"cannot parse coefficient {fields[4]!r}", lineno, cols[4])
        u, v, w = labels
        row = raw.setdefault((u, v), {})
        key = (w, Degree(idx, dvals))
        row[key] = row.get(key, 0) + n

    if group is None:
        raise TableError("missing 'type' or 'parabolic' header", source)

    entries: dict[tuple[WeylElement, WeylElement], Row] = {}
    for (u, v), row in raw.items():
        row = {k: n for k, n in row.items() if n}
        entries[u, v] = row
    for (u, v), row in list(entries.items()):
        if (v, u) not in raw:
            entries[v, u] = dict(row)

    table = QKTable(group, p, entries, header)
    if strict:
        table.validate(source)
    return table


def load_table(path: str | Path, strict: bool = True) -> QKTable:
    path = Path(path)
    return parse_table(path.read_text(encoding="utf-8"), str(path), strict)


def bundled_table(name: str) -> QKTable:
    """Load a table shipped with the package: ``"p1"`` or ``"p2"``."""
    text = resources.files("schubdist").joinpath("data").joinpath(f"qk_{name}.txt").read_text("utf-8")
    return parse_table(text, f"qk_{name}.txt")


def product(table: QKTable, a: KClass, b: KClass) -> dict[Degree, KClass]:
    """Expand ``a * b`` bilinearly through the table; the result is in the opposite basis."""
    a, b = a.to_opposite(), b.to_opposite()
    acc: dict[Degree, dict[WeylElement, int]] = defaultdict(lambda: defaultdict(int))
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            for (w, d), n in table.row(u, v).items():
                acc[d][w] += cu * cv * n
    out = {}
    for d, terms in acc.items():
        k = KClass(table.group, table.parabolic, terms)
        if not k.is_zero():
            out[d] = k
    return out


def mobius_coeffs(group: WeylGroup, parabolic, v: WeylElement) -> dict[WeylElement, int]:
    """Coefficients ``f_z`` with ``O^v = sum_z f_z O_z``.

    Pairing both sides with ``O^u`` gives ``sum_{z >= u} f_z = [v <= dual(u)]``,
    a unitriangular system solved from the top of W^P downward.
    """
    p = parabolic_subset(parabolic, group.rank)
    wp = group.enumerate_WP(p)
    if not group.is_min_rep(v, p):
        raise ValueError(f"{v} is not a minimal coset representative")
    f: dict[WeylElement, int] = {}
    for u in reversed(wp):
        rhs = int(group.bruhat_leq(v, group.dual(u, p)))
        f[u] = rhs - sum(fz for z, fz in f.items() if group.bruhat_leq(u, z))
    return {z: fz for z, fz in f.items() if fz}


def format_poly(poly: dict[Degree, int]) -> str:
    terms = [(d, c) for d, c in poly.items() if c]
    if not terms:
        return "0"
    terms.sort(key=lambda t: (t[0].total(), t[0].values))
    return " + ".join(f"{c}*q^{d}" if c != 1 else f"q^{d}" for d, c in terms)


@dataclass
class CheckResult:
    check: str
    u: str
    v: str
    expected: str
    actual: str
    passed: bool

    def tsv(self) -> str:
        return "\t".join([self.check, self.u, self.v, self.expected, self.actual,
                          "pass" if self.passed else "FAIL"])


@dataclass
class Report:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def extend(self, other: Report) -> Report:
        self.results.extend(other.results)
        return self

    def summary(self) -> list[str]:
        counts: dict[str, list[int]] = {}
        for r in self.results:
            c = counts.setdefault(r.check, [0, 0])
            c[0 if r.passed else 1] += 1
        lines = []
        for check, (ok, bad) in counts.items():
            line = f"{check}\t{ok} passed\t{bad} failed"
            first = next((r for r in self.results if r.check == check and not r.passed), None)
            if first is not None:
                line += f"\tfirst witness: u={first.u} v={first.v} expected {first.expected}, got {first.actual}"
            lines.append(line)
        return lines

    def to_json(self) -> str:
        return json.dumps({"passed": self.passed,
                           "results": [asdict(r) for r in self.results]}, indent=2)


def _chi_by_degree(prod: dict[Degree, KClass]) -> dict[Degree, int]:
    out = {d: euler_char(k) for d, k in prod.items()}
    return {d: c for d, c in out.items() if c}


def check_euler_dist(table: QKTable) -> Report:
    """``chi(O^u * O_v) = q^dist(u, v)`` for every pair of labels."""
    g, p = table.group, table.parabolic
    report = Report()
    for u, v in cartesian(table.labels, repeat=2):
        prod = product(table, KClass.opposite(g, p, u), KClass.schubert(g, p, v))
        actual = _chi_by_degree(prod)
        expected = {dist(g, u, v, p): 1}
        report.results.append(CheckResult("euler", str(u), str(v), format_poly(expected),
                                          format_poly(actual), actual == expected))
    return report


def check_sumcoef(table: QKTable) -> Report:
    """Per-degree sums of structure constants against ``sum_z f_z(v) q^dist(u, z)``, and total 1."""
    g, p = table.group, table.parabolic
    report = Report()
    for u, v in cartesian(table.labels, repeat=2):
        sums: dict[Degree, int] = defaultdict(int)
        for (w, d), n in table.row(u, v).items():
            sums[d] += n
        sums = {d: s for d, s in sums.items() if s}
        expected: dict[Degree, int] = defaultdict(int)
        for z, fz in mobius_coeffs(g, p, v).items():
            expected[dist(g, u, z, p)] += fz
        expected = {d: s for d, s in expected.items() if s}
        # sum_z f_z = chi(O^v) = 1, so the per-degree identity forces the total
        assert sum(expected.values()) == 1, (u, v, expected)
        total = sum(sums.values())
        report.results.append(CheckResult("sumcoef-degree", str(u), str(v),
                                          format_poly(expected), format_poly(sums),
                                          sums == expected))
        report.results.append(CheckResult("sumcoef-total", str(u), str(v), "1", str(total),
                                          total == 1))
    return report


def _hat_chi_row(table: QKTable, u: WeylElement, v: WeylElement) -> int:
    # q_beta -> 1 on each term, then sum
    return sum(table.row(u, v).values())


def check_ringhom(table: QKTable) -> Report:
    """The q -> 1 specialization of chi is multiplicative on pairs and on triple products."""
    report = Report()
    labels = table.labels
    for u, v in cartesian(labels, repeat=2):
        val = _hat_chi_row(table, u, v)
        report.results.append(CheckResult("ringhom", str(u), str(v), "1", str(val), val == 1))
    for u, v, w in cartesian(labels, repeat=3):
        # (O^u * O^v) * O^w, expanding each q^d O^x term through the table again
        val = 0
        for (x, _d), n in table.row(u, v).items():
            val += n * _hat_chi_row(table, x, w)
        report.results.append(CheckResult("ringhom-triple", f"{u}*{v}", str(w), "1", str(val),
                                          val == 1))
    return report


CHECKS = {
    "euler": check_euler_dist,
    "sumcoef": check_sumcoef,
    "ringhom": check_ringhom,
}


def run_checks(table: QKTable, which: str = "all") -> Report:
    names = list(CHECKS) if which == "all" else [which]
    report = Report()
    for name in names:
        report.extend(CHECKS[name](table))
    return report
