import pytest

from schubdist import weyl_group

# (type, parabolic, |W^P|) for every space the acceptance suite sweeps
SPACES = [
    ("A1", (), 2),
    ("A2", (), 6),
    ("A3", (), 24),
    ("B2", (), 8),
    ("G2", (), 12),
    ("A2", (2,), 3),      # P^2
    ("A3", (1, 3), 6),    # Gr(2,4)
    ("B2", (2,), 4),      # 3-dimensional quadric
]

SPACE_IDS = [f"{t}/{','.join(map(str, p)) or 'B'}" for t, p, _ in SPACES]


@pytest.fixture(params=SPACES, ids=SPACE_IDS)
def space(request):
    t, p, n = request.param
    return weyl_group(t), frozenset(p), n


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.VERDICTS):
        ok, detail = mod.VERDICTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
