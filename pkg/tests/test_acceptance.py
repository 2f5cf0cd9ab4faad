"""Acceptance criteria, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v`` (the lines are printed even with
output capture on) or ``python tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from test_trees import prufer_count

from treegood import harness
from treegood.arrowing import ramsey, verify_witness
from treegood.cli import main
from treegood.coloring import EdgeColoring
from treegood.constructions import (
    blowup_3color,
    construction_I,
    construction_II,
    star_tree_witness,
)
from treegood.embeddings import lemma32_sweep
from treegood.errors import ClaimError
from treegood.extractor import check_certificate, extract_certificate
from treegood.graph import Graph
from treegood.targets import Clique, Star, TreeTarget
from treegood.thresholds import (
    Params,
    ceil_div,
    conj12_threshold,
    construction1_min_degree,
    construction2_min_degree,
    remark_window_check,
    star_size,
    t_range,
    thm34_threshold,
)
from treegood.trees import Tree, enumerate_trees

P3, P4 = Tree.path(3), Tree.path(4)


def _emit(line, capsys=None):
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


@contextmanager
def criterion(label, limit, capsys=None):
    """Time the block and print one PASS/FAIL line; re-raise any failure."""
    start = time.monotonic()
    state = {"detail": ""}
    try:
        yield state
    except BaseException as exc:
        _emit(f"FAIL  {label}  ({time.monotonic() - start:.2f}s)  {exc}".rstrip(), capsys)
        raise
    elapsed = time.monotonic() - start
    if elapsed > limit:
        _emit(f"FAIL  {label}  ({elapsed:.2f}s > {limit}s limit)", capsys)
        raise AssertionError(f"{label}: {elapsed:.2f}s exceeds {limit}s")
    _emit(f"PASS  {label}  ({elapsed:.2f}s)  {state['detail']}".rstrip(), capsys)


def check_1(capsys=None):
    cases = [
        ("r(P3,K3)", (TreeTarget(P3), Clique(3)), 5),
        ("r(K1,3,P3)", (Star(3), TreeTarget(P3)), 5),
        ("r(K1,5,P4)", (Star(5), TreeTarget(P4)), 7),
        ("r(K1,1,P3,K3)", (Star(1), TreeTarget(P3), Clique(3)), 5),
        ("r(K1,2,P4,K2)", (Star(2), TreeTarget(P4), Clique(2)), 4),
    ]
    with criterion("1 exact Ramsey values with witnesses at N-1", 60 * len(cases), capsys) as state:
        got = []
        for name, targets, expected in cases:
            start = time.monotonic()
            res = ramsey(targets)
            assert time.monotonic() - start < 60, f"{name} took too long"
            assert res.value == expected, f"{name} = {res.value}, expected {expected}"
            assert res.witness.order == expected - 1 and res.witness.host.is_complete()
            assert verify_witness(res.witness, targets), f"{name} witness fails"
            got.append(f"{name}={res.value}")
        state["detail"] = ", ".join(got)


def check_2(capsys=None):
    with criterion("2 blow-up lower bound on K8 for (K1,3, P3, K3)", 1, capsys) as state:
        c = blowup_3color(star_tree_witness(3, 1).coloring, 3)
        assert c.order == 8 and c.host.is_complete()
        assert verify_witness(c, (Star(3), TreeTarget(P3), Clique(3)))
        state["detail"] = "witness verified"


def _construction_I_literal(N):
    # the recipe at t = 1 for every N; outside [9, 12] its claims are reported, not enforced
    try:
        return construction_I(Params(3, 3, 1, N), check_window=False)
    except ClaimError as exc:
        return exc.discrepancy


def check_3(capsys=None):
    with criterion("3 clique-union colouring at (3,3,1), N in [9,16]", 5, capsys) as state:
        failures = []
        for N in range(9, 17):
            built = _construction_I_literal(N)
            formula = N - ceil_div(2 * ceil_div(N, 2), 3) - 1
            if built.computed_min_degree != formula:
                failures.append(f"N={N}: delta {built.computed_min_degree} != {formula}")
            if not verify_witness(built.coloring, (TreeTarget(P3), Clique(3))):
                failures.append(f"N={N}: red P3 present")
        state["detail"] = "all N"
        assert not failures, "; ".join(failures)


def check_3_window(capsys=None):
    # companion line: same N range with t taken from the window that contains N
    with criterion("3' clique-union colouring, N in [9,16] with t = t_range(N)", 5, capsys) as state:
        for N in range(9, 17):
            t = t_range(N, 3, 3)
            built = construction_I(Params(3, 3, t, N))
            assert built.computed_min_degree == construction1_min_degree(N, 3, t)
            assert verify_witness(built.coloring, (TreeTarget(P3), Clique(3)))
        state["detail"] = "t=1 for 9..12, t=2 for 13..16"


def check_4(capsys=None):
    with criterion("4 blue-clique colouring at (m=3, P3), N in {9, 12}", 1, capsys) as state:
        out = []
        for N, eps in ((9, 2), (12, 1)):
            built = construction_II(Params(3, 3, 1, N), P3)
            assert built.params["eps"] == eps, f"N={N}: eps {built.params['eps']}"
            assert built.computed_min_degree == construction2_min_degree(N, 3, 2, eps)
            assert verify_witness(built.coloring, (TreeTarget(P3), Clique(3)))
            out.append(f"N={N} eps={eps} delta={built.computed_min_degree}")
        state["detail"] = ", ".join(out)


def check_5(capsys=None):
    with criterion("5 three-colour campaign at (3,3,1,9), 500 samples", 600, capsys) as state:
        rep = harness.cmd_test_theorem13(3, 3, 1, 9, samples=500, seed=0)
        samples = [r for r in rep.rows if r.instance.startswith("sample")]
        controls = [r for r in rep.rows if r.instance.startswith("control")]
        assert len(samples) == 500
        assert all(r.status == "match" and r.computed.startswith("arrows") for r in samples)
        assert controls and all(r.computed.startswith("avoids") for r in controls)
        assert rep.exit_code == 0
        state["detail"] = f"500/500 arrow, control avoids, counts {rep.counts}"


def check_6(capsys=None):
    with criterion("6 extractor totality (3^10 on K5, 10^4 on K9)", 300, capsys) as state:
        edges = Graph.complete(5).edges()
        for colours in itertools.product(range(3), repeat=len(edges)):
            classes = [[], [], []]
            for e, col in zip(edges, colours):
                classes[col].append(e)
            c = EdgeColoring.from_class_edges(5, classes, host=Graph.complete(5))
            assert check_certificate(extract_certificate(c, 1, P3, 3), c)
        rng = random.Random(0)
        pairs = Graph.complete(9).edges()
        k9 = Graph.complete(9)
        for _ in range(10_000):
            c = EdgeColoring.from_map(k9, 3, {e: rng.randrange(3) for e in pairs})
            assert check_certificate(extract_certificate(c, 3, P3, 3), c)
        state["detail"] = "59049 + 10000 certificates valid"


def check_7(capsys=None):
    with criterion("7 greedy embedding exhaustive at order 6", 600, capsys) as state:
        hosts, instances = lemma32_sweep(6)
        state["detail"] = f"{hosts} hosts, {instances} embeddings, 0 failures"


def check_8(capsys=None):
    with criterion("8 arithmetic identity suites", 1, capsys) as state:
        for t in range(21):
            for P in range(1, 1001):
                assert P - P // (t + 2) == ceil_div((t + 1) * P, t + 2)
        for t in range(51):
            for n in range(2, 51):
                assert star_size(n, t, "A") + n - 2 == (t + 1) * (n - 1)
                assert star_size(n, t, "B") + n - 3 == (t + 1) * (n - 1)
        for n in range(2, 11):
            for m in range(2, 11):
                span = (n - 1) * (m - 1)
                for N in range(span + 1, 12 * span + 1):
                    t = t_range(N, n, m)
                    assert Params(n, m, t, N).in_window
                    assert not Params(n, m, t + 1, N).in_window and (t == 0 or not Params(n, m, t - 1, N).in_window)
        remark = 0
        for n in range(1, 11):
            for m in range(2, 11):
                for t in range(11):
                    base = (t + 1) * max(n - 1, 0) * (m - 1)
                    for N in range(max(base - 2, 1), base + m + 2):
                        if remark_window_check(n, m, t, N):
                            remark += 1
                            assert thm34_threshold(N, n, t) <= conj12_threshold(N, m, t)
        state["detail"] = f"{remark} narrow-window instances"


def check_9(capsys=None):
    with criterion("9 tree counts n=1..8 against the Pruefer oracle", 10, capsys) as state:
        expected = [1, 1, 1, 2, 3, 6, 11, 23]
        ours = [len(enumerate_trees(n)) for n in range(1, 9)]
        oracle = [prufer_count(n) for n in range(1, 9)]
        assert ours == oracle == expected, f"{ours} vs {oracle}"
        state["detail"] = ",".join(map(str, ours))


def check_10(tmp, capsys=None):
    campaigns = [
        ["verify-ramsey", "--n", "3-4", "--m", "2-3", "--t", "0"],
        ["verify-construction", "--n", "3", "--m", "3", "--t", "1", "--N", "9-12"],
        ["test-theorem13", "--n", "3", "--m", "3", "--t", "1", "--N", "9", "--samples", "50", "--seed", "11"],
        ["test-theorem34", "--n", "4", "--m", "3", "--t", "0", "--N", "7", "--samples", "20", "--seed", "11"],
        ["probe-conjecture", "--which", "1.2", "--n", "3", "--m", "3", "--t", "1", "--N", "9", "--samples", "50",
         "--seed", "11"],
    ]
    with criterion("10 byte-identical reports for repeated seeded campaigns", 600, capsys) as state:
        for i, argv in enumerate(campaigns):
            for fmt in ("csv", "json"):
                outs = []
                for rep in ("a", "b"):
                    d = Path(tmp) / f"{i}{fmt}{rep}"
                    assert main(argv + ["--format", fmt, "--out", str(d)]) == 0
                    files = sorted(p for p in d.rglob("*") if p.is_file())
                    outs.append([(p.relative_to(d), p.read_bytes()) for p in files])
                assert outs[0] == outs[1], f"{argv[0]} {fmt} differs"
        state["detail"] = f"{len(campaigns)} campaigns x 2 formats"


def test_criterion_1(capsys):
    check_1(capsys)


def test_criterion_2(capsys):
    check_2(capsys)


@pytest.mark.xfail(strict=True, reason="N=13..16 lie outside the t=1 window; the t=1 recipe then has red triangles")
def test_criterion_3(capsys):
    check_3(capsys)


def test_criterion_3_window(capsys):
    check_3_window(capsys)


def test_criterion_4(capsys):
    check_4(capsys)


def test_criterion_5(capsys):
    check_5(capsys)


def test_criterion_6(capsys):
    check_6(capsys)


def test_criterion_7(capsys):
    check_7(capsys)


def test_criterion_8(capsys):
    check_8(capsys)


def test_criterion_9(capsys):
    check_9(capsys)


def test_criterion_10(tmp_path, capsys):
    check_10(tmp_path, capsys)


if __name__ == "__main__":
    import tempfile

    failed = 0
    checks = [check_1, check_2, check_3, check_3_window, check_4, check_5, check_6, check_7, check_8, check_9]
    for fn in checks:
        try:
            fn()
        except Exception:
            failed += 1
    with tempfile.TemporaryDirectory() as tmp:
        try:
            check_10(tmp)
        except Exception:
            failed += 1
    sys.exit(1 if failed else 0)
