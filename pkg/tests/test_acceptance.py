"""Acceptance criteria, one test per criterion, one PASS/FAIL line each.

The corpus sweep (criteria 1, 2 and 7) shares a module-scoped fixture that
runs the full pipeline once per graph and records scalar outcomes; each
criterion then asserts over those records.  Run with ``pytest -s
tests/test_acceptance.py`` to see the summary lines.
"""

import time

import pytest

from boxicity.boxes import prune, verify
from boxicity.cli import main
from boxicity.construction import ConstructOptions, construct_box_representation, pipeline_check
from boxicity.exact import exact_boxicity
from boxicity.graphs import (
    cocktail_party,
    complete,
    complete_multipartite,
    cycle,
    max_degree,
    path,
    random_bounded_degree,
)
from boxicity.intervals import is_interval_graph, verify_interval_representation
from boxicity.io import write_edge_list

SWEEP_SIZES = (1, 5, 10, 25, 50, 100, 200)
SWEEP_DEGREES = range(9)
SWEEP_SEEDS = range(32)

MULTIPARTITE_SIZES = [
    [2, 2], [3, 3], [2, 2, 2], [1, 2, 3], [4, 4],
    [2, 3, 4], [5, 5], [1, 1, 1, 1], [3, 3, 3], [2, 2, 2, 2],
]


def sweep_graphs():
    for n in SWEEP_SIZES:
        for dmax in SWEEP_DEGREES:
            for seed in SWEEP_SEEDS:
                yield random_bounded_degree(n, dmax, seed)
    for n in range(1, 31):
        yield path(n)
    for n in range(3, 33):
        yield cycle(n)
    for n in range(1, 13):
        yield complete(n)
    for sizes in MULTIPARTITE_SIZES:
        yield complete_multipartite(sizes)
    for k in range(1, 11):
        yield cocktail_party(k)


def class_lemma_holds(g, coloring):
    # no vertex may have two equally colored neighbors
    colors = coloring.colors
    for w in range(g.n):
        seen = set()
        for u in g.adj[w]:
            if colors[u] in seen:
                return False
            seen.add(colors[u])
    return True


@pytest.fixture(scope="module")
def sweep_records():
    records = []
    core_seconds = 0.0  # construct + verify only, the criterion-1 budget
    for g in sweep_graphs():
        t0 = time.perf_counter()
        raw, trace = construct_box_representation(
            g, ConstructOptions(prune=False, trace="slim")
        )
        pruned = prune(raw)
        ok_pruned = verify(g, pruned).ok
        core_seconds += time.perf_counter() - t0
        delta = max_degree(g)
        records.append(
            {
                "n": g.n,
                "delta": delta,
                "k": trace.k,
                "d_raw": raw.d,
                "d_pruned": pruned.d,
                "bound": 2 * delta * delta + 2,
                "verified_pruned": ok_pruned,
                "verified_raw": verify(g, raw).ok,
                "idempotent": prune(pruned) == pruned,
                "lemma": class_lemma_holds(g, trace.coloring),
                "pipeline": pipeline_check(g, trace),
            }
        )
    return records, core_seconds


def report(name, ok, detail=""):
    line = f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    print(line)


def test_criterion_1_soundness_sweep(sweep_records):
    records, core_seconds = sweep_records
    bad = [r for r in records if not (r["verified_pruned"] and r["d_pruned"] <= r["bound"])]
    ok = not bad and len(records) >= 2000 and core_seconds < 120.0
    report(
        "1 theorem soundness sweep",
        ok,
        f"{len(records)} graphs, {len(bad)} violations, {core_seconds:.1f}s",
    )
    assert len(records) >= 2000
    assert not bad
    assert core_seconds < 120.0


def test_criterion_2_proof_step_invariants(sweep_records):
    records, _ = sweep_records
    bad_k = [r for r in records if r["k"] > r["delta"] ** 2 + 1]
    bad_lemma = [r for r in records if not r["lemma"]]
    bad_pipeline = [r for r in records if not r["pipeline"]]
    ok = not bad_k and not bad_lemma and not bad_pipeline
    report(
        "2 proof-step invariants",
        ok,
        f"k-bound {len(bad_k)}, class-lemma {len(bad_lemma)}, "
        f"per-class/intersection {len(bad_pipeline)} violations",
    )
    assert not bad_k
    assert not bad_lemma
    assert not bad_pipeline


def test_criterion_3_roberts_values():
    t0 = time.perf_counter()
    v2, w2 = exact_boxicity(cocktail_party(2))
    ok2 = v2 == 2 and verify_interval_representation(cocktail_party(2), w2)[0]
    v3, w3 = exact_boxicity(cocktail_party(3))
    elapsed3 = time.perf_counter() - t0
    ok3 = v3 == 3 and verify_interval_representation(cocktail_party(3), w3)[0]
    ok = ok2 and ok3 and elapsed3 < 60.0
    report(
        "3 oracle matches the k-partite values",
        ok,
        f"K_2x2 -> {v2}, K_3x2 -> {v3}, {elapsed3:.2f}s",
    )
    assert ok2
    assert ok3
    assert elapsed3 < 60.0


def small_corpus():
    for n in range(1, 7):
        for dmax in range(6):
            for seed in range(6):
                yield random_bounded_degree(n, dmax, seed)
    # n=7 entries stay dense enough for the default enumeration budget
    for dmax in (3, 4, 5):
        for seed in range(12):
            g = random_bounded_degree(7, dmax, seed)
            if g.m >= 8:
                yield g
    for n in range(1, 8):
        yield path(n)
        yield complete(n)
    for n in range(3, 8):
        yield cycle(n)
    yield complete_multipartite([2, 2])
    yield complete_multipartite([2, 2, 2])
    yield complete_multipartite([1, 2, 2])
    yield complete_multipartite([3, 3])
    yield complete_multipartite([1, 1, 2])


def test_criterion_4_oracle_construction_sandwich():
    count = 0
    violations = []
    for g in small_corpus():
        value, witness = exact_boxicity(g)
        b, _ = construct_box_representation(g)
        if value > b.d:
            violations.append((g, value, b.d))
        if is_interval_graph(g)[0] and value > 1:
            violations.append((g, value, "interval"))
        if not verify_interval_representation(g, witness)[0]:
            violations.append((g, value, "witness"))
        count += 1
    ok = count >= 200 and not violations
    report(
        "4 oracle vs construction sandwich",
        ok,
        f"{count} graphs with n <= 7, {len(violations)} violations",
    )
    assert count >= 200
    assert not violations


def test_criterion_5_lower_bound_family():
    structural = all(
        max_degree(cocktail_party(k)) == 2 * k - 2 for k in range(1, 11)
    )
    oracle_ok = all(exact_boxicity(cocktail_party(k))[0] == k for k in (2, 3))
    ok = structural and oracle_ok
    # boxicity k against max degree 2k-2 means the family pins any
    # degree-based bound to at least delta/2 + 1
    report(
        "5 lower-bound family scaling",
        ok,
        "delta = 2k-2 for k in 1..10; oracle boxicity = k for k in {2, 3}",
    )
    assert structural
    assert oracle_ok


def test_criterion_6_performance_floor(tmp_path, capsys):
    g = random_bounded_degree(10000, 10, 7)
    graph_file = tmp_path / "large.txt"
    graph_file.write_text(write_edge_list(g), encoding="ascii")
    out_file = tmp_path / "large.rep"
    t0 = time.perf_counter()
    code = main(["construct", str(graph_file), "-o", str(out_file)])
    elapsed = time.perf_counter() - t0
    captured = capsys.readouterr().out
    ok = code == 0 and "verification: ok" in captured and elapsed < 10.0
    with capsys.disabled():
        report(
            "6 performance floor",
            ok,
            f"n=10000 dmax=10 construct+verify+report in {elapsed:.2f}s",
        )
    assert code == 0
    assert "verification: ok" in captured
    assert elapsed < 10.0


def test_criterion_7_pruning_safety(sweep_records):
    records, _ = sweep_records
    # raw and pruned both verify, so both represent exactly E(G)
    bad = [
        r
        for r in records
        if not (
            r["verified_raw"]
            and r["verified_pruned"]
            and r["d_pruned"] <= r["d_raw"]
            and r["idempotent"]
        )
    ]
    ok = not bad
    report("7 pruning safety", ok, f"{len(records)} graphs, {len(bad)} violations")
    assert not bad
