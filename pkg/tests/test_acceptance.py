"""Acceptance criteria, one test each.

Every test appends a single PASS/FAIL line to the run summary.  Limits
below are pinned: exact rational equality everywhere, and wall-clock
budgets per criterion.
"""

from __future__ import annotations

import json
import random
import time

from conftest import ACCEPTANCE_LINES, fixture_path, load
from cubicsoft.classify import TheoremId, classify, theorem1_witness
from cubicsoft.cli import main
from cubicsoft.document import dumps, load_cubic_soft_set
from cubicsoft.verify import law_suite, proposition_suite, random_soft_set

SEED = 20240611

GOLDEN_BUDGET_S = 1.0
CLASSIFY_BUDGET_S = 1.0
CLEAN_THEOREM_BUDGET_S = 5.0
AMBIGUOUS_BUDGET_S = 30.0
PROPOSITION_BUDGET_S = 30.0
LAW_BUDGET_S = 30.0
DETERMINISM_BUDGET_S = 10.0
SAMPLES = 10_000
ROUND_TRIP_DOCS = 1_000


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"criterion {n}: {'PASS' if ok else 'FAIL'} | {detail}")
    print(ACCEPTANCE_LINES[-1])


def fx(name):
    return str(fixture_path(name))


# (op, inputs, expected fixture, number of result tables)
GOLDEN = [
    ("p-union", ["p_union_f", "p_union_g"], "p_union_expected", 3),
    ("p-intersection", ["p_intersection_f", "p_intersection_g"], "p_intersection_expected", 3),
    ("r-union", ["r_union_f", "r_union_g"], "r_union_expected", 3),
    ("r-intersection", ["r_intersection_f", "r_intersection_g"], "r_intersection_expected", 3),
    ("p-or", ["product_f", "product_g"], "p_or_expected", 1),
    ("r-or", ["product_f", "product_g"], "r_or_expected", 1),
    ("p-and", ["product_f", "product_g"], "p_and_expected", 1),
    ("r-and", ["product_f", "product_g"], "r_and_expected", 1),
    ("complement", ["complement_f"], "complement_expected", 3),
    ("p-union", ["star_f", "star_g"], "star_p_union_expected", 3),
]


def _normalized(path) -> str:
    return json.dumps(json.loads(open(path, encoding="utf-8").read()), sort_keys=True)


def test_criterion_1_golden_tables(tmp_path):
    ok, tables, failures = True, 0, []
    start = time.perf_counter()
    for i, (op, inputs, expected, n_tables) in enumerate(GOLDEN):
        out = tmp_path / f"{i}.json"
        code = main(["op", op, *map(fx, inputs), "-o", str(out)])
        same = code == 0 and _normalized(out) == _normalized(fixture_path(expected))
        if same:
            tables += n_tables
        else:
            failures.append(expected)
            ok = False
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < GOLDEN_BUDGET_S
    record(1, ok, f"golden tables reproduced exactly: {tables}/22, {elapsed:.3f}s (< {GOLDEN_BUDGET_S}s)"
           + (f", mismatched: {failures}" if failures else ""))
    assert ok


def test_criterion_2_classification_goldens():
    start = time.perf_counter()
    c2, c3 = classify(load("icss_table")), classify(load("ecss_table"))
    first = load("first_example")
    w = theorem1_witness(first)
    strict = w is not None and first[w].ivf.lo < first[w].fuzzy < first[w].ivf.hi
    elapsed = time.perf_counter() - start
    ok = (
        (c2.internal, c2.external) == (True, False)
        and (c3.internal, c3.external) == (False, True)
        and strict
        and elapsed < CLASSIFY_BUDGET_S
    )
    record(2, ok, f"ICSS/ECSS goldens and strict witness at {w[0].label if w else None},{w[1] if w else None}: "
           f"{elapsed:.3f}s (< {CLASSIFY_BUDGET_S}s)")
    assert ok


CLEAN = ["T-PU-ICSS", "T-PI-ICSS", "T-COMP-ICSS", "T-COMP-ECSS", "T-RU-ICSS", "T-RI-ICSS",
         "T-ICSS-RU-ECSS", "T-ICSS-RI-ECSS"]


def test_criterion_3_clean_theorems(tmp_path):
    ok, notes = True, []
    for tid in CLEAN:
        out = tmp_path / f"{tid}.json"
        start = time.perf_counter()
        code = main(["verify", tid, "--grid", "2", "--universe", "1", "--params", "1", "-o", str(out)])
        elapsed = time.perf_counter() - start
        doc = json.loads(out.read_text())
        expected_n = 18 if "COMP" in tid else 324
        good = (
            code == 0
            and doc["counterexample_count"] == 0
            and doc["instances_tested"] == expected_n
            and doc["hypothesis_holds"] > 0
            and elapsed < CLEAN_THEOREM_BUDGET_S
        )
        ok = ok and good
        notes.append(f"{tid} n={doc['instances_tested']} cex={doc['counterexample_count']} {elapsed:.2f}s")
    record(3, ok, f"zero counterexamples at k=2 (< {CLEAN_THEOREM_BUDGET_S}s each): " + "; ".join(notes))
    assert ok


AMBIGUOUS = ["T-PI-ECSS", "T-PU-ECSS", "T-RU-ECSS", "T-RI-ECSS", "T-PI-BOTH", "T-RI-BOTH",
             "T-STAR-PU-ICSS", "T-STAR-PI-ICSS", "T-STAR-PU-ECSS"]


def test_criterion_4_ambiguous_theorems(tmp_path):
    ok, notes = True, []
    start = time.perf_counter()
    for tid in AMBIGUOUS:
        clean = []
        for interp in ("as-written", "open-open", "closed-closed"):
            out = tmp_path / f"{tid}-{interp}.json"
            code = main(["verify", tid, "--grid", "2", "--universe", "1", "--params", "1",
                         "--interp", interp, "-o", str(out)])
            doc = json.loads(out.read_text())
            if code not in (0, 4) or doc["instances_tested"] != 324:
                ok = False
            if doc["counterexample_count"] == 0 and doc["hypothesis_holds"] > 0:
                clean.append(interp)
        ok = ok and bool(clean)
        notes.append(f"{tid} clean under {','.join(clean) or 'none'}")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < AMBIGUOUS_BUDGET_S
    record(4, ok, f"{elapsed:.2f}s (< {AMBIGUOUS_BUDGET_S}s total): " + "; ".join(notes))
    assert ok


def test_criterion_5_proposition_suite():
    start = time.perf_counter()
    res = proposition_suite(SAMPLES, SEED)
    elapsed = time.perf_counter() - start
    failed = {n: r.failed for n, r in res.items() if r.failed}
    ok = len(res) == 10 and not failed and all(r.passed == SAMPLES for r in res.values())
    ok = ok and elapsed < PROPOSITION_BUDGET_S
    record(5, ok, f"10 properties x {SAMPLES} constructed instances, failures={failed or 0}, seed={SEED}, "
           f"{elapsed:.2f}s (< {PROPOSITION_BUDGET_S}s)")
    assert ok


def test_criterion_6_algebraic_laws():
    start = time.perf_counter()
    res = law_suite(SAMPLES, SEED)
    elapsed = time.perf_counter() - start
    failed = {k: r.failed for k, r in res.items() if r.failed}
    ok = len(res) == 5 and not failed and all(r.passed == SAMPLES for r in res.values())
    ok = ok and elapsed < LAW_BUDGET_S
    record(6, ok, f"{len(res)} laws x {SAMPLES} instances on the 1/100 grid, failures={failed or 0}, "
           f"{elapsed:.2f}s (< {LAW_BUDGET_S}s)")
    assert ok


def test_criterion_7_determinism_and_round_trip(tmp_path):
    start = time.perf_counter()
    runs = [
        ["verify", "T-RU-ICSS", "--samples", "1000", "--seed", "7"],
        ["verify", "T-PI-ECSS", "--grid", "2", "--interp", "closed-closed"],
        ["verify", "T-STAR-PU-ECSS", "--samples", "500", "--seed", "7", "--universe", "2", "--params", "2"],
    ]
    identical = 0
    for i, argv in enumerate(runs):
        a, b = tmp_path / f"{i}a.json", tmp_path / f"{i}b.json"
        main(argv + ["-o", str(a)])
        main(argv + ["-o", str(b)])
        identical += a.read_bytes() == b.read_bytes()
    rng = random.Random(SEED)
    round_trips = 0
    for _ in range(ROUND_TRIP_DOCS):
        s = random_soft_set(rng)
        text = dumps(s)
        back = load_cubic_soft_set(text)
        round_trips += back == s and dumps(back) == text
    elapsed = time.perf_counter() - start
    ok = identical == len(runs) and round_trips == ROUND_TRIP_DOCS and elapsed < DETERMINISM_BUDGET_S
    record(7, ok, f"byte-identical reruns {identical}/{len(runs)}, round trips {round_trips}/{ROUND_TRIP_DOCS}, "
           f"{elapsed:.2f}s (< {DETERMINISM_BUDGET_S}s)")
    assert ok


def test_theorem_registry_covers_acceptance_lists():
    assert set(CLEAN) | set(AMBIGUOUS) <= {t.value for t in TheoremId}
