"""Acceptance battery, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed at the end of the
pytest run (see conftest.py) and when this file is run as a script.
"""

import itertools
import random
import time

import sympy

from dihedra.bar_thh import (
    build_bar, homology_table, matmul, smith_normal_form, verify_bar_suite,
)
from dihedra.crossed_simplicial import verify_crossed_suite
from dihedra.dn_words import CommutationContext, normalize, rewrite_oracle, verify_dn_suite
from dihedra.free_monad import builtin_operads, filtration_census, monad_law_suite
from dihedra.matrix_trace import enumerate_matrices, verify_trace_suite
from dihedra.perm_core import (
    HYPEROCTAHEDRAL, SYMMETRIC, Permutation, box_model_check, cyclic_group_monoid,
    five_formulas_check, iterated_composition_check, perm_compose_i, trivial_monoid,
    verify_hyper_suite,
)

LINES = {}

TITLES = {
    1: "operad arithmetic",
    2: "hyperoctahedral consistency",
    3: "D-words",
    4: "crossed simplicial",
    5: "cyclotomic combinatorics",
    6: "homology",
    7: "matrix/trace",
    8: "free monad",
}


def record(n, checks):
    """checks: list of (label, ok, detail).  Returns the overall verdict."""
    ok = all(c[1] for c in checks)
    bad = [f"{label} ({detail})" for label, good, detail in checks if not good]
    line = f"criterion {n} [{TITLES[n]}]: {'PASS' if ok else 'FAIL'}"
    if bad:
        line += " -- failing: " + "; ".join(bad)
    LINES[n] = line
    print(line)
    return ok, bad


def report_check(label, rep):
    return (label, rep.ok, ", ".join(rep.failed_cases()) or "ok")


def test_criterion_1_operad_arithmetic():
    t0 = time.perf_counter()
    boxes = box_model_check(5)
    elapsed = time.perf_counter() - t0
    cases = sum(r["count"] for r in boxes.records)
    ex = perm_compose_i(Permutation([2, 4, 1, 3]), Permutation([3, 2, 1]), 1)
    checks = [
        report_check("formula = box model, k,j <= 5", boxes),
        ("about 1e5 box cases", cases >= 90_000, cases),
        ("box model under 10 s", elapsed < 10, f"{elapsed:.1f}s"),
        ("[2,4,1,3] o_1 [3,2,1] = [4,3,2,6,1,5]", list(ex.images) == [4, 3, 2, 6, 1, 5],
         list(ex.images)),
        report_check("five product formulas, k,j <= 4", five_formulas_check(4)),
        report_check("iterated composition, k,j,l <= 3", iterated_composition_check(3)),
    ]
    ok, bad = record(1, checks)
    assert ok, bad


def test_criterion_2_hyperoctahedral():
    rep = verify_hyper_suite(k_max=3, monoid_size=4)
    cases = set(rep.failed_cases())
    checks = [
        ("semidirect = block matrix, levels <= 3",
         not any(c.startswith("hyper_matrix") for c in cases), sorted(cases)),
        ("operad axioms", not any(c.startswith("operad_axioms") for c in cases), sorted(cases)),
        ("iota^2 = id and iota(xy) = iota(y) iota(x), |M| <= 4",
         not any(c.startswith("involution") for c in cases), sorted(cases)),
    ]
    ok, bad = record(2, checks)
    assert ok, bad


def _bfs_agreement():
    total = mismatched = 0
    for slots, length in ((1, 6), (2, 6), (3, 5)):
        for perp in [(), (("a", "b"),), (("a", "b"), ("b", "c")),
                     (("a", "b"), ("b", "c"), ("a", "c"))]:
            ctx = CommutationContext.simple(("a", "b", "c"), perp, slots=slots)
            letters = list(ctx.letters())
            memo = {}
            for k in range(length + 1):
                for raw in itertools.product(letters, repeat=k):
                    total += 1
                    if normalize(raw, ctx).letters != rewrite_oracle(raw, ctx, memo):
                        mismatched += 1
    return total, mismatched


def test_criterion_3_dn_words():
    total, mismatched = _bfs_agreement()
    rep = verify_dn_suite(samples=1000, seed=0, max_slots=3)
    counts = {}
    for r in rep.records:
        counts[r["case"]] = counts.get(r["case"], 0) + r["count"]
    failed = set(rep.failed_cases())
    theta = {"theta acts", "theta unit", "theta equivariance"}
    word_cases = [c for c in counts if c not in theta]
    checks = [
        ("normal form = rewrite closure, |Phi| = 3, length <= 6", mismatched == 0,
         f"{mismatched} of {total}"),
        ("eleven formulas, parity, associativity, equivariance",
         not (failed - theta), sorted(failed - theta)),
        (">= 1000 cases each", all(counts[c] >= 1000 for c in word_cases),
         min(counts[c] for c in word_cases)),
        ("theta acts on the S_3 loop model, j,k <= 3", "theta acts" not in failed,
         next((r["witness"] for r in rep.records if r["case"] == "theta acts" and not r["pass"]),
              None)),
    ]
    ok, bad = record(3, checks)
    assert ok, bad


def test_criterion_4_crossed_simplicial():
    rep = verify_crossed_suite(r_max=3, n_max=5, samples=300)
    census = {(r["params"]["flavor"], r["params"]["r"]): r for r in rep.records
              if r["case"] in ("G census", "G components and Euler characteristic")}
    checks = [
        report_check("normal forms, relations, census, faces", rep),
        ("census records present", len(census) == 8, len(census)),
    ]
    ok, bad = record(4, checks)
    assert ok, bad


def test_criterion_5_cyclotomic():
    t0 = time.perf_counter()
    rep = verify_bar_suite(q_max=3, r_max=2)
    elapsed = time.perf_counter() - t0
    checks = [
        report_check("dihedral identities, diagonal, r_{C_rs} square, |M| <= 3", rep),
        ("under a minute", elapsed < 60, f"{elapsed:.1f}s"),
    ]
    ok, bad = record(5, checks)
    assert ok, bad


def _snf_roundtrips(n=100, seed=0):
    rng = random.Random(seed)
    good = 0
    for _ in range(n):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        A = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        res = smith_normal_form(A)
        Ui = sympy.Matrix(res.U).inv()
        Vi = sympy.Matrix(res.V).inv()
        back = Ui * sympy.Matrix(res.D) * Vi
        integral = all(x.is_integer for x in Ui) and all(x.is_integer for x in Vi)
        if integral and back == sympy.Matrix(A) and matmul(matmul(res.U, A), res.V) == res.D:
            good += 1
    return good


def test_criterion_6_homology():
    triv = homology_table(build_bar(trivial_monoid(), 4), 3, augmented=True)
    c2 = homology_table(build_bar(cyclic_group_monoid(2), 4), 3)
    # hand oracle: two cells per degree, boundary (1 + (-1)^n) times the swap
    hand = []
    for n in range(4):
        out_rank = 0 if n % 2 or n == 0 else 2
        incoming = [] if (n + 1) % 2 else [2, 2]
        hand.append((2 - out_rank - len(incoming), incoming))
    good = _snf_roundtrips()
    checks = [
        ("trivial monoid acyclic", all(h == (0, []) for h in triv), triv),
        ("hand computation for C_2", hand == [(2, []), (0, [2, 2]), (0, []), (0, [2, 2])], hand),
        ("(C_2)+ gives Z^2, (Z/2)^2, 0, (Z/2)^2", [(f, sorted(t)) for f, t in c2] == hand, c2),
        ("SNF round trip on 100 matrices", good == 100, good),
    ]
    ok, bad = record(6, checks)
    assert ok, bad


def test_criterion_7_matrix_trace():
    rep = verify_trace_suite(n_max=2, q_max=2)
    checks = [
        ("|M_2(X)| = 7 for |X| = 2", len(enumerate_matrices(2, [1])) == 7,
         len(enumerate_matrices(2, [1]))),
        report_check("census, Tr equivariance, additivity, Morita identities", rep),
    ]
    ok, bad = record(7, checks)
    assert ok, bad


def test_criterion_8_free_monad():
    checks = []
    for P in builtin_operads():
        rep = monad_law_suite(P, 4, samples=500, seed=0)
        n = min(r["count"] for r in rep.records if r["case"] != "mu and eta fix the basepoint")
        checks.append(report_check(f"monad laws for {P.name}", rep))
        checks.append((f">= 500 samples for {P.name}", n >= 500, n))
    m = [filtration_census(SYMMETRIC, 3, j) for j in range(6)]
    h = [filtration_census(HYPEROCTAHEDRAL, 3, j) for j in (1, 2)]
    checks.append(("census j+2 for M", m == [j + 2 for j in range(6)], m))
    checks.append(("census 4, 8 for H", h == [4, 8], h))
    ok, bad = record(8, checks)
    assert ok, bad


if __name__ == "__main__":
    import sys
    fns = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    status = 0
    for fn in fns:
        try:
            fn()
        except AssertionError:
            status = 1
    sys.exit(status)
