"""Acceptance suite: every release-gating criterion, one test per criterion.

Each test prints one CRITERION line (run pytest with ``-s`` to see them all).
The heavy order-15/16 exhaustive counts are cached across criteria and fan
out over worker threads; result values are worker-count independent.
"""

import time

from antiauto import (
    abelian_groups_up_to_order,
    antiauto_lower_bound,
    biantiauto_count_formula,
    count_antiautomorphisms,
    count_biantiautomorphisms_bruteforce,
    count_involutions,
    decide_antiautomorphism,
    exists_antiautomorphism_search,
    group_sum,
    homogeneous2_antiauto,
    involutions,
    is_antiautomorphism,
    is_linear,
    make_group,
    negation_map,
    subfactorial,
    verify_no_prime_order_fpf_automorphism,
    z2_z4_antiauto,
)

JOBS = 8
_count_cache = {}


def cached_count(moduli):
    key = tuple(moduli)
    if key not in _count_cache:
        _count_cache[key] = count_antiautomorphisms(make_group(key), jobs=JOBS)
    return _count_cache[key]


def report(criterion, ok, detail=""):
    line = f"CRITERION {criterion}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def test_criterion_01_klein_count_and_runtime():
    count_antiautomorphisms(make_group([2]))  # warm the code paths
    best = min(
        _timed(lambda: count_antiautomorphisms(make_group([2, 2])))[0] for _ in range(5)
    )
    value = count_antiautomorphisms(make_group([2, 2]))
    ok = value == 8 and best < 0.001
    report("1", ok, f"count={value}, best runtime={best * 1000:.3f}ms (< 1ms)")


def test_criterion_02_rank3_count_and_runtime():
    elapsed, value = _timed(lambda: count_antiautomorphisms(make_group([2, 2, 2])))
    ok = value == 384 and elapsed < 1.0
    report("2", ok, f"count={value}, runtime={elapsed:.3f}s (< 1s)")


def test_criterion_03_unique_involution_counts_are_zero():
    failures = []
    for n in range(2, 17, 2):
        if cached_count((n,)) != 0:
            failures.append(f"Z{n}")
    for group in abelian_groups_up_to_order(16):
        if count_involutions(group) == 1 and cached_count(group.moduli) != 0:
            failures.append(str(group))
    report("3", not failures, f"checked even n<=16 and all unique-involution groups; failures={failures}")


def test_criterion_04_odd_cyclic_bounds():
    failures = []
    for n in (3, 5, 7, 9, 15):
        count = cached_count((n,))
        if count < antiauto_lower_bound(n):
            failures.append(f"Z{n}: {count} < {antiauto_lower_bound(n)}")
    for p in (3, 5, 7):
        bound = subfactorial(p - 1) * p
        if cached_count((p,)) > bound:
            failures.append(f"Z{p}: {cached_count((p,))} > {bound}")
    detail = ", ".join(f"Z{n}={cached_count((n,))}" for n in (3, 5, 7, 9, 15))
    report("4", not failures, detail + f"; failures={failures}")


def test_criterion_05_bianti_formula_sweep_under_10s():
    start = time.perf_counter()
    failures = []
    for n in range(3, 46, 2):
        brute = count_biantiautomorphisms_bruteforce(make_group([n]))
        if brute != biantiauto_count_formula(n):
            failures.append(n)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10.0
    report("5", ok, f"odd n <= 45, runtime={elapsed:.2f}s (< 10s), failures={failures}")


def test_criterion_06_z2_z4_facts():
    group = make_group([2, 4])
    bianti = count_biantiautomorphisms_bruteforce(group)
    witness = exists_antiautomorphism_search(group)
    table = z2_z4_antiauto()
    ok = (
        bianti == 0
        and witness is not None
        and is_antiautomorphism(table)
        and not is_linear(table)
    )
    report("6", ok, f"bianti={bianti}, search witness={'found' if witness else 'none'}")


def test_criterion_07_homogeneous_2_power_constructions():
    failures = []
    for m, n in [(1, 2), (1, 3), (2, 2), (3, 2), (2, 3)]:
        if not is_antiautomorphism(homogeneous2_antiauto(m, n)):
            failures.append((m, n))
    report("7", not failures, f"(m,n) grid verified; failures={failures}")


def test_criterion_08_wilson_sweep_to_64():
    failures = []
    for group in abelian_groups_up_to_order(64):
        total = group_sum(group)
        expected = involutions(group)[0] if count_involutions(group) == 1 else group.zero()
        if total != expected:
            failures.append(str(group))
    report("8", not failures, f"all groups of order <= 64; failures={failures}")


def test_criterion_09_negation_characterization_to_32():
    failures = []
    for group in abelian_groups_up_to_order(32):
        works = is_antiautomorphism(negation_map(group))
        if works != (count_involutions(group) == 0):
            failures.append(str(group))
    report("9", not failures, f"all groups of order <= 32; failures={failures}")


def test_criterion_10_no_prime_order_fpf_automorphisms():
    failures = []
    for moduli in [(2, 4), (2, 8), (4, 8), (2, 4, 8)]:
        if not verify_no_prime_order_fpf_automorphism(make_group(moduli)):
            failures.append(moduli)
    report("10", not failures, f"distinct-exponent 2-groups; failures={failures}")


def test_criterion_11_classifier_matches_ground_truth_to_16():
    failures = []
    for group in abelian_groups_up_to_order(16):
        verdict = decide_antiautomorphism(group)
        if verdict.status == "unknown":
            failures.append(f"{group}: unknown")
            continue
        if (verdict.status == "exists") != (cached_count(group.moduli) > 0):
            failures.append(f"{group}: {verdict.status} vs count {cached_count(group.moduli)}")
    report("11", not failures, f"24 isomorphism classes; failures={failures}")


def test_criterion_12_worker_count_determinism():
    failures = []
    for moduli in [(2, 2, 2), (9,)]:
        counts = {j: count_antiautomorphisms(make_group(moduli), jobs=j) for j in (1, 2, 8)}
        if len(set(counts.values())) != 1:
            failures.append(f"{moduli}: {counts}")
    report("12", not failures, f"jobs 1/2/8 agree; failures={failures}")


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return time.perf_counter() - start, value
