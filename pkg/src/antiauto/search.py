"""Exhaustive counting, enumeration and the closed-form counting formulas.

The counting core is a pruned backtracking search: images are assigned in
index order while two bitmasks (used images, used differences) kill any
branch that repeats either.  Pruning both constraints at once is what makes
full counts feasible up to order ~16; the same search with an early exit
answers existence questions, and a plain generator version enumerates.
"""

from __future__ import annotations

import math
from array import array
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, List, Optional, Tuple

from . import _kernel
from .budget import DEFAULT_COUNT_BUDGET, DEFAULT_EXISTENCE_BUDGET, SearchBudget
from .errors import BudgetExceeded, EvenInput, NotPrime
from .groups import AbelianGroup, factorize, is_prime
from .linalg import enumerate_automorphisms
from .maps import TableMap, is_antiautomorphism, is_fixed_point_free, map_order

kernel_backend = _kernel.backend_name


def difference_index_table(group: AbelianGroup) -> array:
    """Flat n*n table: entry ``pos*n + img`` = index of element(pos) - element(img)."""
    elems = list(group.elements())
    idx = group.element_index
    out = array("i", bytes(0))
    for x in elems:
        out.extend(idx(group.sub(x, y)) for y in elems)
    return out


def _require_order(group: AbelianGroup, budget: SearchBudget) -> None:
    if group.order > budget.max_group_order:
        raise BudgetExceeded(
            f"group order {group.order} exceeds search budget {budget.max_group_order}"
        )


def _count_branches(
    n: int, diff: array, branches: List[Tuple[int, ...]], jobs: int, backend: Optional[str]
) -> int:
    if jobs <= 1 or len(branches) <= 1:
        return sum(_kernel.count_completions(n, diff, p, backend) for p in branches)
    # The compiled kernel drops the GIL, so threads give real parallelism;
    # the per-branch counts are summed in branch order either way.
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(
            lambda p: _kernel.count_completions(n, diff, p, backend), branches
        )
        return sum(parts)


def count_antiautomorphisms(
    group: AbelianGroup,
    budget: Optional[SearchBudget] = None,
    jobs: int = 1,
    backend: Optional[str] = None,
) -> int:
    """Exact number of bijections ``f`` with ``x -> x - f(x)`` also bijective.

    Every antiautomorphism is the translate of exactly one antiautomorphism
    fixing 0 (adding a constant preserves the property), so the search pins
    ``f(0) = 0`` and multiplies by the group order; agreement with direct
    enumeration is covered by tests.  Work is partitioned over the first
    free image assignment, so the result is independent of ``jobs``.
    """
    budget = budget or DEFAULT_COUNT_BUDGET
    _require_order(group, budget)
    n = group.order
    diff = difference_index_table(group)
    branches = [(0, c) for c in range(n)] if n > 1 else [(0,)]
    fixed_zero = _count_branches(n, diff, branches, jobs, backend)
    return n * fixed_zero


def enumerate_antiautomorphisms(
    group: AbelianGroup, budget: Optional[SearchBudget] = None
) -> Iterator[TableMap]:
    """All antiautomorphisms in lexicographic table order (up to ``max_solutions``)."""
    budget = budget or DEFAULT_COUNT_BUDGET
    _require_order(group, budget)
    diff = difference_index_table(group)
    emitted = 0
    for table in _kernel.iter_completions(group.order, diff):
        yield TableMap(group, table)
        emitted += 1
        if budget.max_solutions is not None and emitted >= budget.max_solutions:
            return


def exists_antiautomorphism_search(
    group: AbelianGroup, budget: Optional[SearchBudget] = None
) -> Optional[TableMap]:
    """One antiautomorphism found by search, or None once the space is exhausted.

    The search pins ``f(0) = 0`` — a witness exists iff one fixing 0 does,
    by translation — and assigns the remaining positions fail-first (fewest
    feasible images, ties to the lowest index, images ascending).  The result
    is deterministic; ``None`` is returned only after the pinned space has
    been fully exhausted, which settles nonexistence for the whole group.
    Index-order assignment thrashes for orders beyond ~16, so the fail-first
    order is what keeps existence answers fast at the order-64 budget.
    """
    budget = budget or DEFAULT_EXISTENCE_BUDGET
    _require_order(group, budget)
    n = group.order
    diff = difference_index_table(group)
    table = _kernel.mrv_first_completion(n, diff, (0,) if n > 1 else ())
    if table is None:
        return None
    witness = TableMap(group, table)
    if not is_antiautomorphism(witness):
        raise AssertionError("search produced an invalid witness")
    return witness


def count_biantiautomorphisms_bruteforce(
    group: AbelianGroup, budget: Optional[SearchBudget] = None
) -> int:
    """Number of automorphisms whose difference with the identity is bijective."""
    budget = budget or DEFAULT_EXISTENCE_BUDGET
    return sum(
        1 for f in enumerate_automorphisms(group, budget) if is_antiautomorphism(f)
    )


def verify_no_prime_order_fpf_automorphism(
    group: AbelianGroup, budget: Optional[SearchBudget] = None
) -> bool:
    """True iff no automorphism is fixed-point-free with prime order."""
    budget = budget or DEFAULT_EXISTENCE_BUDGET
    for f in enumerate_automorphisms(group, budget):
        if is_fixed_point_free(f) and is_prime(map_order(f)):
            return False
    return True


# -- closed forms and bounds --------------------------------------------------


def _require_odd(n: int) -> None:
    if n % 2 == 0:
        raise EvenInput(f"{n} is even")
    if n < 3:
        raise ValueError(f"{n} is below 3")


def biantiauto_count_formula(n: int) -> int:
    """Exact number of linear antiautomorphisms of Z_n for odd n: prod p^(a-1)(p-2)."""
    _require_odd(n)
    return math.prod(p ** (a - 1) * (p - 2) for p, a in factorize(n))


def antiauto_lower_bound(n: int) -> int:
    """Affine-family lower bound for Z_n, odd n: prod (p^2a - 2 p^(2a-1))."""
    _require_odd(n)
    return math.prod(p ** (2 * a) - 2 * p ** (2 * a - 1) for p, a in factorize(n))


def subfactorial(k: int) -> int:
    """Number of derangements of k items."""
    if k < 0:
        raise ValueError("subfactorial needs k >= 0")
    a, b = 1, 0  # !0, !1
    if k == 0:
        return a
    for m in range(2, k + 1):
        a, b = b, (m - 1) * (b + a)
    return b


def antiauto_upper_bound_prime(p: int) -> int:
    """Fixed-point bound for Z_p, odd prime p: subfactorial(p-1) * p."""
    if p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    return subfactorial(p - 1) * p


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("totient needs n >= 1")
    return math.prod(p ** (a - 1) * (p - 1) for p, a in factorize(n)) if n > 1 else 1


def count_valid_multipliers(p: int, alpha: int) -> int:
    """|{a in [2, p^alpha - 1] : gcd(a, p^alpha) = gcd(a-1, p^alpha) = 1}|.

    Computed by the closed form ``p^alpha - 2 p^(alpha-1)`` and by direct
    scan; the two must agree.
    """
    if p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    q = p ** alpha
    closed = q - 2 * p ** (alpha - 1)
    scanned = sum(
        1 for a in range(2, q) if math.gcd(a, q) == 1 and math.gcd(a - 1, q) == 1
    )
    if closed != scanned:
        raise AssertionError(
            f"closed form {closed} disagrees with direct scan {scanned} for {p}^{alpha}"
        )
    return closed
