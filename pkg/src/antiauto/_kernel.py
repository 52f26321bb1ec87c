"""Backtracking kernels behind the antiautomorphism search.

A candidate map is a table built position by position in index order.  Two
bitmasks prune the tree: one for images already used, one for difference
indices already used; a branch dies the moment either constraint repeats.
The compiled extension (``antiauto._speedups``) carries the hot counting
loop; these pure-Python versions are the fallback, selected at import, and
the reference implementation for enumeration.

``diff`` is the flattened difference table: ``diff[pos * n + img]`` is the
element index of ``element(pos) - element(img)``.
"""

from __future__ import annotations

import os
from typing import Iterator, Optional, Sequence, Tuple

try:
    from . import _speedups
except ImportError:  # pragma: no cover - depends on the build environment
    _speedups = None

_FORCE_PURE = os.environ.get("ANTIAUTO_PURE", "") not in ("", "0")

# Compiled masks are 64-bit; compiled counts accumulate in uint64, safe while
# the solution count stays below 2^64 (guaranteed for n <= 20 since count <= n!).
_COMPILED_MAX_N = 64
_COMPILED_COUNT_MAX_N = 20


def backend_name() -> str:
    """Which kernel the dispatcher will use: ``"compiled"`` or ``"pure"``."""
    return "pure" if (_speedups is None or _FORCE_PURE) else "compiled"


def _resolve(backend: Optional[str], n: int, counting: bool) -> str:
    if backend not in (None, "compiled", "pure"):
        raise ValueError(f"unknown backend {backend!r}")
    limit = _COMPILED_COUNT_MAX_N if counting else _COMPILED_MAX_N
    if backend == "compiled":
        if _speedups is None:
            raise RuntimeError("compiled kernel is not available")
        if n > limit:
            raise ValueError(f"compiled kernel supports n <= {limit}, got {n}")
        return "compiled"
    if backend == "pure":
        return "pure"
    if _speedups is None or _FORCE_PURE or n > limit:
        return "pure"
    return "compiled"


def _init_masks(
    n: int, diff: Sequence[int], prefix: Sequence[int]
) -> Optional[Tuple[int, int]]:
    """Masks after assigning ``prefix``; None if it already violates a constraint."""
    used_img = 0
    used_diff = 0
    for pos, img in enumerate(prefix):
        bit = 1 << img
        dbit = 1 << diff[pos * n + img]
        if used_img & bit or used_diff & dbit:
            return None
        used_img |= bit
        used_diff |= dbit
    return used_img, used_diff


def _count_pure(n, diff, pos, used_img, used_diff, full):
    if pos == n:
        return 1
    total = 0
    base = pos * n
    free = full & ~used_img
    while free:
        low = free & -free
        free ^= low
        dbit = 1 << diff[base + (low.bit_length() - 1)]
        if not used_diff & dbit:
            total += _count_pure(n, diff, pos + 1, used_img | low, used_diff | dbit, full)
    return total


def count_completions(
    n: int, diff: Sequence[int], prefix: Sequence[int] = (), backend: Optional[str] = None
) -> int:
    """Number of full assignments extending ``prefix`` (0 if it conflicts)."""
    state = _init_masks(n, diff, prefix)
    if state is None:
        return 0
    if _resolve(backend, n, counting=True) == "compiled":
        return _speedups.count_completions(n, diff, tuple(prefix))
    used_img, used_diff = state
    return _count_pure(n, diff, len(prefix), used_img, used_diff, (1 << n) - 1)


def iter_completions(
    n: int, diff: Sequence[int], prefix: Sequence[int] = ()
) -> Iterator[Tuple[int, ...]]:
    """All full assignments extending ``prefix``, in lexicographic table order."""
    state = _init_masks(n, diff, prefix)
    if state is None:
        return
    table = list(prefix)

    def rec(pos: int, used_img: int, used_diff: int) -> Iterator[Tuple[int, ...]]:
        if pos == n:
            yield tuple(table)
            return
        base = pos * n
        for img in range(n):
            bit = 1 << img
            if used_img & bit:
                continue
            dbit = 1 << diff[base + img]
            if used_diff & dbit:
                continue
            table.append(img)
            yield from rec(pos + 1, used_img | bit, used_diff | dbit)
            table.pop()

    yield from rec(len(prefix), *state)


def first_completion(
    n: int, diff: Sequence[int], prefix: Sequence[int] = (), backend: Optional[str] = None
) -> Optional[Tuple[int, ...]]:
    """Lexicographically first full assignment extending ``prefix``, or None."""
    if _init_masks(n, diff, prefix) is None:
        return None
    if _resolve(backend, n, counting=False) == "compiled":
        found = _speedups.first_completion(n, diff, tuple(prefix))
        return None if found is None else tuple(found)
    return next(iter_completions(n, diff, prefix), None)


def _mrv_attempt_pure(n, diff, prefix, used_img, used_diff, vorder, max_nodes):
    """Pure-Python mirror of the compiled fail-first attempt.

    Returns (status, table): 1 found, 0 space exhausted, -1 node cap hit.
    """
    # inv[p][d] = the unique image j with diff[p*n + j] == d (group difference
    # rows are permutations), so using a difference d clears exactly one fresh
    # image bit per position and the undo is exact.
    inv = [[0] * n for _ in range(n)]
    for p in range(n):
        base = p * n
        for j in range(n):
            inv[p][diff[base + j]] = j
    full = (1 << n) - 1
    diff_ok = [full] * n
    m = used_diff
    while m:
        low = m & -m
        m ^= low
        d = low.bit_length() - 1
        for q in range(n):
            diff_ok[q] &= ~(1 << inv[q][d])
    out = list(prefix) + [0] * (n - len(prefix))
    unassigned = full & ~((1 << len(prefix)) - 1)
    nodes_left = [max_nodes + 1 if max_nodes > 0 else 0]

    def rec(used_img: int, unassigned: int) -> int:
        if not unassigned:
            return 1
        if nodes_left[0] > 0:
            nodes_left[0] -= 1
            if nodes_left[0] == 0:
                return -1
        free_img = full & ~used_img
        best_p, best_c = -1, n + 1
        m = unassigned
        while m:
            low = m & -m
            m ^= low
            p = low.bit_length() - 1
            c = bin(diff_ok[p] & free_img).count("1")
            if c == 0:
                return 0
            if c < best_c:
                best_p, best_c = p, c
                if c == 1:
                    break
        feas = diff_ok[best_p] & free_img
        rest = unassigned & ~(1 << best_p)
        base = best_p * n
        for j in vorder:
            if not feas >> j & 1:
                continue
            d = diff[base + j]
            for q in range(n):
                diff_ok[q] &= ~(1 << inv[q][d])
            out[best_p] = j
            sub = rec(used_img | (1 << j), rest)
            if sub == 1:
                return 1
            for q in range(n):
                diff_ok[q] |= 1 << inv[q][d]
            if sub == -1:
                return -1
        return 0

    status = rec(used_img, unassigned)
    return status, (tuple(out) if status == 1 else None)


def _xorshift32(state: int) -> int:
    state ^= (state << 13) & 0xFFFFFFFF
    state ^= state >> 17
    state ^= (state << 5) & 0xFFFFFFFF
    return state & 0xFFFFFFFF


def _value_order(n: int, seed: int) -> Tuple[int, ...]:
    """Deterministic image try-order; seed 0 is plain ascending."""
    order = list(range(n))
    if seed == 0:
        return tuple(order)
    state = (seed * 0x9E3779B9 + 1) & 0xFFFFFFFF
    for i in range(n - 1, 0, -1):
        state = _xorshift32(state)
        k = state % (i + 1)
        order[i], order[k] = order[k], order[i]
    return tuple(order)


# Restart schedule for the fail-first witness search: capped attempts with
# reshuffled image orders defuse the heavy-tailed cases, then one unbounded
# attempt settles existence for real.  Fixed constants keep it deterministic.
_RESTART_BASE_NODES = 20_000
_RESTART_ATTEMPTS = 12


def mrv_first_completion(
    n: int, diff: Sequence[int], prefix: Sequence[int] = (), backend: Optional[str] = None
) -> Optional[Tuple[int, ...]]:
    """Deterministic fail-first completion of ``prefix``, or None if none exists.

    Positions are assigned by fewest feasible images first (ties to the
    lowest index); a fixed restart schedule varies the image try-order when
    an attempt exceeds its node cap.  Deterministic, but the completion
    found is generally not the lexicographically minimal one.  ``None`` is
    only returned once an attempt has exhausted the whole space.
    """
    state = _init_masks(n, diff, prefix)
    if state is None:
        return None
    use = _resolve(backend, n, counting=False)

    def attempt(seed: int, cap: int):
        vorder = _value_order(n, seed)
        if use == "compiled":
            return _speedups.mrv_attempt(n, diff, tuple(prefix), vorder, cap)
        return _mrv_attempt_pure(n, diff, tuple(prefix), *state, vorder, cap)

    cap = _RESTART_BASE_NODES
    for seed in range(_RESTART_ATTEMPTS):
        status, table = attempt(seed, cap)
        if status == 1:
            return tuple(table)
        if status == 0:
            return None
        cap += cap // 2
    status, table = attempt(0, 0)
    return tuple(table) if status == 1 else None
