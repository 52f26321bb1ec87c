"""Shared brute-force oracles, independent of the library's search kernels."""

import itertools

from antiauto import AbelianGroup


def brute_force_antiauto_count(group: AbelianGroup) -> int:
    """Count antiautomorphisms by filtering every permutation of the elements.

    Deliberately avoids the library's masks/pruning/symmetry machinery: a
    permutation qualifies iff the differences x - f(x) are pairwise distinct.
    Usable up to order ~8.
    """
    elems = list(group.elements())
    idx = group.element_index
    count = 0
    for perm in itertools.permutations(range(group.order)):
        seen = set()
        for i, j in enumerate(perm):
            d = idx(group.sub(elems[i], elems[j]))
            if d in seen:
                break
            seen.add(d)
        else:
            count += 1
    return count


def brute_force_det(rows, modulus: int) -> int:
    """Leibniz determinant: signed sum over permutations, then reduced."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i in range(n):
            term *= rows[i][perm[i]]
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        total += -term if inversions % 2 else term
    return total % modulus


def exhaustive_involution_count(group: AbelianGroup) -> int:
    return sum(1 for x in group.elements() if group.element_order(x) == 2)
