"""Witness factories: every explicit antiautomorphism the library can build.

Each factory verifies its output with the defining predicate before
returning, so a construction bug can never leak an invalid witness into
the classifier.
"""

from __future__ import annotations

from typing import Dict, Iterator, Optional, Tuple

from .errors import BudgetExceeded, ConstructionFailed, NotOdd, RankTooSmall
from .groups import AbelianGroup, Element
from .linalg import companion_matrix, irreducible_poly_z2, matrix_to_map, multiplication_map
from .maps import TableMap, direct_sum_map, is_antiautomorphism, translate_map


def _verified(f: TableMap, label: str) -> TableMap:
    if not is_antiautomorphism(f):
        raise ConstructionFailed(f"{label} failed verification")
    return f


def _from_rows(moduli: Tuple[int, ...], rows: Dict[Element, Element]) -> TableMap:
    group = AbelianGroup(moduli)
    table = [0] * group.order
    for x, y in rows.items():
        table[group.element_index(x)] = group.element_index(y)
    return TableMap(group, tuple(table))


def klein_antiauto() -> TableMap:
    """The reference 4-row antiautomorphism of Z2+Z2."""
    rows = {
        (1, 1): (0, 0),
        (0, 1): (0, 1),
        (0, 0): (1, 0),
        (1, 0): (1, 1),
    }
    return _verified(_from_rows((2, 2), rows), "klein table")


def z2cubed_antiauto() -> TableMap:
    """The reference 8-row antiautomorphism of Z2+Z2+Z2 (not linear; one fixed point)."""
    rows = {
        (1, 1, 1): (0, 0, 0),
        (1, 0, 1): (0, 0, 1),
        (0, 1, 1): (0, 1, 0),
        (0, 0, 1): (0, 1, 1),
        (0, 1, 0): (1, 0, 0),
        (0, 0, 0): (1, 0, 1),
        (1, 1, 0): (1, 1, 0),
        (1, 0, 0): (1, 1, 1),
    }
    return _verified(_from_rows((2, 2, 2), rows), "rank-3 table")


def z2_z4_antiauto() -> TableMap:
    """The reference 8-row antiautomorphism of Z2+Z4 (not linear: 0 is not fixed)."""
    rows = {
        (1, 3): (0, 0),
        (1, 2): (0, 1),
        (0, 3): (0, 2),
        (0, 2): (0, 3),
        (1, 0): (1, 0),
        (0, 1): (1, 1),
        (0, 0): (1, 2),
        (1, 1): (1, 3),
    }
    return _verified(_from_rows((2, 4), rows), "Z2+Z4 table")


def elementary2_antiauto(r: int) -> TableMap:
    """Antiautomorphism of Z2^r: Klein blocks plus one rank-3 block when r is odd."""
    if r < 2:
        raise RankTooSmall(f"rank {r} is below 2")
    if r == 2:
        return klein_antiauto()
    if r == 3:
        return z2cubed_antiauto()
    if r % 2 == 0:
        parts = [klein_antiauto()] * (r // 2)
    else:
        parts = [klein_antiauto()] * ((r - 3) // 2) + [z2cubed_antiauto()]
    return _verified(direct_sum_map(parts), f"elementary2({r})")


def homogeneous2_antiauto(m: int, n: int, cap: Optional[int] = None) -> TableMap:
    """Antiautomorphism of (Z_{2^m})^n from a companion matrix.

    The companion matrix of an irreducible degree-n polynomial over Z2 is
    invertible without eigenvalue 1, and stays so modulo any power of two;
    its multiplication map is therefore an antiautomorphism.
    """
    if m < 1:
        raise ValueError("exponent m must be at least 1")
    if n < 2:
        raise RankTooSmall(f"rank {n} is below 2")
    matrix = companion_matrix(irreducible_poly_z2(n), 2 ** m)
    try:
        witness = matrix_to_map(matrix, cap)
    except BudgetExceeded:
        raise BudgetExceeded(
            f"table for (Z_{2 ** m})^{n} has {2 ** (m * n)} entries, over the cap"
        ) from None
    return _verified(witness, f"homogeneous2({m},{n})")


def odd_cyclic_antiautos(n: int) -> Iterator[TableMap]:
    """The affine antiautomorphisms t -> a*t + b of Z_n for odd n.

    Valid multipliers are the units ``a != 1`` with ``a - 1`` also a unit;
    every translation of such a map again qualifies, giving
    ``n * #multipliers`` distinct maps.  Emitted with ``a`` ascending, then
    ``b`` ascending.
    """
    import math

    if n % 2 == 0:
        raise NotOdd(f"{n} is even")
    if n < 3:
        raise ValueError("odd cyclic family needs n >= 3")
    group = AbelianGroup((n,))
    for a in range(2, n):
        if math.gcd(a, n) != 1 or math.gcd(a - 1, n) != 1:
            continue
        base = multiplication_map(group, a)
        for b in range(n):
            yield _verified(translate_map(base, (b,)), f"affine({a},{b}) mod {n}")
