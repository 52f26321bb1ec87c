"""Linear endomorphisms: residue matrices, companion matrices, enumeration.

Matrix semantics are restricted to homogeneous groups (all factors sharing
one modulus), where "1 is not an eigenvalue of A" is exactly "A - I is
invertible", i.e. ``det(A - I)`` is a unit in the residue ring.  General
groups get their endomorphisms by choosing generator images of compatible
order and tabulating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .budget import DEFAULT_EXISTENCE_BUDGET, SearchBudget
from .errors import (
    BudgetExceeded,
    NonHomogeneousGroup,
    NotCyclic,
    NotIrreducible,
    ParseError,
)
from .groups import AbelianGroup, check_enumeration_cap
from .maps import TableMap


@dataclass(frozen=True)
class ResidueMatrix:
    """Square integer matrix acting on a homogeneous group, entries mod m."""

    group: AbelianGroup
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        mods = self.group.moduli
        if len(set(mods)) != 1:
            raise NonHomogeneousGroup(
                f"matrix semantics need equal moduli, got {mods}"
            )
        m = mods[0]
        k = len(mods)
        rows = tuple(tuple(int(v) % m for v in row) for row in self.entries)
        if len(rows) != k or any(len(row) != k for row in rows):
            raise NonHomogeneousGroup(f"matrix must be {k}x{k} for this group")
        object.__setattr__(self, "entries", rows)

    @property
    def modulus(self) -> int:
        return self.group.moduli[0]

    @property
    def size(self) -> int:
        return len(self.entries)


def residue_matrix(group: AbelianGroup, rows: Sequence[Sequence[int]]) -> ResidueMatrix:
    return ResidueMatrix(group, tuple(tuple(row) for row in rows))


def _det_exact(rows: List[List[int]]) -> int:
    """Determinant over the integers by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def det_mod(matrix: ResidueMatrix) -> int:
    """Determinant reduced into [0, m), computed exactly first."""
    return _det_exact([list(r) for r in matrix.entries]) % matrix.modulus


def is_invertible(matrix: ResidueMatrix) -> bool:
    return math.gcd(det_mod(matrix), matrix.modulus) == 1


def _minus_identity(matrix: ResidueMatrix) -> ResidueMatrix:
    rows = tuple(
        tuple(v - (1 if i == j else 0) for j, v in enumerate(row))
        for i, row in enumerate(matrix.entries)
    )
    return ResidueMatrix(matrix.group, rows)


def has_no_eigenvalue_one(matrix: ResidueMatrix) -> bool:
    """True iff A - I is invertible, i.e. 1 is not an eigenvalue of A."""
    return is_invertible(_minus_identity(matrix))


def matrix_to_map(matrix: ResidueMatrix, cap: Optional[int] = None) -> TableMap:
    """Tabulate ``x -> A x`` over the matrix's homogeneous group."""
    group = matrix.group
    check_enumeration_cap(group, cap)
    m = matrix.modulus
    rows = matrix.entries
    table = tuple(
        group.element_index(
            tuple(sum(r * c for r, c in zip(row, x)) % m for row in rows)
        )
        for x in group.elements()
    )
    return TableMap(group, table)


def multiplication_map(group: AbelianGroup, a: int) -> TableMap:
    """``t -> a*t`` on a cyclic group; bijective iff gcd(a, n) = 1."""
    if group.rank != 1:
        raise NotCyclic(f"multiplication maps need a single factor, got {group.moduli}")
    n = group.moduli[0]
    a = a % n
    return TableMap(group, tuple((a * t) % n for t in range(n)))


# -- polynomials over Z2 --------------------------------------------------------


@dataclass(frozen=True)
class BinaryPolynomial:
    """Monic polynomial over Z2; coefficients constant-term first."""

    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) % 2 for c in self.coefficients)
        if len(coeffs) < 2:
            raise ParseError("polynomial degree must be at least 1")
        if coeffs[-1] != 1:
            raise ParseError("polynomial must be monic")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def bits(self) -> int:
        """Bitmask encoding: bit i is the coefficient of t^i."""
        return sum(c << i for i, c in enumerate(self.coefficients))

    def spec(self) -> str:
        """Constant-first coefficient list, e.g. ``"1,1,0,1"`` = 1 + t + t^3."""
        return ",".join(str(c) for c in self.coefficients)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            terms.append("1" if i == 0 else ("t" if i == 1 else f"t^{i}"))
        return " + ".join(terms) if terms else "0"


def parse_polynomial_spec(spec: str) -> BinaryPolynomial:
    parts = [p.strip() for p in str(spec).split(",")]
    try:
        coeffs = [int(p) for p in parts]
    except ValueError as exc:
        raise ParseError(f"bad polynomial spec {spec!r}") from exc
    return BinaryPolynomial(tuple(coeffs))


def _poly_from_bits(bits: int) -> BinaryPolynomial:
    coeffs = []
    while bits:
        coeffs.append(bits & 1)
        bits >>= 1
    return BinaryPolynomial(tuple(coeffs))


def _bits_mod(a: int, b: int) -> int:
    """Remainder of polynomial division over Z2, polynomials as bitmasks."""
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def poly_is_irreducible_z2(poly: BinaryPolynomial) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    bits = poly.bits()
    n = poly.degree
    if n == 1:
        return True
    for deg in range(1, n // 2 + 1):
        for low in range(1 << deg):
            divisor = (1 << deg) | low
            if _bits_mod(bits, divisor) == 0:
                return False
    return True


def irreducible_poly_z2(n: int) -> BinaryPolynomial:
    """First irreducible monic polynomial of degree n over Z2.

    Candidates are scanned in ascending bitmask order (constant term as the
    least significant bit), so the pick is deterministic: t^2+t+1, t^3+t+1,
    t^4+t+1, ...
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    for low in range(1 << n):
        candidate = _poly_from_bits((1 << n) | low)
        if poly_is_irreducible_z2(candidate):
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {n}")  # unreachable


def companion_matrix(poly: BinaryPolynomial, modulus: int) -> ResidueMatrix:
    """Frobenius companion of ``poly`` with 0/1 entries, taken modulo 2^k.

    Requires ``poly`` irreducible over Z2 and ``modulus`` a power of two;
    then both det(C) and det(C - I) reduce to the nonzero values of the
    polynomial at 0 and 1 over Z2, hence are odd and invertible mod 2^k.
    """
    if modulus < 2 or modulus & (modulus - 1):
        raise ValueError(f"modulus {modulus} is not a power of 2")
    if not poly_is_irreducible_z2(poly):
        raise NotIrreducible(f"{poly} is reducible over Z2")
    n = poly.degree
    if n < 2:
        raise ValueError("companion construction needs degree >= 2")
    group = AbelianGroup((modulus,) * n)
    coeffs = poly.coefficients
    rows = []
    for i in range(n):
        # subdiagonal of ones, last column carries the low coefficients
        row = [1 if j == i - 1 else 0 for j in range(n - 1)]
        row.append(coeffs[i] % 2)
        rows.append(tuple(row))
    return ResidueMatrix(group, tuple(rows))


# -- endomorphism enumeration ---------------------------------------------------


def _index_add_table(group: AbelianGroup) -> List[List[int]]:
    elems = list(group.elements())
    idx = group.element_index
    return [[idx(group.add(x, y)) for y in elems] for x in elems]


def enumerate_endomorphisms(
    group: AbelianGroup, budget: Optional[SearchBudget] = None
) -> Iterator[TableMap]:
    """All endomorphisms, lexicographic over the generator-image index tuples.

    A choice of image for each standard generator extends to a well-defined
    endomorphism exactly when the image's order divides the generator's, so
    candidates are filtered on that and the map is tabulated additively.
    """
    budget = budget or DEFAULT_EXISTENCE_BUDGET
    if group.order > budget.max_group_order:
        raise BudgetExceeded(
            f"group order {group.order} exceeds enumeration budget {budget.max_group_order}"
        )
    add_idx = _index_add_table(group)
    idx = group.element_index
    # multiples[i][c] = index of c * y for each candidate image y of generator i
    candidate_multiples: List[List[List[int]]] = []
    for d in group.moduli:
        per_gen = []
        for y in group.elements():
            if d % group.element_order(y) == 0:
                per_gen.append([idx(group.scale(c, y)) for c in range(d)])
        candidate_multiples.append(per_gen)

    def build(gen: int, partial: List[int]) -> Iterator[TableMap]:
        if gen == len(group.moduli):
            yield TableMap(group, tuple(partial))
            return
        for multiples in candidate_multiples[gen]:
            extended = [add_idx[t][m] for t in partial for m in multiples]
            yield from build(gen + 1, extended)

    yield from build(0, [0])


def enumerate_automorphisms(
    group: AbelianGroup, budget: Optional[SearchBudget] = None
) -> Iterator[TableMap]:
    """The bijective endomorphisms, same deterministic order."""
    n = group.order
    for f in enumerate_endomorphisms(group, budget):
        if len(set(f.table)) == n:
            yield f
