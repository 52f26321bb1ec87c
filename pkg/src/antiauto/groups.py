"""Finite abelian groups as ordered direct sums of cyclic factors.

A group is ``Z_{d1} + ... + Z_{dk}`` for moduli ``di >= 2``; the factor
order is significant and never normalized, so ``Z2+Z4`` and ``Z4+Z2`` are
distinct representations of the same isomorphism class.  Elements are
tuples of residues.  Every element also carries a mixed-radix index in
``[0, order)`` with the LAST coordinate varying fastest; that index is the
canonical encoding used by map tables and the wire formats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptyModuli,
    IndexOutOfRange,
    ModulusTooSmall,
    ParseError,
)

Element = Tuple[int, ...]

#: Largest group order for which full-table operations (tabulated maps,
#: CRT tables, pairwise checks) run without an explicit override.
DEFAULT_ENUMERATION_CAP = 4096


@dataclass(frozen=True)
class AbelianGroup:
    """``Z_{d1} + ... + Z_{dk}`` with the factor order as given."""

    moduli: Tuple[int, ...]

    def __post_init__(self) -> None:
        mods = tuple(int(d) for d in self.moduli)
        if not mods:
            raise EmptyModuli("a group needs at least one cyclic factor")
        for d in mods:
            if d < 2:
                raise ModulusTooSmall(f"modulus {d} is below 2")
        object.__setattr__(self, "moduli", mods)

    @cached_property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    def __str__(self) -> str:
        return "+".join(f"Z{d}" for d in self.moduli)

    def spec(self) -> str:
        """Comma-separated moduli, the CLI/wire format (``"2,4"``)."""
        return ",".join(str(d) for d in self.moduli)

    # -- element arithmetic -------------------------------------------------

    def _check_dim(self, x: Sequence[int]) -> None:
        if len(x) != len(self.moduli):
            raise DimensionMismatch(
                f"element has {len(x)} coordinates, group has {len(self.moduli)}"
            )

    def zero(self) -> Element:
        return (0,) * len(self.moduli)

    def reduce(self, x: Sequence[int]) -> Element:
        """Coordinate-wise reduction into canonical residues."""
        self._check_dim(x)
        return tuple(c % d for c, d in zip(x, self.moduli))

    def add(self, a: Sequence[int], b: Sequence[int]) -> Element:
        self._check_dim(a)
        self._check_dim(b)
        return tuple((x + y) % d for x, y, d in zip(a, b, self.moduli))

    def neg(self, a: Sequence[int]) -> Element:
        self._check_dim(a)
        return tuple((-x) % d for x, d in zip(a, self.moduli))

    def sub(self, a: Sequence[int], b: Sequence[int]) -> Element:
        self._check_dim(a)
        self._check_dim(b)
        return tuple((x - y) % d for x, y, d in zip(a, b, self.moduli))

    def scale(self, c: int, a: Sequence[int]) -> Element:
        self._check_dim(a)
        return tuple((c * x) % d for x, d in zip(a, self.moduli))

    def element_order(self, x: Sequence[int]) -> int:
        """Least m >= 1 with m*x = 0: lcm over coordinates of d/gcd(x, d)."""
        self._check_dim(x)
        orders = (d // math.gcd(c % d, d) for c, d in zip(x, self.moduli))
        return reduce(math.lcm, orders, 1)

    # -- mixed-radix indexing -----------------------------------------------

    def element_index(self, x: Sequence[int]) -> int:
        """Mixed-radix index of ``x``, last coordinate fastest."""
        self._check_dim(x)
        idx = 0
        for c, d in zip(x, self.moduli):
            c = int(c)
            if not 0 <= c < d:
                raise IndexOutOfRange(f"coordinate {c} not reduced modulo {d}")
            idx = idx * d + c
        return idx

    def index_element(self, i: int) -> Element:
        if not 0 <= i < self.order:
            raise IndexOutOfRange(f"index {i} outside [0, {self.order})")
        coords = []
        for d in reversed(self.moduli):
            i, c = divmod(i, d)
            coords.append(c)
        return tuple(reversed(coords))

    def elements(self) -> Iterator[Element]:
        """All elements in index order."""
        return product(*(range(d) for d in self.moduli))

    def generators(self) -> List[Element]:
        """Standard basis ``e_i``; ``e_i`` has order ``moduli[i]``."""
        k = len(self.moduli)
        return [tuple(int(i == j) for j in range(k)) for i in range(k)]


def make_group(moduli: Sequence[int]) -> AbelianGroup:
    """Build the group with the moduli in the given order (no normalization)."""
    return AbelianGroup(tuple(moduli))


def check_enumeration_cap(group: AbelianGroup, cap: Optional[int] = None) -> None:
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if group.order > limit:
        raise BudgetExceeded(
            f"group order {group.order} exceeds the enumeration cap {limit}"
        )


# -- spec strings -----------------------------------------------------------


def parse_group_spec(spec: str) -> AbelianGroup:
    """Parse ``"2,4"`` into Z2+Z4."""
    parts = [p.strip() for p in str(spec).split(",")]
    try:
        moduli = [int(p) for p in parts]
    except ValueError as exc:
        raise ParseError(f"bad group spec {spec!r}") from exc
    try:
        return make_group(moduli)
    except (EmptyModuli, ModulusTooSmall) as exc:
        raise ParseError(f"bad group spec {spec!r}: {exc}") from exc


def parse_element_spec(group: AbelianGroup, spec: str) -> Element:
    """Parse ``"1,3"`` into an element of ``group`` (residues reduced)."""
    parts = [p.strip() for p in str(spec).split(",")]
    try:
        coords = [int(p) for p in parts]
    except ValueError as exc:
        raise ParseError(f"bad element spec {spec!r}") from exc
    try:
        return group.reduce(coords)
    except DimensionMismatch as exc:
        raise ParseError(f"bad element spec {spec!r}: {exc}") from exc


def format_element(x: Element) -> str:
    return ",".join(str(c) for c in x)


# -- involutions and the all-element sum ------------------------------------


def count_involutions(group: AbelianGroup) -> int:
    """Number of elements of order exactly 2: ``prod(gcd(d, 2)) - 1``."""
    return math.prod(math.gcd(d, 2) for d in group.moduli) - 1


def involutions(group: AbelianGroup) -> List[Element]:
    """The elements of order 2, in index order (exhaustive scan)."""
    return [x for x in group.elements() if group.element_order(x) == 2]


def group_sum(group: AbelianGroup) -> Element:
    """Sum of all group elements, by direct summation."""
    total = group.zero()
    for x in group.elements():
        total = group.add(total, x)
    return total


# -- isomorphisms -----------------------------------------------------------


@dataclass(frozen=True)
class GroupIsomorphism:
    """Additive bijection between equal-order groups.

    ``forward`` and ``backward`` are index-to-index tables in the
    mixed-radix encoding of their respective source groups.
    """

    source: AbelianGroup
    target: AbelianGroup
    forward: Tuple[int, ...]
    backward: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "forward", tuple(self.forward))
        object.__setattr__(self, "backward", tuple(self.backward))
        if self.source.order != self.target.order:
            raise DimensionMismatch("isomorphic groups must have equal order")
        n = self.source.order
        if len(self.forward) != n or len(self.backward) != n:
            raise DimensionMismatch("isomorphism tables must cover the full group")

    def apply(self, x: Element) -> Element:
        return self.target.index_element(self.forward[self.source.element_index(x)])

    def unapply(self, y: Element) -> Element:
        return self.source.index_element(self.backward[self.target.element_index(y)])


def _invert_table(table: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(table)
    for i, j in enumerate(table):
        out[j] = i
    return tuple(out)


def crt_decompose(group: AbelianGroup, cap: Optional[int] = None) -> GroupIsomorphism:
    """Isomorphism onto the group with every factor split into prime powers.

    Each modulus is replaced by its prime-power parts (primes ascending),
    preserving the original factor order; the maps are tabulated and are
    additive bijections by construction.
    """
    check_enumeration_cap(group, cap)
    blocks = [[p ** a for p, a in factorize(d)] for d in group.moduli]
    target = AbelianGroup(tuple(q for block in blocks for q in block))
    forward = []
    for x in group.elements():
        image = []
        for c, block in zip(x, blocks):
            image.extend(c % q for q in block)
        forward.append(target.element_index(tuple(image)))
    forward_t = tuple(forward)
    return GroupIsomorphism(group, target, forward_t, _invert_table(forward_t))


def permutation_isomorphism(
    group: AbelianGroup, perm: Sequence[int], cap: Optional[int] = None
) -> GroupIsomorphism:
    """Reorder the cyclic factors: target factor ``j`` is source factor ``perm[j]``."""
    check_enumeration_cap(group, cap)
    if sorted(perm) != list(range(group.rank)):
        raise DimensionMismatch("perm must be a permutation of the factor positions")
    target = AbelianGroup(tuple(group.moduli[p] for p in perm))
    forward = tuple(
        target.element_index(tuple(x[p] for p in perm)) for x in group.elements()
    )
    return GroupIsomorphism(group, target, forward, _invert_table(forward))


def compose_isomorphisms(
    first: GroupIsomorphism, second: GroupIsomorphism
) -> GroupIsomorphism:
    """The isomorphism ``second o first`` (apply ``first``, then ``second``)."""
    if first.target != second.source:
        raise DimensionMismatch("isomorphisms do not chain")
    forward = tuple(second.forward[j] for j in first.forward)
    backward = tuple(first.backward[i] for i in second.backward)
    return GroupIsomorphism(first.source, second.target, forward, backward)


# -- classification sweep support -------------------------------------------


def factorize(n: int) -> List[Tuple[int, int]]:
    """Prime factorization ``[(p, multiplicity)]`` with primes ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: List[Tuple[int, int]] = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``n`` with parts descending, emitted in descending-lex order."""
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def abelian_groups_of_order(n: int) -> List[AbelianGroup]:
    """One representative per isomorphism class, in primary decomposition form.

    For every prime ``p`` with multiplicity ``e`` in ``n``, the ``p``-part
    ranges over the partitions of ``e``; moduli are listed prime-ascending
    and, within a prime, ascending.  The list order is deterministic.
    """
    if n < 2:
        raise ValueError("order must be at least 2")
    per_prime = []
    for p, e in factorize(n):
        options = []
        for parts in _partitions(e):
            options.append(tuple(p ** a for a in sorted(parts)))
        per_prime.append(options)
    groups = []
    for combo in product(*per_prime):
        moduli = tuple(q for block in combo for q in block)
        groups.append(AbelianGroup(moduli))
    return groups


def abelian_groups_up_to_order(max_order: int) -> List[AbelianGroup]:
    """All class representatives of order 2..max_order, ascending."""
    out: List[AbelianGroup] = []
    for n in range(2, max_order + 1):
        out.extend(abelian_groups_of_order(n))
    return out
