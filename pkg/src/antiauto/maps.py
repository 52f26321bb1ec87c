"""Total maps on a finite abelian group stored as dense index tables.

Everything the library reasons about — antimorphisms, antiautomorphisms,
linear maps — is a :class:`TableMap`.  The predicates below are the
defining properties: ``f`` is an antimorphism when ``x -> x - f(x)`` is
injective, and an antiautomorphism when it is additionally a bijection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, NotBijective, ParseError
from .groups import (
    AbelianGroup,
    Element,
    GroupIsomorphism,
    check_enumeration_cap,
    format_element,
    parse_group_spec,
)


@dataclass(frozen=True)
class TableMap:
    """A total function G -> G; entry ``i`` is the image index of element ``i``."""

    group: AbelianGroup
    table: Tuple[int, ...]

    def __post_init__(self) -> None:
        table = tuple(int(v) for v in self.table)
        n = self.group.order
        if len(table) != n:
            raise DimensionMismatch(f"table has {len(table)} entries, group order is {n}")
        for v in table:
            if not 0 <= v < n:
                raise DimensionMismatch(f"table entry {v} outside [0, {n})")
        object.__setattr__(self, "table", table)

    def __call__(self, x: Element) -> Element:
        g = self.group
        return g.index_element(self.table[g.element_index(x)])

    def image_index(self, i: int) -> int:
        return self.table[i]

    def pairs(self) -> Iterator[Tuple[Element, Element]]:
        """(x, f(x)) pairs in index order."""
        g = self.group
        for i, x in enumerate(g.elements()):
            yield x, g.index_element(self.table[i])

    def pair_listing(self) -> str:
        """Human-readable ``x -> f(x)`` lines in element spec format."""
        return "\n".join(
            f"{format_element(x)} -> {format_element(y)}" for x, y in self.pairs()
        )

    def to_json_dict(self) -> Dict[str, object]:
        return {"group": self.group.spec(), "table": list(self.table)}

    @classmethod
    def from_json_dict(cls, obj: object) -> "TableMap":
        if not isinstance(obj, dict) or "group" not in obj or "table" not in obj:
            raise ParseError("map document needs 'group' and 'table' fields")
        group = parse_group_spec(str(obj["group"]))
        table = obj["table"]
        if not isinstance(table, list):
            raise ParseError("'table' must be a list of image indices")
        try:
            return cls(group, tuple(int(v) for v in table))
        except (TypeError, ValueError, DimensionMismatch) as exc:
            raise ParseError(f"bad map table: {exc}") from exc


def map_from_callable(group: AbelianGroup, fn: Callable[[Element], Element]) -> TableMap:
    return TableMap(
        group, tuple(group.element_index(group.reduce(fn(x))) for x in group.elements())
    )


def identity_map(group: AbelianGroup) -> TableMap:
    return TableMap(group, tuple(range(group.order)))


def negation_map(group: AbelianGroup) -> TableMap:
    return map_from_callable(group, group.neg)


# -- predicates ---------------------------------------------------------------


def is_bijection(f: TableMap) -> bool:
    return len(set(f.table)) == f.group.order


def difference_map(f: TableMap) -> TableMap:
    """The map ``x -> x - f(x)``."""
    g = f.group
    table = tuple(
        g.element_index(g.sub(x, g.index_element(f.table[i])))
        for i, x in enumerate(g.elements())
    )
    return TableMap(g, table)


def is_antimorphism(f: TableMap) -> bool:
    """True when ``x -> x - f(x)`` is injective (on finite groups: bijective)."""
    return is_bijection(difference_map(f))


def is_antiautomorphism(f: TableMap) -> bool:
    return is_bijection(f) and is_antimorphism(f)


def is_linear(f: TableMap, cap: Optional[int] = None) -> bool:
    """f(0) = 0 and f(x+y) = f(x) + f(y), checked exhaustively over all pairs."""
    g = f.group
    check_enumeration_cap(g, cap)
    if f.table[0] != 0:
        # index 0 is the zero element
        return False
    elems = list(g.elements())
    tab = f.table
    idx = g.element_index
    n = g.order
    for i in range(n):
        x = elems[i]
        fx = elems[tab[i]]
        for j in range(i, n):
            lhs = tab[idx(g.add(x, elems[j]))]
            rhs = idx(g.add(fx, elems[tab[j]]))
            if lhs != rhs:
                return False
    return True


def is_fixed_point_free(f: TableMap) -> bool:
    """No nonzero fixed point; the zero element is exempt by definition."""
    return all(f.table[i] != i for i in range(1, f.group.order))


# -- combinators ---------------------------------------------------------------


def direct_sum_map(fs: Sequence[TableMap], cap: Optional[int] = None) -> TableMap:
    """Block map on the concatenated group, each block acting on its factors."""
    if not fs:
        raise ValueError("direct sum of zero maps")
    group = AbelianGroup(tuple(d for f in fs for d in f.group.moduli))
    check_enumeration_cap(group, cap)
    table = []
    for x in group.elements():
        image: List[int] = []
        pos = 0
        for f in fs:
            k = f.group.rank
            image.extend(f(tuple(x[pos : pos + k])))
            pos += k
        table.append(group.element_index(tuple(image)))
    return TableMap(group, tuple(table))


def translate_map(f: TableMap, b: Element) -> TableMap:
    """``x -> f(x) + b``; preserves the antiautomorphism property."""
    g = f.group
    g._check_dim(b)
    shift = g.reduce(b)
    table = tuple(
        g.element_index(g.add(g.index_element(v), shift)) for v in f.table
    )
    return TableMap(g, table)


def compose(f: TableMap, g: TableMap) -> TableMap:
    """``f`` after ``g``: x -> f(g(x))."""
    if f.group != g.group:
        raise DimensionMismatch("composition needs maps on the same group")
    return TableMap(f.group, tuple(f.table[v] for v in g.table))


def map_order(f: TableMap) -> int:
    """Least m >= 1 with f^m = id, via the lcm of permutation cycle lengths."""
    if not is_bijection(f):
        raise NotBijective("map order is defined for bijections only")
    n = f.group.order
    seen = [False] * n
    order = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = f.table[j]
            length += 1
        order = math.lcm(order, length)
    return order


def conjugate_map(iso: GroupIsomorphism, f: TableMap) -> TableMap:
    """Pull a map on ``iso.target`` back to ``iso.source``.

    Conjugation by an additive bijection preserves bijectivity and the
    antimorphism property, so witnesses transport across isomorphisms.
    """
    if f.group != iso.target:
        raise DimensionMismatch("map must live on the isomorphism target")
    table = tuple(iso.backward[f.table[j]] for j in iso.forward)
    return TableMap(iso.source, table)
