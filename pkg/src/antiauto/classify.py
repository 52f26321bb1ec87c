"""Decision procedures for antiautomorphism and biantiautomorphism existence.

The antiautomorphism decision is a first-match pipeline: the involution
count settles the two rule-based cases, everything else is reduced through
the prime-power decomposition to the group's 2-part, where the explicit
constructions apply or a budgeted search takes over.  Verdicts carry
verified witnesses; "not exists by exhausted search" and "unknown because
the budget ran out" are kept distinct on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .budget import DEFAULT_COUNT_BUDGET, DEFAULT_EXISTENCE_BUDGET, SearchBudget
from .construct import (
    elementary2_antiauto,
    homogeneous2_antiauto,
    klein_antiauto,
    z2_z4_antiauto,
    z2cubed_antiauto,
)
from .errors import BudgetExceeded, ConstructionFailed, UnknownProposition
from .groups import (
    AbelianGroup,
    GroupIsomorphism,
    abelian_groups_up_to_order,
    compose_isomorphisms,
    count_involutions,
    crt_decompose,
    group_sum,
    involutions,
    permutation_isomorphism,
)
from .linalg import enumerate_automorphisms
from .maps import (
    TableMap,
    conjugate_map,
    direct_sum_map,
    is_antiautomorphism,
    is_linear,
    negation_map,
)
from .search import (
    biantiauto_count_formula,
    count_antiautomorphisms,
    count_biantiautomorphisms_bruteforce,
    exists_antiautomorphism_search,
    verify_no_prime_order_fpf_automorphism,
)

EXISTS = "exists"
NOT_EXISTS = "not-exists"
UNKNOWN = "unknown"

METHOD_NEGATION = "negation"
METHOD_ELEMENTARY2 = "elementary2"
METHOD_COMPANION2 = "companion2"
METHOD_TABLE_Z2Z4 = "explicit-table-Z2Z4"
METHOD_DIRECT_SUM = "direct-sum"
METHOD_SEARCH = "search"

REASON_UNIQUE_INVOLUTION = "unique-involution"
REASON_SEARCH_EXHAUSTED = "search-exhausted"


@dataclass(frozen=True)
class ClassificationVerdict:
    """Exists(witness, method) | NotExists(reason) | Unknown(budget_note)."""

    status: str
    witness: Optional[TableMap] = None
    method: Optional[str] = None
    reason: Optional[str] = None
    budget_note: Optional[str] = None

    def __post_init__(self) -> None:
        if self.status not in (EXISTS, NOT_EXISTS, UNKNOWN):
            raise ValueError(f"bad verdict status {self.status!r}")
        if self.status == EXISTS and self.witness is None:
            raise ValueError("an Exists verdict needs a witness")

    def to_json_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {"status": self.status}
        if self.method is not None:
            out["method"] = self.method
        if self.reason is not None:
            out["reason"] = self.reason
        if self.budget_note is not None:
            out["budget_note"] = self.budget_note
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        return out


def _exists(witness: TableMap, method: str, linear: bool = False) -> ClassificationVerdict:
    if not is_antiautomorphism(witness):
        raise ConstructionFailed(f"{method} witness failed re-verification")
    if linear and not is_linear(witness):
        raise ConstructionFailed(f"{method} witness is not linear")
    return ClassificationVerdict(EXISTS, witness=witness, method=method)


def _split_two_odd(
    group: AbelianGroup,
) -> Tuple[GroupIsomorphism, AbelianGroup, Optional[AbelianGroup]]:
    """Isomorphism onto (2-part ascending) + (odd part ascending)."""
    crt = crt_decompose(group)
    inner = crt.target
    perm = sorted(
        range(inner.rank), key=lambda j: (inner.moduli[j] % 2, inner.moduli[j], j)
    )
    iso = compose_isomorphisms(crt, permutation_isomorphism(inner, perm))
    target = iso.target
    n_two = sum(1 for d in target.moduli if d % 2 == 0)
    two_part = AbelianGroup(target.moduli[:n_two])
    odd_part = AbelianGroup(target.moduli[n_two:]) if n_two < target.rank else None
    return iso, two_part, odd_part


def decide_antiautomorphism(
    group: AbelianGroup, budget: Optional[SearchBudget] = None
) -> ClassificationVerdict:
    """Decide existence of an antiautomorphism, producing a verified witness.

    Pipeline, first match wins: no involutions -> negation; a unique
    involution -> impossible; otherwise reduce to the 2-part, which is
    handled by the homogeneous constructions, the explicit Z2+Z4 table, or
    a budgeted search, and direct-summed with negation on the odd part.
    """
    budget = budget or DEFAULT_EXISTENCE_BUDGET
    inv = count_involutions(group)
    if inv == 1:
        return ClassificationVerdict(NOT_EXISTS, reason=REASON_UNIQUE_INVOLUTION)
    try:
        return _decide_anti_with_witness(group, budget, inv)
    except BudgetExceeded as exc:
        return ClassificationVerdict(UNKNOWN, budget_note=str(exc))


def _decide_anti_with_witness(
    group: AbelianGroup, budget: SearchBudget, inv: int
) -> ClassificationVerdict:
    if inv == 0:
        return _exists(negation_map(group), METHOD_NEGATION)

    iso, two_part, odd_part = _split_two_odd(group)
    two = two_part.moduli
    if len(set(two)) == 1:
        exponent = two[0].bit_length() - 1
        if exponent == 1:
            witness_two = elementary2_antiauto(len(two))
            method = METHOD_ELEMENTARY2
        else:
            witness_two = homogeneous2_antiauto(exponent, len(two))
            method = METHOD_COMPANION2
    elif sorted(two) == [2, 4]:
        witness_two = z2_z4_antiauto()
        method = METHOD_TABLE_Z2Z4
    else:
        if two_part.order > budget.max_group_order:
            return ClassificationVerdict(
                UNKNOWN,
                budget_note=(
                    f"2-part order {two_part.order} exceeds search budget "
                    f"{budget.max_group_order}"
                ),
            )
        witness_two = exists_antiautomorphism_search(two_part, budget)
        if witness_two is None:
            return ClassificationVerdict(NOT_EXISTS, reason=REASON_SEARCH_EXHAUSTED)
        method = METHOD_SEARCH

    if odd_part is None:
        assembled = witness_two
    else:
        assembled = direct_sum_map([witness_two, negation_map(odd_part)])
    return _exists(conjugate_map(iso, assembled), method)


def decide_biantiautomorphism(
    group: AbelianGroup, budget: Optional[SearchBudget] = None
) -> ClassificationVerdict:
    """Decide existence of a linear antiautomorphism.

    Without 2-torsion, negation works (it is linear and its difference with
    the identity is doubling, a bijection).  A unique involution rules out
    even plain antiautomorphisms.  The rest is a brute-force filter over
    the automorphisms within budget.
    """
    budget = budget or DEFAULT_EXISTENCE_BUDGET
    inv = count_involutions(group)
    if inv == 1:
        return ClassificationVerdict(NOT_EXISTS, reason=REASON_UNIQUE_INVOLUTION)
    try:
        if inv == 0:
            # negation is a homomorphism by construction, no linearity re-check
            return _exists(negation_map(group), METHOD_NEGATION)
        if group.order > budget.max_group_order:
            return ClassificationVerdict(
                UNKNOWN,
                budget_note=(
                    f"group order {group.order} exceeds search budget {budget.max_group_order}"
                ),
            )
        for f in enumerate_automorphisms(group, budget):
            if is_antiautomorphism(f):
                return _exists(f, METHOD_SEARCH, linear=True)
        return ClassificationVerdict(NOT_EXISTS, reason=REASON_SEARCH_EXHAUSTED)
    except BudgetExceeded as exc:
        return ClassificationVerdict(UNKNOWN, budget_note=str(exc))


# -- named verification suites ---------------------------------------------------


@dataclass(frozen=True)
class CheckLine:
    label: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    check_id: str
    description: str
    lines: Tuple[CheckLine, ...]

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.lines)

    def summary(self) -> str:
        good = sum(1 for line in self.lines if line.passed)
        return f"{self.check_id}: {good}/{len(self.lines)} checks passed"


def _line(label: str, passed: bool, detail: str = "") -> CheckLine:
    return CheckLine(label=label, passed=bool(passed), detail=detail)


def _check_even_cyclic(max_order: int) -> List[CheckLine]:
    lines = []
    count_cap = DEFAULT_COUNT_BUDGET.max_group_order
    for n in range(2, max_order + 1, 2):
        group = AbelianGroup((n,))
        if n <= count_cap:
            count = count_antiautomorphisms(group)
            lines.append(
                _line(f"Z{n}: exhaustive count is 0", count == 0, f"count={count}")
            )
        else:
            inv = count_involutions(group)
            lines.append(
                _line(
                    f"Z{n}: unique involution (count check over budget)",
                    inv == 1,
                    f"involutions={inv}",
                )
            )
    return lines


def _check_negation_rule(max_order: int) -> List[CheckLine]:
    lines = []
    for group in abelian_groups_up_to_order(max_order):
        expected = count_involutions(group) == 0
        actual = is_antiautomorphism(negation_map(group))
        lines.append(
            _line(
                f"{group}: negation works iff no involution",
                actual == expected,
                f"negation={actual}, involutions={count_involutions(group)}",
            )
        )
    return lines


def _check_unique_involution(max_order: int) -> List[CheckLine]:
    lines = []
    count_cap = DEFAULT_COUNT_BUDGET.max_group_order
    for group in abelian_groups_up_to_order(max_order):
        if count_involutions(group) != 1:
            continue
        unique = involutions(group)[0]
        total = group_sum(group)
        lines.append(
            _line(
                f"{group}: sum of all elements is the involution",
                total == unique,
                f"sum={total}",
            )
        )
        if group.order <= count_cap:
            count = count_antiautomorphisms(group)
            lines.append(
                _line(f"{group}: exhaustive count is 0", count == 0, f"count={count}")
            )
    return lines


def _check_direct_sum(max_order: int) -> List[CheckLine]:
    pool: List[Tuple[str, TableMap]] = [
        ("neg(Z3)", negation_map(AbelianGroup((3,)))),
        ("neg(Z5)", negation_map(AbelianGroup((5,)))),
        ("klein", klein_antiauto()),
        ("rank3", z2cubed_antiauto()),
        ("Z2+Z4 table", z2_z4_antiauto()),
    ]
    lines = []
    for name_a, f in pool:
        for name_b, g in pool:
            if f.group.order * g.group.order > max_order:
                continue
            combined = direct_sum_map([f, g])
            lines.append(
                _line(
                    f"{name_a} (+) {name_b} is an antiautomorphism",
                    is_antiautomorphism(combined),
                )
            )
    return lines


def _check_elementary_2_groups(max_order: int) -> List[CheckLine]:
    lines = []
    lines.append(_line("klein table verifies", is_antiautomorphism(klein_antiauto())))
    lines.append(_line("rank-3 table verifies", is_antiautomorphism(z2cubed_antiauto())))
    count_cap = DEFAULT_COUNT_BUDGET.max_group_order
    if 4 <= count_cap:
        lines.append(
            _line(
                "Z2+Z2 has 8 antiautomorphisms",
                count_antiautomorphisms(AbelianGroup((2, 2))) == 8,
            )
        )
    if 8 <= count_cap:
        lines.append(
            _line(
                "Z2+Z2+Z2 has 384 antiautomorphisms",
                count_antiautomorphisms(AbelianGroup((2, 2, 2))) == 384,
            )
        )
    r = 2
    while 2 ** r <= max_order:
        lines.append(
            _line(
                f"elementary2({r}) verifies on Z2^{r}",
                is_antiautomorphism(elementary2_antiauto(r)),
            )
        )
        r += 1
    return lines


def _check_homogeneous_2_groups(max_order: int) -> List[CheckLine]:
    lines = []
    m = 1
    while 2 ** (2 * m) <= max_order:
        n = 2
        while 2 ** (m * n) <= max_order:
            lines.append(
                _line(
                    f"companion witness verifies on (Z{2 ** m})^{n}",
                    is_antiautomorphism(homogeneous2_antiauto(m, n)),
                )
            )
            n += 1
        m += 1
    return lines


def _check_z2z4(max_order: int) -> List[CheckLine]:
    table = z2_z4_antiauto()
    group = AbelianGroup((2, 4))
    witness = exists_antiautomorphism_search(group)
    return [
        _line("explicit Z2+Z4 table is an antiautomorphism", is_antiautomorphism(table)),
        _line("explicit Z2+Z4 table is not linear", not is_linear(table)),
        _line(
            "Z2+Z4 has no biantiautomorphism",
            count_biantiautomorphisms_bruteforce(group) == 0,
        ),
        _line("search finds a Z2+Z4 witness", witness is not None),
    ]


def _check_distinct_exponent_2_groups(max_order: int) -> List[CheckLine]:
    lines = []
    exponents: List[Tuple[int, ...]] = []

    def grow(prefix: Tuple[int, ...], next_exp: int, order: int) -> None:
        if len(prefix) >= 2:
            exponents.append(prefix)
        e = next_exp
        while order * 2 ** e <= max_order:
            grow(prefix + (e,), e + 1, order * 2 ** e)
            e += 1

    grow((), 1, 1)
    for exps in sorted(exponents, key=lambda t: (sum(t), t)):
        group = AbelianGroup(tuple(2 ** e for e in exps))
        lines.append(
            _line(
                f"{group}: no prime-order fixed-point-free automorphism",
                verify_no_prime_order_fpf_automorphism(group),
            )
        )
    return lines


def _check_bianti_formula(max_order: int) -> List[CheckLine]:
    lines = []
    for n in range(3, max_order + 1, 2):
        expected = biantiauto_count_formula(n)
        actual = count_biantiautomorphisms_bruteforce(AbelianGroup((n,)))
        lines.append(
            _line(
                f"Z{n}: brute-force biantiautomorphism count matches formula",
                actual == expected,
                f"formula={expected}, bruteforce={actual}",
            )
        )
    return lines


def _check_classification(max_order: int) -> List[CheckLine]:
    lines = []
    count_cap = DEFAULT_COUNT_BUDGET.max_group_order
    for group in abelian_groups_up_to_order(max_order):
        verdict = decide_antiautomorphism(group)
        inv = count_involutions(group)
        if inv == 0:
            ok = verdict.status == EXISTS
            rule = "no involutions -> exists"
        elif inv == 1:
            ok = verdict.status == NOT_EXISTS
            rule = "unique involution -> not exists"
        elif len(set(group.moduli)) == 1 and group.moduli[0] % 2 == 0:
            ok = verdict.status == EXISTS
            rule = "homogeneous 2-group -> exists"
        else:
            ok = verdict.status in (EXISTS, NOT_EXISTS, UNKNOWN)
            rule = "outside the rule set"
        lines.append(_line(f"{group}: {rule}", ok, f"verdict={verdict.status}"))
        if group.order <= count_cap and verdict.status != UNKNOWN:
            count = count_antiautomorphisms(group)
            lines.append(
                _line(
                    f"{group}: verdict agrees with the exhaustive count",
                    (count > 0) == (verdict.status == EXISTS),
                    f"count={count}",
                )
            )
    return lines


CHECKS: Dict[str, Tuple[str, Callable[[int], List[CheckLine]]]] = {
    "P2": ("even cyclic groups admit no antiautomorphism", _check_even_cyclic),
    "P5": ("negation works exactly without 2-torsion", _check_negation_rule),
    "P6": ("a unique involution rules antiautomorphisms out", _check_unique_involution),
    "L7": ("direct sums of antiautomorphisms stay antiautomorphisms", _check_direct_sum),
    "P9": ("elementary abelian 2-groups of rank >= 2 admit witnesses", _check_elementary_2_groups),
    "P10": ("homogeneous 2-power groups admit companion witnesses", _check_homogeneous_2_groups),
    "P11": ("Z2+Z4: antiautomorphism yes, biantiautomorphism no", _check_z2z4),
    "P12": ("distinct-exponent 2-groups: no prime-order fixed-point-free automorphism", _check_distinct_exponent_2_groups),
    "T-formula": ("odd cyclic biantiautomorphism count formula", _check_bianti_formula),
    "T-classification": ("classification rules against ground truth", _check_classification),
}


def run_check(check_id: str, max_order: int = 12) -> VerificationReport:
    """Run one named verification suite over all applicable groups."""
    if check_id not in CHECKS:
        known = ", ".join(sorted(CHECKS))
        raise UnknownProposition(f"unknown check {check_id!r}; supported: {known}")
    if max_order < 2:
        raise ValueError("max_order must be at least 2")
    description, runner = CHECKS[check_id]
    return VerificationReport(check_id, description, tuple(runner(max_order)))
