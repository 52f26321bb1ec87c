import pytest

from antiauto import (
    elementary2_antiauto,
    enumerate_antiautomorphisms,
    homogeneous2_antiauto,
    is_antiautomorphism,
    is_linear,
    klein_antiauto,
    make_group,
    odd_cyclic_antiautos,
    z2_z4_antiauto,
    z2cubed_antiauto,
)
from antiauto.errors import BudgetExceeded, NotOdd, RankTooSmall

KLEIN_ROWS = {
    (1, 1): (0, 0),
    (0, 1): (0, 1),
    (0, 0): (1, 0),
    (1, 0): (1, 1),
}

Z2_CUBE_ROWS = {
    (1, 1, 1): (0, 0, 0),
    (1, 0, 1): (0, 0, 1),
    (0, 1, 1): (0, 1, 0),
    (0, 0, 1): (0, 1, 1),
    (0, 1, 0): (1, 0, 0),
    (0, 0, 0): (1, 0, 1),
    (1, 1, 0): (1, 1, 0),
    (1, 0, 0): (1, 1, 1),
}

Z2_Z4_ROWS = {
    (1, 3): (0, 0),
    (1, 2): (0, 1),
    (0, 3): (0, 2),
    (0, 2): (0, 3),
    (1, 0): (1, 0),
    (0, 1): (1, 1),
    (0, 0): (1, 2),
    (1, 1): (1, 3),
}


class TestExplicitTables:
    def test_klein_rows(self):
        f = klein_antiauto()
        assert f.group.moduli == (2, 2)
        for x, y in KLEIN_ROWS.items():
            assert f(x) == y
        assert is_antiautomorphism(f)

    def test_z2_cube_rows(self):
        f = z2cubed_antiauto()
        for x, y in Z2_CUBE_ROWS.items():
            assert f(x) == y
        assert is_antiautomorphism(f)
        assert f((1, 1, 0)) == (1, 1, 0)  # a fixed point is fine
        assert not is_linear(f)

    def test_z2_z4_rows(self):
        f = z2_z4_antiauto()
        for x, y in Z2_Z4_ROWS.items():
            assert f(x) == y
        assert is_antiautomorphism(f)
        assert not is_linear(f)


class TestElementary2:
    def test_base_cases(self):
        assert elementary2_antiauto(2) == klein_antiauto()
        assert elementary2_antiauto(3) == z2cubed_antiauto()

    @pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
    def test_verified_up_to_rank_6(self, r):
        f = elementary2_antiauto(r)
        assert f.group.moduli == (2,) * r
        assert is_antiautomorphism(f)

    def test_odd_rank_block_structure(self):
        # rank 5 = one Klein block then the rank-3 table
        f = elementary2_antiauto(5)
        k = klein_antiauto()
        c = z2cubed_antiauto()
        for x in f.group.elements():
            assert f(x) == k(x[:2]) + c(x[2:])

    def test_rank_too_small(self):
        with pytest.raises(RankTooSmall):
            elementary2_antiauto(1)


class TestHomogeneous2:
    @pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 2), (3, 2), (2, 3)])
    def test_verified(self, m, n):
        f = homogeneous2_antiauto(m, n)
        assert f.group.moduli == (2 ** m,) * n
        assert is_antiautomorphism(f)

    def test_linear_by_construction(self):
        assert is_linear(homogeneous2_antiauto(2, 2))

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            homogeneous2_antiauto(7, 2)  # 2^14 entries over the default cap

    def test_bad_rank(self):
        with pytest.raises(RankTooSmall):
            homogeneous2_antiauto(2, 1)


class TestOddCyclicFamily:
    def test_z3_is_everything(self):
        family = list(odd_cyclic_antiautos(3))
        assert len(family) == 3
        every = list(enumerate_antiautomorphisms(make_group([3])))
        assert set(family) == set(every)

    def test_counts(self):
        assert sum(1 for _ in odd_cyclic_antiautos(5)) == 15
        assert sum(1 for _ in odd_cyclic_antiautos(9)) == 27

    def test_all_verified_and_distinct(self):
        family = list(odd_cyclic_antiautos(15))
        assert len(family) == len(set(family)) == 15 * 3
        for f in family[:10]:
            assert is_antiautomorphism(f)

    def test_rejects_even(self):
        with pytest.raises(NotOdd):
            next(odd_cyclic_antiautos(6))
