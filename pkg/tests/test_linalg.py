import itertools

import pytest
from conftest import brute_force_det

from antiauto import (
    BinaryPolynomial,
    companion_matrix,
    det_mod,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    euler_phi,
    has_no_eigenvalue_one,
    identity_map,
    irreducible_poly_z2,
    is_antiautomorphism,
    is_bijection,
    is_invertible,
    is_linear,
    make_group,
    matrix_to_map,
    multiplication_map,
    residue_matrix,
)
from antiauto.errors import (
    BudgetExceeded,
    NonHomogeneousGroup,
    NotCyclic,
    NotIrreducible,
    ParseError,
)
from antiauto.linalg import parse_polynomial_spec, poly_is_irreducible_z2

Z2_CUBE = make_group([2, 2, 2])
REMARK_MATRIX = residue_matrix(Z2_CUBE, [[1, 1, 0], [0, 1, 1], [1, 1, 1]])


class TestResidueMatrix:
    def test_entries_reduced(self):
        m = residue_matrix(make_group([3, 3]), [[4, -1], [0, 2]])
        assert m.entries == ((1, 2), (0, 2))

    def test_homogeneity_required(self):
        with pytest.raises(NonHomogeneousGroup):
            residue_matrix(make_group([2, 4]), [[1, 0], [0, 1]])

    def test_shape_checked(self):
        with pytest.raises(NonHomogeneousGroup):
            residue_matrix(make_group([3, 3]), [[1, 0]])

    def test_row_major_json_roundtrip(self):
        import json

        g = make_group([4, 4])
        m = residue_matrix(g, [[1, 2], [3, 0]])
        wire = json.dumps([list(row) for row in m.entries])
        assert residue_matrix(g, json.loads(wire)) == m


class TestDeterminant:
    def test_against_permutation_expansion(self):
        # Bareiss elimination vs the Leibniz sum, over several moduli
        cases = [
            (5, [[1, 2], [3, 4]]),
            (4, [[2, 3], [1, 2]]),
            (9, [[1, 2, 3], [4, 5, 6], [7, 8, 1]]),
            (8, [[0, 1, 0], [0, 0, 1], [1, 1, 0]]),
            (7, [[3, 1, 4, 1], [5, 2, 6, 5], [3, 5, 8, 0], [2, 7, 1, 8]]),
        ]
        for modulus, rows in cases:
            group = make_group([modulus] * len(rows))
            assert det_mod(residue_matrix(group, rows)) == brute_force_det(rows, modulus)

    def test_remark_matrix_has_no_eigenvalue_one(self):
        assert det_mod(REMARK_MATRIX) == 1
        assert is_invertible(REMARK_MATRIX)
        assert has_no_eigenvalue_one(REMARK_MATRIX)

    def test_identity_always_has_eigenvalue_one(self):
        for moduli in [(2, 2), (3, 3, 3), (5,)]:
            g = make_group(moduli)
            eye = residue_matrix(
                g, [[int(i == j) for j in range(g.rank)] for i in range(g.rank)]
            )
            assert not has_no_eigenvalue_one(eye)

    def test_quadratic_companion(self):
        m = companion_matrix(parse_polynomial_spec("1,1,1"), 2)
        assert has_no_eigenvalue_one(m)


class TestMatrixToMap:
    def test_remark_map_formula(self):
        h = matrix_to_map(REMARK_MATRIX)
        for x, y, z in Z2_CUBE.elements():
            assert h((x, y, z)) == ((x + y) % 2, (y + z) % 2, (x + y + z) % 2)
        assert is_antiautomorphism(h)
        assert is_linear(h)

    def test_identity_matrix(self):
        g = make_group([3, 3])
        eye = residue_matrix(g, [[1, 0], [0, 1]])
        assert matrix_to_map(eye) == identity_map(g)

    def test_one_by_one(self):
        g = make_group([5])
        assert matrix_to_map(residue_matrix(g, [[2]])) == multiplication_map(g, 2)

    def test_always_linear(self):
        g = make_group([4, 4])
        for rows in [[[1, 2], [3, 0]], [[0, 1], [1, 1]], [[2, 2], [2, 2]]]:
            assert is_linear(matrix_to_map(residue_matrix(g, rows)))


class TestMultiplicationMap:
    def test_phi2_z5(self):
        assert is_antiautomorphism(multiplication_map(make_group([5]), 2))

    def test_phi4_z9(self):
        f = multiplication_map(make_group([9]), 4)
        assert is_bijection(f)
        assert not is_antiautomorphism(f)

    def test_identity_multiplier(self):
        from antiauto import is_antimorphism

        assert not is_antimorphism(multiplication_map(make_group([5]), 1))

    def test_requires_cyclic(self):
        with pytest.raises(NotCyclic):
            multiplication_map(make_group([2, 2]), 1)

    def test_gcd_contract(self):
        import math

        for n in (5, 6, 8, 9, 12, 15):
            g = make_group([n])
            for a in range(n):
                f = multiplication_map(g, a)
                assert is_bijection(f) == (math.gcd(a, n) == 1)
                expected = math.gcd(a, n) == 1 and math.gcd(a - 1, n) == 1
                assert is_antiautomorphism(f) == expected


class TestAntiautoMatrixContract:
    def test_exhaustive_2x2(self):
        # antiautomorphism <=> invertible and no eigenvalue 1, all 2x2 over Z2 and Z3
        for modulus in (2, 3):
            g = make_group([modulus] * 2)
            for flat in itertools.product(range(modulus), repeat=4):
                m = residue_matrix(g, [flat[:2], flat[2:]])
                expected = is_invertible(m) and has_no_eigenvalue_one(m)
                assert is_antiautomorphism(matrix_to_map(m)) == expected

    def test_exhaustive_3x3_z2(self):
        g = make_group([2, 2, 2])
        for flat in itertools.product(range(2), repeat=9):
            m = residue_matrix(g, [flat[:3], flat[3:6], flat[6:]])
            expected = is_invertible(m) and has_no_eigenvalue_one(m)
            assert is_antiautomorphism(matrix_to_map(m)) == expected


class TestPolynomials:
    def test_validation(self):
        with pytest.raises(ParseError):
            BinaryPolynomial((1,))  # degree 0
        with pytest.raises(ParseError):
            BinaryPolynomial((1, 0))  # not monic after reduction

    def test_spec_roundtrip(self):
        p = parse_polynomial_spec("1,1,0,1")
        assert p.degree == 3
        assert str(p) == "1 + t + t^3"
        assert p.spec() == "1,1,0,1"

    @pytest.mark.parametrize(
        "n,expected",
        [(2, (1, 1, 1)), (3, (1, 1, 0, 1)), (4, (1, 1, 0, 0, 1))],
    )
    def test_smallest_irreducible(self, n, expected):
        assert irreducible_poly_z2(n).coefficients == expected

    def test_irreducibility_against_product_oracle(self):
        # reducible <=> equal to a product of two smaller monic polynomials
        def products(n):
            out = set()
            for da in range(1, n):
                db = n - da
                if db < 1:
                    continue
                for la in range(1 << da):
                    for lb in range(1 << db):
                        a = (1 << da) | la
                        b = (1 << db) | lb
                        prod = 0
                        aa = a
                        shift = 0
                        while aa:
                            if aa & 1:
                                prod ^= b << shift
                            aa >>= 1
                            shift += 1
                        out.add(prod)
            return out

        for n in (2, 3, 4, 5):
            reducible = products(n)
            for low in range(1 << n):
                bits = (1 << n) | low
                poly_coeffs = tuple((bits >> i) & 1 for i in range(n + 1))
                poly = BinaryPolynomial(poly_coeffs)
                assert poly_is_irreducible_z2(poly) == (bits not in reducible)


class TestCompanionMatrix:
    def test_entries_are_bits(self):
        m = companion_matrix(irreducible_poly_z2(3), 8)
        assert m.entries == ((0, 0, 1), (1, 0, 1), (0, 1, 0))

    @pytest.mark.parametrize("n,modulus", [(2, 2), (2, 4), (3, 8), (3, 2), (4, 4)])
    def test_yields_antiautomorphism(self, n, modulus):
        m = companion_matrix(irreducible_poly_z2(n), modulus)
        assert is_antiautomorphism(matrix_to_map(m))

    def test_lift_reduces_to_base(self):
        base = companion_matrix(irreducible_poly_z2(3), 2)
        lifted = companion_matrix(irreducible_poly_z2(3), 16)
        reduced = tuple(tuple(v % 2 for v in row) for row in lifted.entries)
        assert reduced == base.entries

    def test_rejects_reducible(self):
        with pytest.raises(NotIrreducible):
            companion_matrix(parse_polynomial_spec("1,0,1"), 2)  # (t+1)^2

    def test_rejects_non_power_of_two(self):
        with pytest.raises(ValueError):
            companion_matrix(irreducible_poly_z2(2), 6)


class TestEndomorphismEnumeration:
    def test_klein_endo_count(self):
        assert sum(1 for _ in enumerate_endomorphisms(make_group([2, 2]))) == 16

    def test_z2_z4_aut_count(self):
        assert sum(1 for _ in enumerate_automorphisms(make_group([2, 4]))) == 8

    def test_cyclic_aut_counts(self):
        for q in (3, 4, 5, 7, 8, 9, 16, 25):
            count = sum(1 for _ in enumerate_automorphisms(make_group([q])))
            assert count == euler_phi(q)

    def test_all_outputs_linear_bijections(self):
        for moduli in [(2, 4), (3, 3), (2, 2, 2)]:
            for f in enumerate_automorphisms(make_group(moduli)):
                assert is_bijection(f)
                assert is_linear(f)

    def test_endomorphism_tables_are_additive(self):
        g = make_group([2, 4])
        for f in enumerate_endomorphisms(g):
            for x in g.elements():
                for y in g.elements():
                    assert f(g.add(x, y)) == g.add(f(x), f(y))

    def test_deterministic_order(self):
        first = [f.table for f in enumerate_endomorphisms(make_group([2, 2]))]
        second = [f.table for f in enumerate_endomorphisms(make_group([2, 2]))]
        assert first == second
        assert first[0] == (0, 0, 0, 0)  # zero map comes first

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            next(enumerate_endomorphisms(make_group([128])))
