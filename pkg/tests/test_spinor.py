"""Exterior-algebra oracle.

Claims covered:
    - Scalar implements Q[i, sqrt(2)] exactly (i^2 = -1, sqrt(2)^2 = 2,
      and the dedicated fast transforms agree with generic multiplication)
    - generator actions reproduce the hand-checked contractions/wedges,
      Koszul signs included
    - paired real generators act by +-i depending on membership, and the
      full Clifford anticommutation relations hold on all monomials (r <= 5)
    - the torus action is diagonal with purely imaginary eigenvalues
    - joint-kernel dimensions equal the combinatorial counts (the central
      cross-validation) and are closed under monomial complement
"""

from fractions import Fraction
from itertools import product

import pytest

from rootspin import (
    DimensionMismatchError,
    FamilyRank,
    IndexOutOfRangeError,
    ResourceLimitError,
    count_bruteforce,
    invariant_dimension,
    positive_roots,
)
from rootspin.spinor import (
    I_SQRT2,
    Scalar,
    SpinorElement,
    act_e,
    act_x,
    act_y,
    cartan_act,
)


def mono(rank, *indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return SpinorElement.monomial(rank, mask)


class TestScalar:
    def test_ring_relations(self):
        i = Scalar(0, 1, 0, 0)
        rt2 = Scalar(0, 0, 1, 0)
        assert i * i == Scalar.of(-1)
        assert rt2 * rt2 == Scalar.of(2)
        assert i * rt2 == Scalar(0, 0, 0, 1)
        assert I_SQRT2 * I_SQRT2 == Scalar.of(-2)

    def test_fast_transforms_match_generic_product(self):
        samples = [
            Scalar(Fraction(1, 2), -2, Fraction(3, 4), 5),
            Scalar(0, 1, 1, 0),
            Scalar(-1, 0, 0, Fraction(-7, 3)),
        ]
        inv_rt2 = Scalar(0, 0, Fraction(1, 2), 0)
        i_inv_rt2 = Scalar(0, 0, 0, Fraction(1, 2))
        for s in samples:
            assert s.times_i_sqrt2() == s * I_SQRT2
            assert s.times_i_sqrt2(-1) == -(s * I_SQRT2)
            assert s.times_inv_sqrt2() == s * inv_rt2
            assert s.times_i_inv_sqrt2() == s * i_inv_rt2
            assert s.times_rational(Fraction(3, 7)) == s * Scalar.of(Fraction(3, 7))

    def test_zero_detection(self):
        assert Scalar().is_zero
        assert not Scalar(0, 0, 1, 0).is_zero
        assert Scalar(1, 2, 0, 0).in_gaussian_part
        assert not Scalar(0, 0, 0, 1).in_gaussian_part


class TestGeneratorActions:
    def test_contract_single_factor(self):
        assert act_x(0, mono(3, 0)) == SpinorElement.monomial(3, 0, I_SQRT2)

    def test_contract_with_koszul_sign(self):
        # passing one factor flips the sign: -i*sqrt(2) * y_0
        result = act_x(1, mono(3, 0, 1))
        assert result == SpinorElement.monomial(3, 0b001, Scalar(0, 0, 0, -1))

    def test_contract_absent_index(self):
        assert act_x(2, mono(3, 0, 1)).is_zero

    def test_wedge_unit(self):
        assert act_y(0, SpinorElement.unit(3)) == SpinorElement.monomial(3, 1, I_SQRT2)

    def test_wedge_square_is_zero(self):
        assert act_y(0, mono(3, 0)).is_zero

    def test_wedge_reorders_with_sign(self):
        result = act_y(1, mono(3, 0))
        assert result == SpinorElement.monomial(3, 0b011, Scalar(0, 0, 0, -1))

    def test_index_validation(self):
        with pytest.raises(IndexOutOfRangeError):
            act_x(3, mono(3, 0))
        with pytest.raises(IndexOutOfRangeError):
            act_e(0, 3, mono(3, 0))

    def test_linearity(self):
        eta = mono(4, 0, 2) + mono(4, 1).scaled(Scalar.of(Fraction(2, 3)))
        split = act_y(3, mono(4, 0, 2)) + act_y(3, mono(4, 1).scaled(Scalar.of(Fraction(2, 3))))
        assert act_y(3, eta) == split


class TestPairedAction:
    @pytest.mark.parametrize("mask", range(8))
    @pytest.mark.parametrize("j", range(3))
    def test_eigenvalue_is_plus_minus_i(self, mask, j):
        term = act_e(j, 1, act_e(j, 2, SpinorElement.monomial(3, mask)))
        assert list(term.terms) == [mask]
        coeff = term.terms[mask]
        expected_b = -1 if (mask >> j) & 1 else 1
        assert (coeff.a, coeff.b, coeff.c, coeff.d) == (0, expected_b, 0, 0)

    def test_generator_squares_to_minus_one(self):
        for mask, j, axis in product(range(8), range(3), (1, 2)):
            eta = SpinorElement.monomial(3, mask)
            assert act_e(j, axis, act_e(j, axis, eta)) == eta.scaled(Scalar.of(-1))

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_anticommutation_relations(self, r):
        gens = [(j, axis) for j in range(r) for axis in (1, 2)]
        for mask in range(1 << r):
            eta = SpinorElement.monomial(r, mask)
            for (j, a), (k, b) in product(gens, gens):
                anti = act_e(j, a, act_e(k, b, eta)) + act_e(k, b, act_e(j, a, eta))
                if (j, a) == (k, b):
                    assert anti == eta.scaled(Scalar.of(-2)), (mask, j, a)
                else:
                    assert anti.is_zero, (mask, j, a, k, b)


class TestCartanAction:
    def test_g2_on_unit(self):
        g2 = positive_roots(FamilyRank("G", 2))
        result = cartan_act(g2, [1, 0], SpinorElement.unit(6))
        # (i/2) * (sum of first coordinates) = (i/2) * 4 = 2i
        assert result == SpinorElement.monomial(6, 0, Scalar(0, 2, 0, 0))

    def test_zero_direction(self):
        g2 = positive_roots(FamilyRank("G", 2))
        assert cartan_act(g2, [0, 0], mono(6, 1, 3)).is_zero

    def test_a2_balanced_monomial_is_annihilated(self):
        # y_{1}: the middle root equals the sum of the other two.
        a2 = positive_roots(FamilyRank("A", 2))
        for X in ([1, 0], [0, 1], [Fraction(2, 3), Fraction(-1, 5)]):
            assert cartan_act(a2, X, mono(3, 1)).is_zero

    def test_diagonal_with_purely_imaginary_eigenvalue(self):
        c3 = positive_roots(FamilyRank("C", 3))
        for mask in (0, 0b101, 0b111111000, 0b100000001):
            eta = SpinorElement.monomial(9, mask)
            out = cartan_act(c3, [Fraction(1, 2), -2, Fraction(7, 3)], eta)
            assert set(out.terms) <= {mask}
            for coeff in out.terms.values():
                assert coeff.a == 0 and coeff.c == 0 and coeff.d == 0

    def test_dimension_mismatch(self):
        g2 = positive_roots(FamilyRank("G", 2))
        with pytest.raises(DimensionMismatchError):
            cartan_act(g2, [1, 0, 0], SpinorElement.unit(6))
        with pytest.raises(DimensionMismatchError):
            cartan_act(g2, [1, 0], SpinorElement.unit(5))


class TestInvariantDimension:
    @pytest.mark.parametrize(
        "family,rank,expected", [("G", 2, 4), ("A", 1, 0), ("B", 2, 0)]
    )
    def test_known_dimensions(self, family, rank, expected):
        assert invariant_dimension(positive_roots(FamilyRank(family, rank))) == expected

    @pytest.mark.parametrize("name", ["A2", "A3", "B3", "C3", "D4"])
    def test_matches_combinatorial_count(self, name, catalogue):
        system = catalogue[name]
        assert invariant_dimension(system) == count_bruteforce(system).value

    def test_complement_symmetry(self):
        a2 = positive_roots(FamilyRank("A", 2))
        annihilated = set()
        for mask in range(8):
            eta = SpinorElement.monomial(3, mask)
            if all(cartan_act(a2, X, eta).is_zero for X in ([1, 0], [0, 1])):
                annihilated.add(mask)
        assert annihilated == {mask ^ 0b111 for mask in annihilated}
        assert len(annihilated) == 2

    def test_resource_limit(self):
        with pytest.raises(ResourceLimitError):
            invariant_dimension(positive_roots(FamilyRank("E", 6)))
        with pytest.raises(ResourceLimitError):
            invariant_dimension(positive_roots(FamilyRank("A", 5)), limit_r=14)
