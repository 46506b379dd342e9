"""Randomised invariants of the counting engines and the oracle.

Each property runs 100 randomised trials (hypothesis), on small integer
root matrices where exhaustive counting is cheap:

    - exact counts are even, and the two engines always agree (dual route)
    - counts are invariant under negating a root, permuting the list,
      and applying a fixed unimodular transform
    - a failed obstruction forces a zero count (soundness)
    - existence always comes with a verifying witness, and agrees with
      the positivity of the exact count
    - the solution set is closed under global sign flip
    - the torus action stays diagonal with purely imaginary eigenvalues
"""

from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from rootspin import (
    count_bruteforce,
    count_mitm,
    enumerate_zero_signs,
    exists_strong_dependence,
    hnf,
    obstruction_2L,
    signed_sum,
)
from rootspin.spinor import SpinorElement, cartan_act

_coord = st.integers(min_value=-3, max_value=3)


@st.composite
def root_matrices(draw, max_r=8, max_m=3):
    m = draw(st.integers(1, max_m))
    r = draw(st.integers(1, max_r))
    rows = draw(
        st.lists(
            st.lists(_coord, min_size=m, max_size=m).filter(any),
            min_size=r,
            max_size=r,
        )
    )
    return np.array(rows, dtype=np.int64)


# Fixed unimodular transforms per dimension (determinant +-1).
_UNIMODULAR = {
    1: np.array([[-1]]),
    2: np.array([[1, 1], [0, 1]]),
    3: np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]]),
}

common = settings(max_examples=100, deadline=None)


@common
@given(root_matrices())
def test_engines_agree_and_count_is_even(roots):
    brute = count_bruteforce(roots).value
    assert brute == count_mitm(roots).value
    assert brute % 2 == 0


@common
@given(root_matrices(), st.data())
def test_negating_one_root_preserves_count(roots, data):
    k = data.draw(st.integers(0, roots.shape[0] - 1))
    flipped = roots.copy()
    flipped[k] = -flipped[k]
    assert count_bruteforce(roots).value == count_bruteforce(flipped).value


@common
@given(root_matrices(), st.randoms(use_true_random=False))
def test_permuting_roots_preserves_count(roots, rng):
    order = list(range(roots.shape[0]))
    rng.shuffle(order)
    assert count_bruteforce(roots).value == count_bruteforce(roots[order]).value


@common
@given(root_matrices())
def test_unimodular_transform_preserves_count(roots):
    transformed = roots @ _UNIMODULAR[roots.shape[1]].T
    assert count_bruteforce(roots).value == count_bruteforce(transformed).value


@common
@given(root_matrices())
def test_obstruction_soundness(roots):
    if not obstruction_2L(roots).passed:
        assert count_bruteforce(roots).value == 0


@common
@given(root_matrices())
def test_existence_agrees_with_count_and_witness_verifies(roots):
    result = exists_strong_dependence(roots)
    assert result.exists == (count_bruteforce(roots).value > 0)
    if result.exists:
        assert not signed_sum(roots, result.witness).any()


@common
@given(root_matrices(max_r=6))
def test_solution_set_closed_under_global_flip(roots):
    solutions = {tuple(s) for s in enumerate_zero_signs(roots)}
    assert solutions == {tuple(-np.array(s)) for s in solutions}


@common
@given(root_matrices())
def test_generators_lie_in_own_hnf_lattice(roots):
    basis = hnf(roots)
    for row in roots.tolist():
        assert basis.contains(row)
    assert basis.contains(roots.sum(axis=0))


@common
@given(
    root_matrices(max_r=5, max_m=3),
    st.integers(0, (1 << 5) - 1),
    st.lists(st.fractions(max_denominator=6), min_size=3, max_size=3),
)
def test_cartan_action_diagonal_purely_imaginary(roots, mask_seed, xs):
    r, m = roots.shape
    mask = mask_seed & ((1 << r) - 1)
    out = cartan_act(roots, [Fraction(x) for x in xs[:m]], SpinorElement.monomial(r, mask))
    assert set(out.terms) <= {mask}
    for coeff in out.terms.values():
        assert coeff.a == 0 and coeff.c == 0 and coeff.d == 0
