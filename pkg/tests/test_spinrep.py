"""Spin representation, projectors, charge agreement and chain spectra."""

import random
from fractions import Fraction

import numpy as np
import pytest

from wreathdunkl.cyclotomic import CycloScalar
from wreathdunkl.dunkl import ModelParams, build_charge
from wreathdunkl.groups import GroupSpec, enumerate_subgroup
from wreathdunkl.opalg import op_compose
from wreathdunkl.spinrep import (
    SpinMatrix,
    SpinRepData,
    brute_force_eigvals,
    build_projector,
    build_spin_generators,
    char_poly_exact,
    charpoly_residual,
    default_weights,
    diagonalize_hermitian,
    dynamical_spin_hamiltonian,
    frozen_spin_matrix,
    projector_check,
    spectrum_from_charpoly,
    spin_matrix_of_element,
    spin_representation_check,
    substitute_spin,
    verify_agreement,
)
from wreathdunkl.static import build_frozen_hamiltonian, build_lattice, merge_chain_terms


def test_default_weights():
    assert default_weights(2, 3) == (1, 2)
    assert default_weights(2, 2) == (1, 1)
    assert default_weights(3, 4) == (1, 0, 3)
    assert default_weights(4, 5) == (1, 2, 3, 4)
    with pytest.raises(ValueError):
        SpinRepData(2, 4, 2, weights=(1, 2))


def test_example_matrices():
    rep = SpinRepData(2, 3, 2, weights=(1, 2))
    gens = build_spin_generators(rep)
    z3 = CycloScalar.root_of_unity(3)
    Q1 = gens["Q"][1]
    # diagonal with the weight phases on the first tensor slot
    assert Q1.rows[0][0] == z3 and Q1.rows[3][3] == z3**2
    K1 = gens["K"][1]
    ident = SpinMatrix.identity(4, 3)
    assert K1 @ K1 == ident
    assert (K1 @ Q1 @ K1) @ Q1 == ident  # K Q K = Q^{-1}
    P = gens["P"][(1, 2)]
    assert P @ P == ident
    assert gens["Q"][1] @ gens["Q"][2] == gens["Q"][2] @ gens["Q"][1]


@pytest.mark.parametrize("n,m,N", [(2, 2, 2), (2, 3, 2), (3, 4, 2), (2, 2, 3)])
def test_representation_relations_and_homomorphism(n, m, N):
    rep = SpinRepData(n, m, N)
    suite = spin_representation_check(rep, samples=120)
    assert suite.passed, [i.relation for i in suite.failures()]


def test_substitution_of_single_terms():
    rep = SpinRepData(2, 2, 2)
    params = ModelParams("cyclic", 2, 2, Fraction(1))
    from wreathdunkl.dunkl import exchange_element
    from wreathdunkl.opalg import MixedOperator
    from wreathdunkl.polyalg import LaurentPoly, RationalCoefficient

    c = RationalCoefficient.ratio(
        LaurentPoly.variable(1, 2, 2), LaurentPoly.variable(1, 2, 2) - LaurentPoly.variable(2, 2, 2)
    )
    g = exchange_element(2, 2, 1, 2, 0)
    A = MixedOperator.term(c, g)
    S = substitute_spin(A, rep)
    # one term, identity group part, the exchange matrix tensored in
    assert S.term_count() == 1
    (k, gg), mat = next(iter(S.terms.items()))
    assert gg.is_identity()
    assert set(mat) == {(0, 0), (1, 2), (2, 1), (3, 3)}
    assert all(v == c for v in mat.values())


def test_projectors_cyclic():
    p = ModelParams("cyclic", 2, 2, Fraction(1, 2))
    rep = SpinRepData(2, 2, 2)
    suite = projector_check(p, rep)
    assert suite.passed, [(i.relation, i.params) for i in suite.failures()]


def test_projectors_dihedral():
    p = ModelParams("dihedral", 2, 2, Fraction(1), Fraction(1), Fraction(1, 2))
    rep = SpinRepData(2, 2, 2)
    suite = projector_check(p, rep)
    assert suite.passed, [(i.relation, i.params) for i in suite.failures()]


def test_projector_term_count():
    # the exchange average over the balanced group on two sites of order 2
    p = ModelParams("cyclic", 2, 2, Fraction(1))
    rep = SpinRepData(2, 2, 2)
    lam = build_projector(p, rep, "exchange")
    assert lam.term_count() == 4  # one term per group element


@pytest.mark.parametrize("k", [1, 2, 3])
def test_agreement_cyclic(k):
    p = ModelParams("cyclic", 2, 2, Fraction(1, 2))
    rep = SpinRepData(2, 2, 2)
    suite = verify_agreement(p, rep, k)
    assert suite.passed, [i.relation for i in suite.failures()]


def test_agreement_dihedral_even_k():
    p = ModelParams("dihedral", 2, 2, Fraction(1), Fraction(1), Fraction(1, 2))
    rep = SpinRepData(2, 2, 2)
    assert verify_agreement(p, rep, 2, expect="zero").passed


def test_agreement_dihedral_odd_k():
    """No theorem for odd k: k = 3 fails, and k = 1 happens to hold.

    Every group element in the first charge is an involution inside the
    invariance group, so its position and spin actions agree on projected
    states; the first genuine violation appears at k = 3.
    """
    p = ModelParams("dihedral", 2, 2, Fraction(1), Fraction(1), Fraction(1, 2))
    rep = SpinRepData(2, 2, 2)
    assert verify_agreement(p, rep, 3, expect="nonzero").passed
    assert verify_agreement(p, rep, 1, expect="zero").passed


def test_dynamical_spin_hamiltonian_shape():
    p = ModelParams("cyclic", 2, 2, Fraction(1))
    rep = SpinRepData(2, 2, 2)
    H = dynamical_spin_hamiltonian(p, rep)
    # all group parts substituted away
    assert all(g.is_identity() for (_, g) in H.terms)
    assert H.spin_dim == 4


def test_frozen_chain_exact_vs_numeric_backends():
    rep = SpinRepData(2, 3, 2)
    frozen = build_frozen_hamiltonian(build_lattice("cyclic", 2, 3))
    terms = merge_chain_terms(frozen.terms)
    exact = frozen_spin_matrix(rep, terms, "exact").to_numpy()
    numeric = frozen_spin_matrix(rep, terms, "numeric")
    assert np.max(np.abs(exact - numeric)) < 1e-12


def test_known_two_site_chain():
    """Two sites, one rotation copy: a single exchange bond."""
    rep = SpinRepData(2, 1, 2)
    frozen = build_frozen_hamiltonian(build_lattice("cyclic", 2, 1))
    H = frozen_spin_matrix(rep, merge_chain_terms(frozen.terms), "numeric")
    # coupling u/(u-1)^2 at u = -1 is -1/4, twice (both orders) -> -P/2
    P = spin_matrix_of_element(rep, enumerate_subgroup(GroupSpec("symmetric", 2, 1))[1])
    assert np.max(np.abs(H - (-0.5) * P.to_numpy())) < 1e-14
    vals, degs = diagonalize_hermitian(H)
    assert np.allclose(vals, [-0.5, -0.5, -0.5, 0.5])
    assert [d for _, d in degs] == [3, 1]


def test_diagonalize_guards():
    bad = np.array([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ValueError):
        diagonalize_hermitian(bad)
    good = np.array([[0.0, 1.0], [1.0, 0.0]])
    vals, degs = diagonalize_hermitian(good)
    assert np.allclose(vals, [-1.0, 1.0])


def test_spectral_reconstruction_random():
    rng = np.random.default_rng(1)
    B = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    H = B + B.conj().T
    vals, _ = diagonalize_hermitian(H)
    w, v = np.linalg.eigh(H)
    assert np.max(np.abs(v @ np.diag(w) @ v.conj().T - H)) < 1e-8


def test_charpoly_oracle_matches_eigensolvers():
    rng = random.Random(0)
    dim = 4
    M = SpinMatrix.zero(dim, 4)
    z4 = CycloScalar.root_of_unity(4)
    for i in range(dim):
        for j in range(i, dim):
            val = CycloScalar.rational(Fraction(rng.randint(-3, 3)), 4)
            if i != j:
                val = val + z4 * rng.randint(-2, 2)
            M.rows[i][j] = val
            M.rows[j][i] = val.conj()
    assert M.is_hermitian()
    vals, _ = diagonalize_hermitian(M)
    oracle = brute_force_eigvals(M)
    assert np.max(np.abs(vals - oracle)) < 1e-10
    coeffs = char_poly_exact(M)
    assert charpoly_residual(coeffs, vals) < 1e-9
    roots = spectrum_from_charpoly(coeffs)
    assert np.max(np.abs(np.sort(roots) - vals)) < 1e-5


def test_jacobi_oracle_on_degenerate_spectra():
    rng = np.random.default_rng(4)
    Q, _ = np.linalg.qr(rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6)))
    d = np.array([2.0, 2.0, 2.0, -1.0, -1.0, 5.0])
    H = Q @ np.diag(d) @ Q.conj().T
    H = (H + H.conj().T) / 2
    vals = brute_force_eigvals(H)
    assert np.max(np.abs(vals - np.sort(d))) < 1e-10
