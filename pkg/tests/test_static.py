"""Freezing layer: barred operators, lattice conditions, frozen chains."""

import cmath
from fractions import Fraction

import pytest

from wreathdunkl.cyclotomic import CycloScalar
from wreathdunkl.dunkl import ModelParams, exchange_element
from wreathdunkl.opalg import MixedOperator, op_commutator
from wreathdunkl.polyalg import LaurentPoly, RationalCoefficient
from wreathdunkl.static import (
    LATTICE_LABELS,
    build_barred,
    build_frozen_hamiltonian,
    build_lattice,
    build_static_hamiltonian,
    cyclic_chain_terms,
    equidistant_lattice,
    freezing_identity_check,
    lattice_table_check,
    merge_chain_terms,
    residual_cyclic,
    residual_dihedral,
    scan_equidistant,
    scalar_potential,
    static_display_check,
)


def test_barred_operators_commute():
    p = ModelParams("cyclic", 2, 3, Fraction(1))
    b1, b2 = build_barred(p, 1), build_barred(p, 2)
    assert op_commutator(b1, b2).is_zero()


@pytest.mark.parametrize("N,m", [(2, 2), (2, 3), (3, 2)])
def test_freezing_identities(N, m):
    p = ModelParams("cyclic", N, m, Fraction(1))
    suite = freezing_identity_check(p)
    assert suite.passed, [i.relation for i in suite.failures()]


def test_static_hamiltonian_is_the_two_body_sum():
    N, m = 2, 3
    p = ModelParams("cyclic", N, m, Fraction(1))
    hbar = build_static_hamiltonian(p)
    direct = MixedOperator.zero(N, m, m)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i == j:
                continue
            qi = LaurentPoly.variable(i, N, m)
            qj = LaurentPoly.variable(j, N, m)
            for s in range(m):
                tau = CycloScalar.root_of_unity(m, s)
                v = RationalCoefficient.ratio(tau * qi * qj, (qi - tau * qj) ** 2)
                direct = direct + MixedOperator.term(v, exchange_element(N, m, i, j, s))
    assert hbar == direct


def test_static_display_orientation():
    for family, N, m, mu, rho in [
        ("cyclic", 2, 3, 0, 0),
        ("dihedral", 2, 2, 1, Fraction(1, 2)),
        ("dihedral", 2, 3, 2, 1),
    ]:
        p = ModelParams(family, N, m, Fraction(1), Fraction(mu), Fraction(rho))
        suite = static_display_check(p)
        assert suite.passed, (family, m)


@pytest.mark.parametrize(
    "N,m",
    [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (4, 2), (2, 4), (3, 3), (5, 2), (2, 5), (6, 2), (4, 3), (3, 4), (2, 6), (12, 1)],
)
def test_cyclic_residual_exactly_zero(N, m):
    if m * N > 12:
        pytest.skip("beyond the exact grid")
    lat = build_lattice("cyclic", N, m)
    assert all(r.is_zero() for r in lat.residuals())


def test_cyclic_residual_perturbed():
    pos = [cmath.exp(2j * cmath.pi * k / 6) for k in range(1, 3)]
    pos[0] *= 1.001
    res = residual_cyclic(pos, 3)
    assert max(abs(r) for r in res) > 1e-4


def test_single_site_residual_is_empty_sum():
    lat = build_lattice("cyclic", 1, 4)
    assert [r.is_zero() for r in lat.residuals()] == [True]


def test_residual_raises_on_coincidence():
    z = CycloScalar.root_of_unity(6)
    with pytest.raises(ZeroDivisionError):
        residual_cyclic([z, z], 1)
    with pytest.raises(ZeroDivisionError):
        # a site sitting at +1 collides with its boundary image
        residual_dihedral([CycloScalar.one(1), z], 2, mu2=Fraction(1))


@pytest.mark.parametrize("m,N", [(3, 2), (3, 3), (5, 2)])
def test_lattice_table_rows_exactly_zero(m, N):
    suite = lattice_table_check(m, [N])
    assert suite.passed, [(i.relation, i.params) for i in suite.failures()]


def test_lattice_table_values():
    lat = build_lattice("dihedral-odd", 2, 3, "L2Nm")
    assert lat.L == 12
    assert lat.couplings == {"beta2": Fraction(1, 4), "gamma2": Fraction(1, 4)}
    # half-shifted positions live at odd powers of the doubled root
    assert lat.positions[0] == CycloScalar.root_of_unity(24, 1)
    lat = build_lattice("dihedral-odd", 2, 3, "L2NmPlusM_integer")
    assert lat.L == 15
    assert lat.positions[0] == CycloScalar.root_of_unity(15, 1)
    assert lat.couplings == {"beta2": Fraction(1, 4), "gamma2": Fraction(9, 4)}


def test_lattice_table_rejects_even_m():
    with pytest.raises(ValueError):
        build_lattice("dihedral-odd", 2, 2, "L2Nm")


def test_table_reduces_at_unit_order():
    suite = lattice_table_check(1, [2, 3])
    assert suite.passed


def test_frozen_cyclic_chain_matches_closed_form():
    lat = build_lattice("cyclic", 2, 3)
    frozen = build_frozen_hamiltonian(lat)
    assert frozen.integrable and frozen.residual_max == "0"
    closed = merge_chain_terms(cyclic_chain_terms(2, 3))
    mine = merge_chain_terms(frozen.terms)
    assert closed == mine


def test_frozen_chain_couplings_are_inverse_square_sines():
    # u/(u-1)^2 = -(1/4) / sin^2(pi a / L) at u = exp(2 pi i a / L)
    import math

    L = 6
    for a in range(1, L):
        u = CycloScalar.root_of_unity(L, a)
        coeff = (u / ((u - 1) ** 2)).to_complex()
        target = -0.25 / math.sin(math.pi * a / L) ** 2
        assert abs(coeff - target) < 1e-12


def test_frozen_build_with_nonzero_residual_warns():
    lat = equidistant_lattice("dihedral-even", 2, 2, 10, couplings={"mu2": Fraction(1)})
    frozen = build_frozen_hamiltonian(lat)
    assert not frozen.integrable
    assert frozen.warning is not None


def test_scan_rediscovers_table_rows():
    records = scan_equidistant("dihedral-odd", 2, 3, range(3, 19))
    hits = [r for r in records if r["residual"] < 1e-12]
    found = {(r["L"], r["offset"], r["couplings"]["beta2"], r["couplings"]["gamma2"]) for r in hits}
    assert (12, "1/2", "1/4", "1/4") in found
    assert (15, "1/2", "9/4", "1/4") in found
    assert (15, "0", "1/4", "9/4") in found
    assert (18, "0", "9/4", "9/4") in found


def test_scan_cyclic_rediscovers_root_lattice():
    records = scan_equidistant("cyclic", 3, 2, range(3, 13), offsets=(Fraction(0),))
    best = records[0]
    assert best["L"] == 6 and best["residual"] < 1e-12


def test_even_m_scan_finds_the_doubled_coupling_solution():
    """The even-m condition does admit an equidistant solution at two sites.

    At mu^2 = 4 the integer lattice with L = 2 N m satisfies the condition
    exactly; it exists for N = 2 (any even m tested) and disappears for
    N >= 3.
    """
    records = scan_equidistant("dihedral-even", 2, 2, range(2, 21))
    best = records[0]
    assert best["residual"] < 1e-12
    assert best["L"] == 8 and best["couplings"] == {"mu2": "4"}
    # exact confirmation
    q = [CycloScalar.root_of_unity(8, k) for k in range(1, 3)]
    res = residual_dihedral(q, 2, mu2=Fraction(4))
    assert all(r.is_zero() for r in res)
    # and the three-site analogue does not vanish
    q3 = [CycloScalar.root_of_unity(12, k) for k in range(1, 4)]
    res3 = residual_dihedral(q3, 2, mu2=Fraction(4))
    assert not all(r.is_zero() for r in res3)


def test_even_m_scan_excluding_doubled_coupling():
    grid = [{"mu2": v} for v in (Fraction(1, 4), Fraction(1), Fraction(9, 4))]
    records = scan_equidistant("dihedral-even", 2, 2, range(2, 41), coupling_grid=grid)
    assert records[0]["residual"] > 1e-6


def test_lattice_json_schema():
    lat = build_lattice("dihedral-odd", 2, 3, "L2Nm")
    data = lat.to_json()
    assert data["residual_max"] == "0"
    assert len(data["positions"]) == 2
    assert set(data["couplings"]) == {"beta2", "gamma2"}
