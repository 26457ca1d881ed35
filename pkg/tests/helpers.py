"""Shared random-object generators for the operator-algebra tests."""

from fractions import Fraction

from wreathdunkl.cyclotomic import CycloScalar
from wreathdunkl.groups import GroupSpec, enumerate_subgroup
from wreathdunkl.opalg import MixedOperator
from wreathdunkl.polyalg import LaurentPoly, RationalCoefficient


def random_operator(rng, N=2, m=3, nterms=2, spin_dim=1, allow_euler=True):
    """Small random mixed operator with simple pole structure."""
    els = enumerate_subgroup(GroupSpec("W(m,N)", N, m))
    z = CycloScalar.root_of_unity(m) if m > 1 else CycloScalar.one(1)
    A = MixedOperator.zero(N, m, m, spin_dim)
    for _ in range(nterms):
        g = rng.choice(els)
        k = tuple(rng.randint(0, 1) if allow_euler else 0 for _ in range(N))
        poly = LaurentPoly.monomial(
            N,
            tuple(rng.randint(-1, 1) for _ in range(N)),
            Fraction(rng.randint(1, 3), rng.randint(1, 2)),
            m,
        )
        if rng.random() < 0.5:
            den = LaurentPoly.variable(1, N, m) - LaurentPoly.variable(2, N, m) * (
                z ** rng.randint(0, m - 1)
            )
            coeff = RationalCoefficient.ratio(poly, den)
        else:
            coeff = RationalCoefficient.from_poly(poly)
        if spin_dim == 1:
            A = A + MixedOperator.term(coeff, g, euler=k)
        else:
            entries = {
                (rng.randrange(spin_dim), rng.randrange(spin_dim)): coeff
            }
            A = A + MixedOperator.spin_term(g, entries, N, m, spin_dim, euler=k)
    return A
