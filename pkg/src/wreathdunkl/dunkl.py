"""Dunkl operators, conserved charges and Hamiltonians.

Two families are built here.  The cyclic family attaches a rotation group of
order m to every site; each particle interacts with the rotated images of
the others, and the commuting operators d_i realize an extended degenerate
affine Hecke algebra on top of the rotation wreath group.  The dihedral
family adds per-site reflections q -> 1/q, giving boundary terms and two
extra couplings; its operators realize the analogous extension of the full
dihedral wreath group.

The dihedral operator is available in two algebraically equal layouts: the
``image`` form, whose reflected two-body terms are written against the
mirror images of the sites, and the ``split`` form, which separates the
cyclic part from reflected and boundary pieces using the half-sum and
half-difference of the boundary couplings.  Their exact equality is kept as
a standing regression check.

Auxiliary one-copy operators (no rotation images) are exposed as
``build_symmetric_dunkl`` and ``build_reflection_dunkl``; their couplings
carry an explicit factor m so that averaging them over the site rotation
reproduces the wreath operators exactly; see ``rotation_average_check``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclotomic import CycloScalar
from .groups import GroupSpec, WreathElement, generator
from .opalg import MixedOperator, ad_projector, normalize_is_zero, op_commutator, op_compose
from .polyalg import LaurentPoly, RationalCoefficient
from .reports import CheckSuite

FAMILIES = ("cyclic", "dihedral")


@dataclass(frozen=True)
class ModelParams:
    """Couplings and sizes of one model instance.

    ``lam`` multiplies the exchange terms; ``mu`` and ``rho`` drive the
    dihedral boundary and are ignored by the cyclic family.  The derived
    combinations beta and gamma are the half-sum and half-difference of
    (mu, rho) and are never stored independently.
    """

    family: str
    size: int
    order: int
    lam: Fraction = Fraction(0)
    mu: Fraction = Fraction(0)
    rho: Fraction = Fraction(0)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.size < 1 or self.order < 1:
            raise ValueError("size and order must be positive")
        for name in ("lam", "mu", "rho"):
            v = getattr(self, name)
            if isinstance(v, float):
                raise TypeError(f"{name} must be an exact rational, not a float")
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, Fraction(v))

    @property
    def beta(self) -> Fraction:
        return (self.mu + self.rho) / 2

    @property
    def gamma(self) -> Fraction:
        return (self.mu - self.rho) / 2

    @property
    def group_spec(self) -> GroupSpec:
        fam = "W(m,N)" if self.family == "dihedral" else "G(m,1,N)"
        return GroupSpec(fam, self.size, self.order)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "N": self.size,
            "m": self.order,
            "lambda": str(self.lam),
            "mu": str(self.mu),
            "rho": str(self.rho),
        }


# -- element and coefficient helpers ----------------------------------------


def exchange_element(N: int, m: int, i: int, j: int, s: int) -> WreathElement:
    """Q_i^{-s} P_ij Q_i^{s} in normal form."""
    rot = [0] * N
    rot[i - 1] = (-s) % m
    rot[j - 1] = s % m
    perm = list(range(N))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return WreathElement(N, m, tuple(perm), tuple(rot), (0,) * N)


def reflected_exchange_element(N: int, m: int, i: int, j: int, s: int) -> WreathElement:
    """K_i Q_i^{-s} P_ij Q_i^{s} K_i in normal form."""
    flip = [0] * N
    flip[i - 1] = 1
    k = WreathElement(N, m, tuple(range(N)), (0,) * N, tuple(flip))
    return k * exchange_element(N, m, i, j, s) * k

def boundary_element(N: int, m: int, i: int, r: int) -> WreathElement:
    """Q_i^{r} K_i in normal form."""
    rot = [0] * N
    rot[i - 1] = r % m
    flip = [0] * N
    flip[i - 1] = 1
    return WreathElement(N, m, tuple(range(N)), tuple(rot), tuple(flip))


def _q(i: int, N: int, order: int, power: int = 1) -> LaurentPoly:
    return LaurentPoly.variable(i, N, order, power)


def _tau(m: int, s: int, order: int) -> CycloScalar:
    return CycloScalar.root_of_unity(m, s % m).lift(order) if m > 1 else CycloScalar.one(order)


# -- Dunkl operators ----------------------------------------------------------


def build_dunkl(params: ModelParams, i: int, form: str = "image") -> MixedOperator:
    """The commuting Dunkl operator attached to site i."""
    if not 1 <= i <= params.size:
        raise ValueError(f"site {i} out of range")
    if params.family == "cyclic":
        return _cyclic_dunkl(params, i)
    if form == "image":
        return _dihedral_dunkl_image(params, i)
    if form == "split":
        return _dihedral_dunkl_split(params, i)
    raise ValueError(f"unknown dihedral form {form!r}")


def _cyclic_dunkl(params: ModelParams, i: int) -> MixedOperator:
    N, m, lam = params.size, params.order, params.lam
    order = m
    out = MixedOperator.euler(N, i, order=order, group_order=m)
    if lam == 0:
        return out
    one = LaurentPoly.constant(N, 1, order)
    for j in range(1, N + 1):
        if j == i:
            continue
        for s in range(m):
            g = exchange_element(N, m, i, j, s)
            coeff = RationalCoefficient.ratio(
                _q(i, N, order), _q(i, N, order) - _tau(m, s, order) * _q(j, N, order)
            )
            out = out + MixedOperator.term(coeff * lam, g)
            if j > i:
                out = out + MixedOperator.term(
                    RationalCoefficient.from_poly(one * (-lam)), g
                )
    return out


def _dihedral_dunkl_image(params: ModelParams, i: int) -> MixedOperator:
    N, m = params.size, params.order
    lam, mu, rho = params.lam, params.mu, params.rho
    order = m
    out = MixedOperator.euler(N, i, order=order, group_order=m)
    one = LaurentPoly.constant(N, 1, order)
    qi = _q(i, N, order)
    for j in range(1, N + 1):
        if j == i:
            continue
        qj = _q(j, N, order)
        for s in range(m):
            tau_s = _tau(m, s, order)
            tau_ms = _tau(m, -s, order)
            g = exchange_element(N, m, i, j, s)
            kgk = reflected_exchange_element(N, m, i, j, s)
            if lam:
                direct = RationalCoefficient.ratio(qi, qi - tau_s * qj)
                mirror = RationalCoefficient.ratio(qi * qj, qi * qj - tau_ms * one)
                out = out + MixedOperator.term(direct * lam, g)
                out = out + MixedOperator.term(mirror * lam, kgk)
                if j > i:
                    out = out + MixedOperator.term(
                        RationalCoefficient.from_poly(one * (-lam)), g
                    )
    if mu or rho:
        for s in range(m):
            num = qi * qi * mu - qi * (_tau(m, -s, order) * rho)
            den = qi * qi - _tau(m, -2 * s, order) * one
            out = out + MixedOperator.term(
                RationalCoefficient.ratio(num, den),
                boundary_element(N, m, i, 2 * s),
            )
    return out


def _dihedral_dunkl_split(params: ModelParams, i: int) -> MixedOperator:
    N, m = params.size, params.order
    lam, beta, gamma = params.lam, params.beta, params.gamma
    order = m
    one = LaurentPoly.constant(N, 1, order)
    qi = _q(i, N, order)
    out = _cyclic_dunkl(ModelParams("cyclic", N, m, lam), i)
    for j in range(1, N + 1):
        if j == i:
            continue
        qj = _q(j, N, order)
        for s in range(m):
            if lam:
                tau_s = _tau(m, s, order)
                coeff = RationalCoefficient.ratio(
                    tau_s * qi * qj, tau_s * qi * qj - one
                )
                out = out + MixedOperator.term(
                    coeff * lam, reflected_exchange_element(N, m, i, j, s)
                )
    if beta or gamma:
        for s in range(m):
            tau_s = _tau(m, s, order)
            coeff = RationalCoefficient.ratio(
                tau_s * qi * beta, tau_s * qi + one
            ) + RationalCoefficient.ratio(tau_s * qi * gamma, tau_s * qi - one)
            out = out + MixedOperator.term(coeff, boundary_element(N, m, i, 2 * s))
    return out


def build_symmetric_dunkl(params: ModelParams, i: int) -> MixedOperator:
    """One-copy exchange Dunkl operator with coupling m * lambda.

    Lives in the same algebra as the cyclic family (group order m) but uses
    only unrotated transpositions; its rotation average is the cyclic
    operator.
    """
    N, m, lam = params.size, params.order, params.lam
    order = m
    c = m * lam
    out = MixedOperator.euler(N, i, order=order, group_order=m)
    if c == 0:
        return out
    one = LaurentPoly.constant(N, 1, order)
    for j in range(1, N + 1):
        if j == i:
            continue
        g = exchange_element(N, m, i, j, 0)
        coeff = RationalCoefficient.ratio(_q(i, N, order), _q(i, N, order) - _q(j, N, order))
        out = out + MixedOperator.term(coeff * c, g)
        if j > i:
            out = out + MixedOperator.term(RationalCoefficient.from_poly(one * (-c)), g)
    return out


def build_reflection_dunkl(params: ModelParams, i: int) -> MixedOperator:
    """One-copy reflection Dunkl operator with couplings scaled by m.

    The two-body coupling is m * lambda and the boundary numerator is
    m * (mu q^2 - rho q); with this normalization the rotation average
    reproduces ``build_dunkl`` for the dihedral family exactly.
    """
    N, m = params.size, params.order
    lam, mu, rho = params.lam, params.mu, params.rho
    order = m
    c = m * lam
    out = MixedOperator.euler(N, i, order=order, group_order=m)
    one = LaurentPoly.constant(N, 1, order)
    qi = _q(i, N, order)
    for j in range(1, N + 1):
        if j == i:
            continue
        qj = _q(j, N, order)
        if c:
            g = exchange_element(N, m, i, j, 0)
            kgk = reflected_exchange_element(N, m, i, j, 0)
            out = out + MixedOperator.term(
                RationalCoefficient.ratio(qi, qi - qj) * c, g
            )
            out = out + MixedOperator.term(
                RationalCoefficient.ratio(qi * qj, qi * qj - one) * c, kgk
            )
            if j > i:
                out = out + MixedOperator.term(
                    RationalCoefficient.from_poly(one * (-c)), g
                )
    if mu or rho:
        num = qi * qi * (m * mu) - qi * (m * rho)
        den = qi * qi - one
        out = out + MixedOperator.term(
            RationalCoefficient.ratio(num, den), boundary_element(N, m, i, 0)
        )
    return out


# -- charges and Hamiltonians --------------------------------------------------


def build_charge(params: ModelParams, k: int) -> MixedOperator:
    """Power-sum conserved charge: sum over sites of the k-th Dunkl power."""
    if k < 1:
        raise ValueError("charge index must be at least 1")
    total = None
    for i in range(1, params.size + 1):
        d = build_dunkl(params, i)
        total = d**k if total is None else total + d**k
    return total


def build_hamiltonian(params: ModelParams, which: str = "auto") -> MixedOperator:
    """Closed-form Hamiltonians matching the second conserved charge.

    ``which`` selects the displayed form: ``ham`` for the cyclic family,
    ``odd``/``even`` for the dihedral family by parity of m, and
    ``odd_simplified`` for the odd form with its boundary collapsed into a
    single sum over the doubled rotation group (requires rho = 0).
    """
    if which == "auto":
        if params.family == "cyclic":
            which = "ham"
        else:
            which = "odd" if params.order % 2 else "even"
    if which == "ham":
        return _hamiltonian_cyclic(params)
    if which in ("odd", "even"):
        if params.family != "dihedral":
            raise ValueError("odd/even Hamiltonians belong to the dihedral family")
        if which == "odd" and params.order % 2 == 0:
            raise ValueError("odd-form Hamiltonian needs odd m")
        if which == "even" and params.order % 2 == 1:
            raise ValueError("even-form Hamiltonian needs even m")
        return _hamiltonian_dihedral(params, simplified=False)
    if which == "odd_simplified":
        if params.order % 2 == 0:
            raise ValueError("the simplified boundary needs odd m")
        if params.rho != 0:
            raise ValueError("the simplified boundary needs rho = 0")
        return _hamiltonian_dihedral(params, simplified=True)
    raise ValueError(f"unknown Hamiltonian form {which!r}")


def _hamiltonian_cyclic(params: ModelParams) -> MixedOperator:
    N, m, lam = params.size, params.order, params.lam
    order = m
    total = MixedOperator.zero(N, order, m)
    for i in range(1, N + 1):
        total = total + MixedOperator.euler(N, i, order=order, group_order=m) ** 2
    if lam == 0:
        return total
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if j == i:
                continue
            qi, qj = _q(i, N, order), _q(j, N, order)
            for s in range(m):
                tau_s = _tau(m, s, order)
                v = RationalCoefficient.ratio(
                    tau_s * qi * qj, (qi - tau_s * qj) ** 2
                )
                g = exchange_element(N, m, i, j, s)
                total = total + MixedOperator.term(v * (-lam * lam), WreathElement.identity(N, m))
                total = total + MixedOperator.term(v * (-lam), g)
    return total


def _boundary_terms_odd(params: ModelParams) -> MixedOperator:
    N, m = params.size, params.order
    beta, gamma = params.beta, params.gamma
    order = m
    one = LaurentPoly.constant(N, 1, order)
    total = MixedOperator.zero(N, order, m)
    for i in range(1, N + 1):
        qi = _q(i, N, order)
        for s in range(m):
            tau_s = _tau(m, s, order)
            vb = RationalCoefficient.ratio(tau_s * qi * beta, (one + tau_s * qi) ** 2)
            vg = RationalCoefficient.ratio(tau_s * qi * gamma, (one - tau_s * qi) ** 2)
            g = boundary_element(N, m, i, 2 * s)
            total = total + MixedOperator.term(vb * beta - vg * gamma, WreathElement.identity(N, m))
            total = total + MixedOperator.term(vb - vg, g)
    return total


def _boundary_terms_odd_simplified(params: ModelParams) -> MixedOperator:
    """Boundary for rho = 0 as one sum over the order-2m rotation phases."""
    N, m = params.size, params.order
    beta = params.beta
    order = 2 * m
    one = LaurentPoly.constant(N, 1, order)
    total = MixedOperator.zero(N, order, m)
    for i in range(1, N + 1):
        qi = _q(i, N, order)
        for s in range(2 * m):
            root = CycloScalar.root_of_unity(2 * m, s)
            v = RationalCoefficient.ratio(root * qi * beta, (one - root * qi) ** 2)
            g = boundary_element(N, m, i, s)
            total = total + MixedOperator.term(v * (-beta), WreathElement.identity(N, m))
            total = total + MixedOperator.term(-v, g)
    return total


def _boundary_terms_even(params: ModelParams) -> MixedOperator:
    N, m, mu = params.size, params.order, params.mu
    order = m
    one = LaurentPoly.constant(N, 1, order)
    total = MixedOperator.zero(N, order, m)
    for i in range(1, N + 1):
        qi = _q(i, N, order)
        for s in range(m):
            tau_s = _tau(m, s, order)
            v = RationalCoefficient.ratio(tau_s * qi * (-mu), (one - tau_s * qi) ** 2)
            g = boundary_element(N, m, i, 2 * s)
            total = total + MixedOperator.term(v * mu, WreathElement.identity(N, m))
            total = total + MixedOperator.term(v, g)
    return total


def _hamiltonian_dihedral(params: ModelParams, simplified: bool) -> MixedOperator:
    N, m, lam = params.size, params.order, params.lam
    order = m
    one = LaurentPoly.constant(N, 1, order)
    cyc = _hamiltonian_cyclic(ModelParams("cyclic", N, m, lam))
    total = cyc
    if lam:
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if j == i:
                    continue
                qi, qj = _q(i, N, order), _q(j, N, order)
                for s in range(m):
                    tau_s = _tau(m, s, order)
                    v = RationalCoefficient.ratio(
                        tau_s * qi * qj, (tau_s * qi * qj - one) ** 2
                    )
                    kgk = reflected_exchange_element(N, m, i, j, s)
                    total = total + MixedOperator.term(
                        v * (-lam * lam), WreathElement.identity(N, m)
                    )
                    total = total + MixedOperator.term(v * (-lam), kgk)
    if simplified:
        total = total.lift_order(2 * m) + _boundary_terms_odd_simplified(params)
    elif params.order % 2:
        total = total + _boundary_terms_odd(params)
    else:
        total = total + _boundary_terms_even(params)
    return total


def hamiltonian_x_display(params: ModelParams, which: str = "auto") -> str:
    """Human-readable angular form of the Hamiltonian.

    Rendering only: the engine computes in multiplicative coordinates, and
    this prints the equivalent trigonometric layout obtained by writing
    q = exp(i x).
    """
    N, m = params.size, params.order
    lines = [f"H = -sum_i d^2/dx_i^2   (N={N}, m={m})"]
    lines.append(
        f"  + (lambda/4) sum_(i!=j) sum_(s=0..{m-1}) "
        f"[lambda + X_ij(s)] / sin^2((x_i - x_j + 2 pi s/{m})/2)"
    )
    if params.family == "dihedral":
        lines.append(
            f"  + (lambda/4) sum_(i!=j) sum_(s=0..{m-1}) "
            f"[lambda + Xr_ij(s)] / sin^2((x_i + x_j + 2 pi s/{m})/2)"
        )
        if params.order % 2:
            lines.append(
                f"  + sum_i sum_(s=0..{m-1}) (beta/4) [beta + B_i(2s)] / "
                f"cos^2((x_i + 2 pi s/{m})/2)"
            )
            lines.append(
                f"  + sum_i sum_(s=0..{m-1}) (gamma/4) [gamma + B_i(2s)] / "
                f"sin^2((x_i + 2 pi s/{m})/2)"
            )
        else:
            lines.append(
                f"  + sum_i sum_(s=0..{m-1}) (mu/4) [mu + B_i(2s)] / "
                f"sin^2((x_i + 2 pi s/{m})/2)"
            )
    lines.append(
        "  with X_ij(s) the rotated exchange, Xr_ij(s) its mirror image and "
        "B_i(r) the rotated reflection at site i"
    )
    return "\n".join(lines)


# -- relation checkers ---------------------------------------------------------


def _is_zero_item(suite, name, indices, op, expect_zero=True):
    ok = op.is_zero()
    if not expect_zero:
        suite.add(name, indices, not ok, expected_nonzero=True)
        return
    witness = None if ok else normalize_is_zero(op)["witness"]
    suite.add(name, indices, ok, witness)


def check_recursion(params: ModelParams, corrupt: bool = False) -> CheckSuite:
    """Adjacent-site recursion linking consecutive Dunkl operators."""
    N, m, lam = params.size, params.order, params.lam
    suite = CheckSuite(f"recursion[{params.family}]")
    spec = params.group_spec
    lam_rhs = lam + 1 if corrupt else lam
    for i in range(1, N):
        d_i = build_dunkl(params, i)
        d_next = build_dunkl(params, i + 1)
        e = MixedOperator.from_group(generator(spec, "e", i=i), order=m)
        rhs = op_compose(op_compose(e, d_i), e)
        for s in range(m):
            g = exchange_element(N, m, i, i + 1, -s)
            rhs = rhs + MixedOperator.from_group(g, order=m).scale(lam_rhs)
        _is_zero_item(
            suite,
            "d_{i+1} = P d_i P + lambda sum_s Q^s P Q^{-s}",
            {**params.to_json(), "i": i},
            d_next - rhs,
        )
    return suite


def check_hecke_relations(params: ModelParams, corrupt: str | None = None) -> CheckSuite:
    """Every displayed relation of the extended algebra, instantiated."""
    N, m, lam = params.size, params.order, params.lam
    suite = CheckSuite(f"hecke[{params.family}]")
    spec = params.group_spec
    idx = params.to_json()
    d1 = build_dunkl(params, 1)
    a = MixedOperator.from_group(generator(spec, "a"), order=m)
    _is_zero_item(suite, "a d = d a", idx, op_commutator(a, d1))

    if N >= 2:
        e1 = MixedOperator.from_group(generator(spec, "e", i=1), order=m)
        e1ae1 = op_compose(op_compose(e1, a), e1)
        _is_zero_item(
            suite, "d (e1 a e1) = (e1 a e1) d", idx, op_commutator(d1, e1ae1)
        )
        # the quadratic cross relation, with the full rotation-twisted sum
        twist = MixedOperator.zero(N, m, m)
        for s in range(m):
            twist = twist + MixedOperator.from_group(
                exchange_element(N, m, 1, 2, -s), order=m
            )
        lam_l = Fraction(lam)
        lam_r = lam_l + 1 if corrupt == "drels" else lam_l
        lhs = op_compose(op_compose(op_compose(d1, e1), d1), e1) + op_compose(
            d1, twist
        ).scale(lam_l)
        rhs = op_compose(op_compose(op_compose(e1, d1), e1), d1) + op_compose(
            twist, d1
        ).scale(lam_r)
        _is_zero_item(
            suite,
            "d e1 d e1 + lam d T = e1 d e1 d + lam T d",
            idx,
            lhs - rhs,
        )
    for j in range(2, N):
        ej = MixedOperator.from_group(generator(spec, "e", i=j), order=m)
        _is_zero_item(
            suite, "e_j d = d e_j (j>1)", {**idx, "j": j}, op_commutator(ej, d1)
        )

    ds = [build_dunkl(params, i) for i in range(1, N + 1)]
    for i in range(N):
        for j in range(i + 1, N):
            _is_zero_item(
                suite,
                "[d_i, d_j] = 0",
                {**idx, "i": i + 1, "j": j + 1},
                op_commutator(ds[i], ds[j]),
            )
    for i in range(N):
        for j in range(1, N + 1):
            qj = MixedOperator.from_group(generator(spec, "Q", i=j), order=m)
            _is_zero_item(
                suite,
                "[d_i, Q_j] = 0",
                {**idx, "i": i + 1, "j": j},
                op_commutator(ds[i], qj),
            )

    if params.family == "dihedral":
        k = MixedOperator.from_group(generator(spec, "k"), order=m)
        # k D + D k = mu * sum_s a^{2s}
        rot_sum = MixedOperator.zero(N, m, m)
        for s in range(m):
            rot_sum = rot_sum + MixedOperator.from_group(
                boundary_element(N, m, 1, 2 * s) * generator(spec, "k"), order=m
            )
        _is_zero_item(
            suite,
            "k D = -D k + mu sum_s a^{2s}",
            idx,
            op_compose(k, d1) + op_compose(d1, k) - rot_sum.scale(params.mu),
        )
        if N >= 2:
            e1 = MixedOperator.from_group(generator(spec, "e", i=1), order=m)
            k2 = op_compose(op_compose(e1, k), e1)
            shifted = d1
            for s in range(m):
                shifted = shifted + MixedOperator.from_group(
                    exchange_element(N, m, 1, 2, s), order=m
                ).scale(lam)
            _is_zero_item(
                suite,
                "(D + lam sum_s a^{-s} e1 a^s) commutes with e1 k e1",
                idx,
                op_commutator(shifted, k2),
            )
            a1 = MixedOperator.from_group(generator(spec, "a"), order=m)
            e1ae1 = op_compose(op_compose(e1, a1), e1)
            _is_zero_item(
                suite, "D e1 a e1 = e1 a e1 D", idx, op_commutator(d1, e1ae1)
            )
            inner = op_compose(op_compose(e1, d1), e1)
            twist = MixedOperator.zero(N, m, m)
            for s in range(m):
                twist = twist + MixedOperator.from_group(
                    exchange_element(N, m, 1, 2, -s), order=m
                )
            inner = inner + twist.scale(lam)
            _is_zero_item(
                suite,
                "D (e1 D e1 + lam T) = (e1 D e1 + lam T) D",
                idx,
                op_commutator(d1, inner),
            )
        # the two layouts of the operator agree exactly
        for i in range(1, N + 1):
            _is_zero_item(
                suite,
                "image form = split form",
                {**idx, "i": i},
                build_dunkl(params, i, form="image")
                - build_dunkl(params, i, form="split"),
            )
        # [D_1, K_1] does not vanish for generic couplings
        if params.mu != 0:
            K1 = MixedOperator.from_group(generator(spec, "K", i=1), order=m)
            _is_zero_item(
                suite,
                "[D_1, K_1] != 0 (generic mu)",
                idx,
                op_commutator(d1, K1),
                expect_zero=False,
            )
    return suite


def rotation_average_check(params: ModelParams) -> CheckSuite:
    """Site-rotation average of the one-copy operators gives the wreath ones.

    Projecting the one-copy operator to the rotation-invariant sector at
    sites i and j must reproduce the wreath operator exactly; this is the
    mechanism behind the commuting property in both families.
    """
    N = params.size
    suite = CheckSuite(f"rotation-average[{params.family}]")
    idx = params.to_json()
    for i in range(1, N + 1):
        if params.family == "cyclic":
            raw = build_symmetric_dunkl(params, i)
            target = build_dunkl(params, i)
        else:
            raw = build_reflection_dunkl(params, i)
            target = build_dunkl(params, i)
        j = 1 if i != 1 else 2
        proj = ad_projector(i, 0, raw)
        proj = ad_projector(j, 0, proj)
        _is_zero_item(
            suite,
            "Pi_i^0 Pi_j^0 (one-copy Dunkl) = wreath Dunkl",
            {**idx, "i": i, "j": j},
            proj - target,
        )
    return suite


def reduction_check(params: ModelParams) -> CheckSuite:
    """At m = 1 the wreath operators collapse to the one-copy operators."""
    N = params.size
    suite = CheckSuite(f"reduction[{params.family}]")
    idx = params.to_json()
    for i in range(1, N + 1):
        if params.family == "cyclic":
            other = build_symmetric_dunkl(params, i)
        else:
            other = build_reflection_dunkl(params, i)
        diff = build_dunkl(params, i) - other
        if params.order == 1:
            _is_zero_item(
                suite, "wreath Dunkl = one-copy Dunkl at m=1", {**idx, "i": i}, diff
            )
        else:
            _is_zero_item(
                suite,
                "wreath Dunkl differs from one-copy Dunkl at m>1",
                {**idx, "i": i},
                diff,
                expect_zero=False,
            )
    return suite


def hamiltonian_check(params: ModelParams) -> CheckSuite:
    """The closed-form Hamiltonian equals the second power-sum charge."""
    suite = CheckSuite(f"hamiltonian[{params.family}]")
    idx = params.to_json()
    h = build_hamiltonian(params)
    j2 = build_charge(params, 2)
    _is_zero_item(suite, "H = sum_i d_i^2", idx, h - j2)
    if params.family == "dihedral" and params.order % 2 and params.rho == 0:
        hs = build_hamiltonian(params, "odd_simplified")
        _is_zero_item(
            suite,
            "simplified boundary form agrees",
            idx,
            hs - h.lift_order(2 * params.order),
        )
    return suite


def charge_commutation_check(params: ModelParams, kmax: int = 3) -> CheckSuite:
    """Mutual commutation of the power-sum charges and their symmetries."""
    N, m = params.size, params.order
    suite = CheckSuite(f"charges[{params.family}]")
    idx = params.to_json()
    spec = params.group_spec
    charges = {k: build_charge(params, k) for k in range(1, kmax + 1)}
    for k1 in range(1, kmax + 1):
        for k2 in range(k1 + 1, kmax + 1):
            _is_zero_item(
                suite,
                "[I^(k), I^(l)] = 0",
                {**idx, "k": k1, "l": k2},
                op_commutator(charges[k1], charges[k2]),
            )
    for k in range(1, kmax + 1):
        for i in range(1, N):
            e = MixedOperator.from_group(generator(spec, "e", i=i), order=m)
            _is_zero_item(
                suite,
                "[I^(k), P_{i,i+1}] = 0",
                {**idx, "k": k, "i": i},
                op_commutator(charges[k], e),
            )
        for i in range(1, N + 1):
            qi = MixedOperator.from_group(generator(spec, "Q", i=i), order=m)
            _is_zero_item(
                suite,
                "[I^(k), Q_i] = 0",
                {**idx, "k": k, "i": i},
                op_commutator(charges[k], qi),
            )
    if params.family == "dihedral":
        K1 = MixedOperator.from_group(generator(spec, "K", i=1), order=m)
        _is_zero_item(
            suite,
            "[J^(2), K_i] = 0",
            {**idx, "k": 2},
            op_commutator(charges[2], K1),
        )
        generic = params.lam != 0 and params.mu != 0
        if generic:
            _is_zero_item(
                suite,
                "[J^(1), K_i] != 0 (generic couplings)",
                {**idx, "k": 1},
                op_commutator(charges[1], K1),
                expect_zero=False,
            )
    return suite
