"""Sparse Laurent polynomials and rational functions over Q(zeta_n).

``LaurentPoly`` maps integer exponent vectors (negative entries allowed) to
nonzero field scalars; the representation is canonical so equality is
structural.  ``RationalCoefficient`` is a quotient ``num / prod f_i**k_i``
whose denominator is kept as a multiset of unit-normalized factors: every
factor has nonnegative exponents, no monomial content, and leading
coefficient 1 in lexicographic order, with the stripped unit absorbed into
the numerator.  Keeping denominators factored means the common denominator
of a long sum is a factor-wise max instead of a product, which is what makes
exact normal-ordering of operator sums affordable.  No polynomial gcd is
ever computed; cancellation only trial-divides the numerator by denominator
factors, and equality is decided by cross-multiplication.

The group acts by substitution: a permutation relabels variables, a
rotation scales ``q_i`` by the phase ``tau``, a flip inverts ``q_i``.
Euler derivatives ``D_i = q_i d/dq_i`` act monomial-wise.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import _kernels as K
from .cyclotomic import CycloScalar, CyclotomicField, FieldMismatchError
from .groups import WreathElement


@lru_cache(maxsize=None)
def _complex_basis(order: int) -> tuple[complex, ...]:
    phi = CyclotomicField.get(order).phi
    z = cmath.exp(2j * cmath.pi / order)
    return tuple(z**j for j in range(phi))


def _raw_to_complex(raw, order: int) -> complex:
    num, den = raw
    basis = _complex_basis(order)
    return sum(c * b for c, b in zip(num, basis) if c) / den


def _coerce_scalar(value, order: int) -> CycloScalar:
    if isinstance(value, CycloScalar):
        lcm = order * value.order // gcd(order, value.order)
        return value.lift(lcm)
    return CycloScalar.rational(value, order)


class LaurentPoly:
    __slots__ = ("nvars", "order", "terms", "_key")

    def __init__(self, nvars: int, order: int, terms: dict, _trusted: bool = False):
        self.nvars = nvars
        self.order = order
        if _trusted:
            self.terms = terms
        else:
            clean = {}
            for e, v in terms.items():
                if isinstance(v, CycloScalar):
                    v = v.lift(order)
                    raw = (v.num, v.den)
                elif isinstance(v, (int, Fraction)):
                    s = CycloScalar.rational(v, order)
                    raw = (s.num, s.den)
                else:
                    raw = K.scalar_normalize(tuple(v[0]), v[1])
                if any(raw[0]):
                    clean[tuple(e)] = raw
            self.terms = clean
        self._key = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int, order: int = 1) -> "LaurentPoly":
        return LaurentPoly(nvars, order, {}, _trusted=True)

    @staticmethod
    def constant(nvars: int, value, order: int = 1) -> "LaurentPoly":
        s = _coerce_scalar(value, order)
        if s.is_zero():
            return LaurentPoly.zero(nvars, s.order)
        return LaurentPoly(
            nvars, s.order, {(0,) * nvars: (s.num, s.den)}, _trusted=True
        )

    @staticmethod
    def variable(var: int, nvars: int, order: int = 1, power: int = 1) -> "LaurentPoly":
        """The monomial q_var**power; ``var`` is 1-based."""
        if not 1 <= var <= nvars:
            raise ValueError(f"variable index {var} out of range")
        e = [0] * nvars
        e[var - 1] = power
        one = CycloScalar.one(order)
        return LaurentPoly(nvars, order, {tuple(e): (one.num, one.den)}, _trusted=True)

    @staticmethod
    def monomial(nvars: int, exps, coeff, order: int = 1) -> "LaurentPoly":
        s = _coerce_scalar(coeff, order)
        if s.is_zero():
            return LaurentPoly.zero(nvars, s.order)
        return LaurentPoly(nvars, s.order, {tuple(exps): (s.num, s.den)}, _trusted=True)

    # -- plumbing ----------------------------------------------------------

    def lift(self, order: int) -> "LaurentPoly":
        if order == self.order:
            return self
        if order % self.order:
            raise FieldMismatchError(
                f"cannot lift poly from order {self.order} to {order}"
            )
        out = {}
        for e, (n, d) in self.terms.items():
            s = CycloScalar(self.order, n, d, _normalized=True).lift(order)
            out[e] = (s.num, s.den)
        return LaurentPoly(self.nvars, order, out, _trusted=True)

    def _match(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials in different numbers of variables")
        if self.order == other.order:
            return self, other
        if other.order % self.order == 0:
            return self.lift(other.order), other
        if self.order % other.order == 0:
            return self, other.lift(self.order)
        lcm = self.order * other.order // gcd(self.order, other.order)
        raise FieldMismatchError(
            f"polynomial orders {self.order}, {other.order} need an explicit "
            f"lift to {lcm}"
        )

    def key(self):
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            other = LaurentPoly.constant(self.nvars, other, self.order)
        a, b = self._match(other)
        return LaurentPoly(a.nvars, a.order, K.poly_add(a.terms, b.terms), _trusted=True)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            other = LaurentPoly.constant(self.nvars, other, self.order)
        a, b = self._match(other)
        return LaurentPoly(
            a.nvars, a.order, K.poly_add(a.terms, K.poly_neg(b.terms)), _trusted=True
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentPoly(self.nvars, self.order, K.poly_neg(self.terms), _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            out = {}
            for e, (n, d) in self.terms.items():
                raw = K.scalar_rat_mul(n, d, f.numerator, f.denominator)
                if any(raw[0]):
                    out[e] = raw
            return LaurentPoly(self.nvars, self.order, out, _trusted=True)
        if isinstance(other, CycloScalar):
            order = self.order
            if other.order != order:
                if order % other.order == 0:
                    other = other.lift(order)
                elif other.order % order == 0:
                    return self.lift(other.order) * other
                else:
                    raise FieldMismatchError("scalar order incompatible with poly")
            field = CyclotomicField.get(order)
            out = K.poly_scalar_mul(self.terms, other.num, other.den, field.red)
            return LaurentPoly(self.nvars, order, out, _trusted=True)
        a, b = self._match(other)
        field = CyclotomicField.get(a.order)
        return LaurentPoly(
            a.nvars, a.order, K.poly_mul(a.terms, b.terms, field.red), _trusted=True
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined")
        out = LaurentPoly.constant(self.nvars, 1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            other = LaurentPoly.constant(self.nvars, other, self.order)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        try:
            a, b = self._match(other)
        except FieldMismatchError:
            lcm = self.order * other.order // gcd(self.order, other.order)
            a, b = self.lift(lcm), other.lift(lcm)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.nvars, len(self.terms)))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.nvars}

    def as_scalar(self) -> CycloScalar:
        if self.is_zero():
            return CycloScalar.zero(self.order)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        n, d = self.terms[(0,) * self.nvars]
        return CycloScalar(self.order, n, d, _normalized=True)

    def nterms(self) -> int:
        return len(self.terms)

    def coeff(self, exps) -> CycloScalar:
        raw = self.terms.get(tuple(exps))
        if raw is None:
            return CycloScalar.zero(self.order)
        return CycloScalar(self.order, raw[0], raw[1], _normalized=True)

    def items(self):
        for e, (n, d) in sorted(self.terms.items()):
            yield e, CycloScalar(self.order, n, d, _normalized=True)

    # -- calculus and group action ------------------------------------------

    def euler(self, var: int) -> "LaurentPoly":
        """Apply D_var = q_var d/dq_var (1-based index)."""
        i = var - 1
        out = {}
        for e, (n, d) in self.terms.items():
            a = e[i]
            if a:
                out[e] = K.scalar_rat_mul(n, d, a, 1)
        return LaurentPoly(self.nvars, self.order, out, _trusted=True)

    def act(self, g: WreathElement) -> "LaurentPoly":
        """Substitution action of a wreath element on the variables."""
        if g.size != self.nvars:
            raise ValueError("group element size does not match variable count")
        m = g.order
        order = self.order
        if order % m:
            order = order * m // gcd(order, m)
        p = self.lift(order) if order != self.order else self
        if g.is_identity():
            return p
        field = CyclotomicField.get(order)
        step = order // m
        out = {}
        for e, raw in p.terms.items():
            new_e, t = g.act_on_exponents(e)
            if t:
                row = field.powers[(t * step) % order]
                raw = K.scalar_mul(raw[0], raw[1], row, 1, field.red)
            out[new_e] = raw
        return LaurentPoly(self.nvars, order, out, _trusted=True)

    def conj_invert(self) -> "LaurentPoly":
        """Conjugate coefficients and invert all variables (q on the torus)."""
        out = {}
        for e, (n, d) in self.terms.items():
            s = CycloScalar(self.order, n, d, _normalized=True).conj()
            out[tuple(-x for x in e)] = (s.num, s.den)
        return LaurentPoly(self.nvars, self.order, out, _trusted=True)

    # -- evaluation ----------------------------------------------------------

    def eval_complex(self, point) -> complex:
        acc = 0j
        for e, raw in self.terms.items():
            mono = 1.0 + 0j
            for z, a in zip(point, e):
                if a:
                    mono *= z**a
            acc += _raw_to_complex(raw, self.order) * mono
        return acc

    def eval_exact(self, values) -> CycloScalar:
        """Evaluate at exact scalars (all orders must embed in a common one)."""
        order = self.order
        for v in values:
            order = order * v.order // gcd(order, v.order)
        vals = [v.lift(order) for v in values]
        acc = CycloScalar.zero(order)
        for e, (n, d) in self.terms.items():
            c = CycloScalar(self.order, n, d, _normalized=True).lift(order)
            for v, a in zip(vals, e):
                if a:
                    c = c * v**a
            acc = acc + c
        return acc

    # -- normalization and division -----------------------------------------

    def min_exps(self) -> tuple[int, ...]:
        its = iter(self.terms)
        first = next(its)
        lo = list(first)
        for e in its:
            for i, x in enumerate(e):
                if x < lo[i]:
                    lo[i] = x
        return tuple(lo)

    def shifted(self, delta) -> "LaurentPoly":
        out = {
            tuple(x + dx for x, dx in zip(e, delta)): v for e, v in self.terms.items()
        }
        return LaurentPoly(self.nvars, self.order, out, _trusted=True)

    def unit_normalize(self):
        """Write self = coeff * q**shift * monic and return all three.

        ``monic`` has nonnegative exponents with zero monomial content and
        leading (lex-max) coefficient 1.
        """
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        shift = self.min_exps()
        p = self.shifted(tuple(-x for x in shift)) if any(shift) else self
        lead = max(p.terms)
        n, d = p.terms[lead]
        c = CycloScalar(self.order, n, d, _normalized=True)
        if c == 1:
            return c, shift, p
        return c, shift, p * c.inverse()

    def divide_exact(self, f: "LaurentPoly"):
        """Exact quotient self/f, or None when f does not divide self.

        ``f`` must have nonnegative exponents; self may be Laurent, its
        monomial content is carried through unchanged.
        """
        if self.is_zero():
            return self
        a, f = self._match(f)
        shift = a.min_exps()
        p = a.shifted(tuple(-x for x in shift)) if any(shift) else a
        field = CyclotomicField.get(a.order)
        lead_f = max(f.terms)
        nf, df = f.terms[lead_f]
        inv_cf = CycloScalar(a.order, nf, df, _normalized=True).inverse()
        rem = dict(p.terms)
        quo = {}
        while rem:
            lead_r = max(rem)
            diff = tuple(x - y for x, y in zip(lead_r, lead_f))
            if any(x < 0 for x in diff):
                return None
            nr, dr = rem[lead_r]
            c = CycloScalar(a.order, nr, dr, _normalized=True) * inv_cf
            quo[diff] = (c.num, c.den)
            piece = K.poly_mul({diff: (c.num, c.den)}, f.terms, field.red)
            rem = K.poly_add(rem, K.poly_neg(piece))
        if any(shift):
            quo = {tuple(x + s for x, s in zip(e, shift)): v for e, v in quo.items()}
        return LaurentPoly(a.nvars, a.order, quo, _trusted=True)

    # -- io -------------------------------------------------------------------

    def to_json(self) -> list:
        out = []
        for e, s in self.items():
            out.append({"exp": list(e), "coeff": s.to_json()})
        return out

    @staticmethod
    def from_json(data: list, nvars: int) -> "LaurentPoly":
        order = 1
        pairs = []
        for item in data:
            s = CycloScalar.from_json(item["coeff"])
            order = order * s.order // gcd(order, s.order)
            pairs.append((tuple(item["exp"]), s))
        p = LaurentPoly.zero(nvars, order)
        for e, s in pairs:
            p = p + LaurentPoly.monomial(nvars, e, s.lift(order), order)
        return p

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, s in self.items():
            mono = "*".join(
                f"q{i+1}" if a == 1 else f"q{i+1}^{a}" for i, a in enumerate(e) if a
            )
            if not mono:
                parts.append(f"({s!r})")
            else:
                parts.append(f"({s!r})*{mono}" if s != 1 else mono)
        return " + ".join(parts)


class RationalCoefficient:
    """Quotient of Laurent polynomials with a factored denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: tuple = (), _trusted: bool = False):
        if _trusted:
            self.num = num
            self.den = den
            return
        order = num.order
        for f, k in den:
            if f.is_zero():
                raise ZeroDivisionError("zero denominator factor")
            if k <= 0:
                raise ValueError("denominator multiplicities must be positive")
            order = order * f.order // gcd(order, f.order)
        unit_num = num.lift(order)
        factors: dict[LaurentPoly, int] = {}
        for f, k in den:
            c, shift, monic = f.lift(order).unit_normalize()
            if not monic.is_constant():
                factors[monic] = factors.get(monic, 0) + k
            if c != 1 or any(shift):
                unit_inv = LaurentPoly.monomial(
                    num.nvars, tuple(-x * k for x in shift), c.inverse() ** k, order
                )
                unit_num = unit_num * unit_inv
        self.num, self.den = _cancel(unit_num, factors)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int, order: int = 1) -> "RationalCoefficient":
        return RationalCoefficient(LaurentPoly.zero(nvars, order), (), _trusted=True)

    @staticmethod
    def one(nvars: int, order: int = 1) -> "RationalCoefficient":
        return RationalCoefficient.from_poly(LaurentPoly.constant(nvars, 1, order))

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RationalCoefficient":
        return RationalCoefficient(p, (), _trusted=True)

    @staticmethod
    def from_scalar(nvars: int, value, order: int = 1) -> "RationalCoefficient":
        return RationalCoefficient.from_poly(LaurentPoly.constant(nvars, value, order))

    @staticmethod
    def ratio(num: LaurentPoly, den: LaurentPoly, power: int = 1) -> "RationalCoefficient":
        return RationalCoefficient(num, ((den, power),))

    # -- plumbing ------------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def order(self) -> int:
        return self.num.order

    def lift(self, order: int) -> "RationalCoefficient":
        if order == self.order:
            return self
        return RationalCoefficient(
            self.num.lift(order),
            tuple((f.lift(order), k) for f, k in self.den),
            _trusted=True,
        )

    def _match(self, other: "RationalCoefficient"):
        if self.order == other.order:
            return self, other
        if other.order % self.order == 0:
            return self.lift(other.order), other
        if self.order % other.order == 0:
            return self, other.lift(self.order)
        lcm = self.order * other.order // gcd(self.order, other.order)
        raise FieldMismatchError(
            f"rational functions at orders {self.order}, {other.order} need a "
            f"lift to {lcm}"
        )

    def den_poly(self) -> LaurentPoly:
        out = LaurentPoly.constant(self.nvars, 1, self.order)
        for f, k in self.den:
            out = out * f**k
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return not self.den and self.num.is_constant()

    def as_scalar(self) -> CycloScalar:
        if not self.den:
            return self.num.as_scalar()
        raise ValueError("rational function has a nontrivial denominator")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            other = RationalCoefficient.from_scalar(self.nvars, other, self.order)
        elif isinstance(other, LaurentPoly):
            other = RationalCoefficient.from_poly(other)
        a, b = self._match(other)
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        if a.den == b.den:
            return RationalCoefficient._reduced(a.num + b.num, dict(a.den))
        da, db = dict(a.den), dict(b.den)
        lcm: dict[LaurentPoly, int] = dict(da)
        for f, k in db.items():
            if lcm.get(f, 0) < k:
                lcm[f] = k
        na = a.num
        for f, k in lcm.items():
            extra = k - da.get(f, 0)
            if extra:
                na = na * f**extra
        nb = b.num
        for f, k in lcm.items():
            extra = k - db.get(f, 0)
            if extra:
                nb = nb * f**extra
        return RationalCoefficient._reduced(na + nb, lcm)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            other = RationalCoefficient.from_scalar(self.nvars, other, self.order)
        elif isinstance(other, LaurentPoly):
            other = RationalCoefficient.from_poly(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RationalCoefficient(-self.num, self.den, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            return RationalCoefficient(self.num * other, self.den, _trusted=True)
        if isinstance(other, LaurentPoly):
            other = RationalCoefficient.from_poly(other)
        a, b = self._match(other)
        if a.is_zero() or b.is_zero():
            return RationalCoefficient.zero(a.nvars, a.order)
        den = dict(a.den)
        for f, k in b.den:
            den[f] = den.get(f, 0) + k
        return RationalCoefficient._reduced(a.num * b.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return self * Fraction(f.denominator, f.numerator)
        if isinstance(other, CycloScalar):
            return self * other.inverse()
        return self * other.reciprocal()

    def reciprocal(self) -> "RationalCoefficient":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of the zero rational function")
        num = self.den_poly()
        return RationalCoefficient(num, ((self.num, 1),))

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        out = RationalCoefficient.one(self.nvars, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    @staticmethod
    def _reduced(num: LaurentPoly, den: dict) -> "RationalCoefficient":
        num, dentuple = _cancel(num, den)
        return RationalCoefficient(num, dentuple, _trusted=True)

    # -- calculus, action, evaluation -----------------------------------------

    def euler(self, var: int) -> "RationalCoefficient":
        """Euler derivative D_var by the quotient rule on the factored form."""
        if not self.den:
            return RationalCoefficient(self.num.euler(var), (), _trusted=True)
        triples = [(f, k, f.euler(var)) for f, k in self.den]
        active = [(f, k, df) for f, k, df in triples if not df.is_zero()]
        if not active:
            return RationalCoefficient._reduced(self.num.euler(var), dict(self.den))
        prod_active = LaurentPoly.constant(self.nvars, 1, self.order)
        for f, _, _ in active:
            prod_active = prod_active * f
        acc = self.num.euler(var) * prod_active
        for i, (f, k, df) in enumerate(active):
            rest = LaurentPoly.constant(self.nvars, 1, self.order)
            for j, (other, _, _) in enumerate(active):
                if j != i:
                    rest = rest * other
            acc = acc - (self.num * df * rest) * k
        den = {f: (k + 1 if not df.is_zero() else k) for f, k, df in triples}
        return RationalCoefficient._reduced(acc, den)

    def act(self, g: WreathElement) -> "RationalCoefficient":
        num = self.num.act(g)
        den: dict[LaurentPoly, int] = {}
        for f, k in self.den:
            fg = f.act(g)
            c, shift, monic = fg.unit_normalize()
            if not monic.is_constant():
                den[monic] = den.get(monic, 0) + k
            if c != 1 or any(shift):
                unit_inv = LaurentPoly.monomial(
                    self.nvars,
                    tuple(-x * k for x in shift),
                    c.inverse() ** k,
                    fg.order,
                )
                num = num * unit_inv
        return RationalCoefficient._reduced(num, den)

    def conj_invert(self) -> "RationalCoefficient":
        num = self.num.conj_invert()
        den: dict[LaurentPoly, int] = {}
        for f, k in self.den:
            fc = f.conj_invert()
            c, shift, monic = fc.unit_normalize()
            if not monic.is_constant():
                den[monic] = den.get(monic, 0) + k
            if c != 1 or any(shift):
                unit_inv = LaurentPoly.monomial(
                    self.nvars,
                    tuple(-x * k for x in shift),
                    c.inverse() ** k,
                    fc.order,
                )
                num = num * unit_inv
        return RationalCoefficient._reduced(num, den)

    def eval_complex(self, point) -> complex:
        acc = self.num.eval_complex(point)
        for f, k in self.den:
            acc /= f.eval_complex(point) ** k
        return acc

    def eval_exact(self, values) -> CycloScalar:
        acc = self.num.eval_exact(values)
        for f, k in self.den:
            v = f.eval_exact(values)
            if v.is_zero():
                raise ZeroDivisionError("denominator vanishes at the given point")
            acc = acc * (v.inverse() ** k)
        return acc

    def den_min_abs(self, point) -> float:
        """Smallest |factor| at the numeric point (singularity guard)."""
        if not self.den:
            return float("inf")
        return min(abs(f.eval_complex(point)) for f, _ in self.den)

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            other = RationalCoefficient.from_scalar(self.nvars, other, self.order)
        if not isinstance(other, RationalCoefficient):
            return NotImplemented
        try:
            a, b = self._match(other)
        except FieldMismatchError:
            lcm = self.order * other.order // gcd(self.order, other.order)
            a, b = self.lift(lcm), other.lift(lcm)
        da, db = dict(a.den), dict(b.den)
        for f in list(da):
            if f in db:
                k = min(da[f], db[f])
                da[f] -= k
                db[f] -= k
                if not da[f]:
                    del da[f]
                if not db[f]:
                    del db[f]
        left = a.num
        for f, k in db.items():
            left = left * f**k
        right = b.num
        for f, k in da.items():
            right = right * f**k
        return left == right

    def __hash__(self):
        return hash((self.nvars, len(self.num.terms), len(self.den)))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den_poly().to_json()}

    def __repr__(self):
        if not self.den:
            return repr(self.num)
        den = " * ".join(
            f"({f!r})" + (f"^{k}" if k > 1 else "") for f, k in self.den
        )
        return f"({self.num!r}) / [{den}]"


def _cancel(num: LaurentPoly, den: dict) -> tuple[LaurentPoly, tuple]:
    """Drop zero numerators, trial-divide by denominator factors, sort."""
    if num.is_zero():
        return num, ()
    out = []
    for f, k in den.items():
        if f.order != num.order:
            f = f.lift(num.order)
        while k > 0:
            q = num.divide_exact(f)
            if q is None:
                break
            num = q
            k -= 1
        if k:
            out.append((f, k))
    out.sort(key=lambda fk: fk[0].key())
    return num, tuple(out)


# module-level names for the core operations, matching how call sites read

def group_action(g: WreathElement, f):
    """Apply a wreath element to a polynomial or rational function."""
    return f.act(g)


def euler_apply(var: int, f):
    """Apply the Euler derivative q_var d/dq_var."""
    return f.euler(var)


def rational_eq(a: RationalCoefficient, b: RationalCoefficient) -> bool:
    """Exact equality by cross-multiplication."""
    return a == b


def random_torus_point(rng, nvars: int) -> tuple[complex, ...]:
    """A uniform point on the torus |q_i| = 1."""
    return tuple(
        cmath.exp(2j * cmath.pi * rng.random()) for _ in range(nvars)
    )
