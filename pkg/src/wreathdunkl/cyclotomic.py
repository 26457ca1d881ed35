"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A scalar is stored on the power basis ``1, z, ..., z**(phi(n)-1)`` of
Q(zeta_n), reduced modulo the n-th cyclotomic polynomial, with one common
arbitrary-precision integer denominator.  The representation is canonical,
so equality is structural within a field.  All phases and couplings in the
engine (rotation phases, lattice positions, chain couplings) live here.

Mixed-order arithmetic lifts automatically only when one order divides the
other; anything else raises ``FieldMismatchError``, and the caller is
expected to lift both sides into the lcm field explicitly.  This keeps
accidental field blow-up visible at the call site.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from . import _kernels as K


class FieldMismatchError(ValueError):
    """Raised when two scalars live in incompatible cyclotomic fields."""


def _int_poly_divexact(num: list[int], div: list[int]) -> list[int]:
    """Exact division of dense integer polynomials (lowest degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(div) + 1)
    lead = div[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(div) - 1]
        if c % lead:
            raise ArithmeticError("inexact integer polynomial division")
        q = c // lead
        out[k] = q
        if q:
            for j, dj in enumerate(div):
                num[k + j] -= q * dj
    if any(num[: len(div) - 1]):
        raise ArithmeticError("nonzero remainder in exact division")
    return out


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Dense integer coefficients of the n-th cyclotomic polynomial.

    Computed by dividing x**n - 1 by the cyclotomic polynomials of all
    proper divisors, which needs nothing beyond exact integer division.
    """
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_divexact(poly, list(_cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _moebius(n: int) -> int:
    mu = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
        else:
            p += 1
    if n > 1:
        mu = -mu
    return mu


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(_cyclotomic_poly(n)) - 1


class CyclotomicField:
    """Descriptor for Q(zeta_n): minimal polynomial plus reduction tables.

    ``red`` reduces the powers ``z**phi .. z**(2*phi-2)`` that appear in
    products of reduced elements; ``powers`` gives every ``z**k`` for
    ``k < n`` on the basis, which drives Galois substitution, embeddings
    and root-of-unity construction.
    """

    __slots__ = ("order", "phi", "min_poly", "red", "powers", "trace_row")

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("field order must be a positive integer")
        self.order = order
        poly = _cyclotomic_poly(order)
        self.min_poly = poly
        phi = len(poly) - 1
        self.phi = phi

        rows: list[tuple[int, ...]] = []
        if phi > 1:
            base = [-c for c in poly[:phi]]
            rows.append(tuple(base))
            cur = base
            for _ in range(phi - 2):
                spill = cur[-1]
                nxt = [0] + cur[:-1]
                if spill:
                    for j in range(phi):
                        nxt[j] += spill * base[j]
                cur = nxt
                rows.append(tuple(cur))
        self.red = tuple(rows)

        powers: list[tuple[int, ...]] = []
        if phi == 1:
            z = -poly[0]  # 1 for order 1, -1 for order 2
            powers = [(z**k,) for k in range(order)]
        else:
            base = rows[0]
            cur = [1] + [0] * (phi - 1)
            for _ in range(order):
                powers.append(tuple(cur))
                spill = cur[-1]
                nxt = [0] + cur[:-1]
                if spill:
                    for j in range(phi):
                        nxt[j] += spill * base[j]
                cur = nxt
        self.powers = tuple(powers)

        # Tr(z^j)/phi(n) for basis powers; an embedding-invariant rational.
        tr = []
        for j in range(phi):
            nj = order // gcd(j, order) if j else 1
            tr.append(Fraction(_moebius(nj), euler_phi(nj)))
        self.trace_row = tuple(tr)

    @staticmethod
    @lru_cache(maxsize=None)
    def get(order: int) -> "CyclotomicField":
        return CyclotomicField(order)


def make_root_field(n: int) -> CyclotomicField:
    """Field descriptor for Q(zeta_n); n = 1 yields the rationals."""
    return CyclotomicField.get(n)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class CycloScalar:
    """An element of Q(zeta_n) in canonical reduced form."""

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, num, den: int = 1, _normalized: bool = False):
        self.order = order
        if _normalized:
            self.num = num
            self.den = den
        else:
            self.num, self.den = K.scalar_normalize(tuple(num), den)
        if len(self.num) != CyclotomicField.get(order).phi:
            raise ValueError("coefficient vector has wrong length for the field")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order: int = 1) -> "CycloScalar":
        phi = CyclotomicField.get(order).phi
        return CycloScalar(order, (0,) * phi, 1, _normalized=True)

    @staticmethod
    def one(order: int = 1) -> "CycloScalar":
        return CycloScalar.rational(1, order)

    @staticmethod
    def rational(value, order: int = 1) -> "CycloScalar":
        f = _as_fraction(value)
        phi = CyclotomicField.get(order).phi
        num = (f.numerator,) + (0,) * (phi - 1)
        return CycloScalar(order, num, f.denominator)

    @staticmethod
    def root_of_unity(order: int, power: int = 1) -> "CycloScalar":
        """zeta_order ** power, reduced to the power basis."""
        field = CyclotomicField.get(order)
        return CycloScalar(order, field.powers[power % order], 1)

    # -- field plumbing ----------------------------------------------------

    @property
    def field(self) -> CyclotomicField:
        return CyclotomicField.get(self.order)

    def lift(self, order: int) -> "CycloScalar":
        """Embed into Q(zeta_order); requires ``self.order | order``."""
        if order == self.order:
            return self
        if order % self.order:
            raise FieldMismatchError(
                f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order})"
            )
        big = CyclotomicField.get(order)
        step = order // self.order
        acc = [0] * big.phi
        for j, c in enumerate(self.num):
            if c:
                row = big.powers[(j * step) % order]
                for t, r in enumerate(row):
                    if r:
                        acc[t] += c * r
        return CycloScalar(order, acc, self.den)

    def _match(self, other) -> tuple["CycloScalar", "CycloScalar"]:
        if not isinstance(other, CycloScalar):
            other = CycloScalar.rational(other, 1)
        if self.order == other.order:
            return self, other
        if other.order % self.order == 0:
            return self.lift(other.order), other
        if self.order % other.order == 0:
            return self, other.lift(self.order)
        lcm = self.order * other.order // gcd(self.order, other.order)
        raise FieldMismatchError(
            f"orders {self.order} and {other.order} are incompatible; "
            f"lift both operands into Q(zeta_{lcm}) first"
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (CycloScalar, int, Fraction)):
            return NotImplemented
        a, b = self._match(other)
        n, d = K.scalar_add(a.num, a.den, b.num, b.den)
        return CycloScalar(a.order, n, d, _normalized=True)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (CycloScalar, int, Fraction)):
            return NotImplemented
        a, b = self._match(other)
        n, d = K.scalar_sub(a.num, a.den, b.num, b.den)
        return CycloScalar(a.order, n, d, _normalized=True)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycloScalar(
            self.order, tuple(-v for v in self.num), self.den, _normalized=True
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            n, d = K.scalar_rat_mul(self.num, self.den, f.numerator, f.denominator)
            return CycloScalar(self.order, n, d, _normalized=True)
        if not isinstance(other, CycloScalar):
            return NotImplemented
        a, b = self._match(other)
        n, d = K.scalar_mul(a.num, a.den, b.num, b.den, a.field.red)
        return CycloScalar(a.order, n, d, _normalized=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            if f == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self * Fraction(f.denominator, f.numerator)
        if not isinstance(other, CycloScalar):
            return NotImplemented
        a, b = self._match(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycloScalar.rational(other, self.order) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloScalar.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "CycloScalar":
        """Multiplicative inverse via extended Euclid modulo the minimal poly."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        field = self.field
        if field.phi == 1:
            return CycloScalar.rational(Fraction(self.den, self.num[0]), self.order)
        a = [Fraction(c, self.den) for c in self.num]
        while a and a[-1] == 0:
            a.pop()
        b = [Fraction(c) for c in field.min_poly]
        r0, r1 = b, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            if not any(r1):
                raise ArithmeticError("element shares a factor with the minimal poly")
            if len(r1) == 1:
                inv = [c / r1[0] for c in s1]
                break
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        acc = _frac_fold(inv, field)
        den = 1
        for c in acc:
            den = den * c.denominator // gcd(den, c.denominator)
        num = tuple(int(c * den) for c in acc)
        return CycloScalar(self.order, num, den)

    def conj(self) -> "CycloScalar":
        """Complex conjugation, zeta -> zeta**(n-1)."""
        return self.galois(self.order - 1) if self.order > 1 else self

    def galois(self, t: int) -> "CycloScalar":
        """The automorphism zeta -> zeta**t; t must be coprime to the order."""
        n = self.order
        if n == 1:
            return self
        if gcd(t % n, n) != 1:
            raise ValueError(f"zeta -> zeta^{t} is not a field automorphism")
        field = self.field
        acc = [0] * field.phi
        for j, c in enumerate(self.num):
            if c:
                row = field.powers[(j * t) % n]
                for k, r in enumerate(row):
                    if r:
                        acc[k] += c * r
        return CycloScalar(n, acc, self.den)

    # -- predicates and conversions ---------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def to_complex(self, precision: int = 53):
        """Numeric value with ``precision`` bits of working precision.

        Returns a builtin complex for the default precision, an mpmath
        complex above it.
        """
        with mpmath.workprec(precision + 20):
            z = mpmath.expjpi(mpmath.mpf(2) / self.order)
            acc = mpmath.mpc(0)
            p = mpmath.mpc(1)
            for c in self.num:
                if c:
                    acc += c * p
                p *= z
            acc /= self.den
            if precision <= 53:
                return complex(acc)
            return +acc

    def _normalized_trace(self) -> Fraction:
        """Tr(x)/phi(n), which is invariant under field embeddings."""
        row = self.field.trace_row
        acc = Fraction(0)
        for c, t in zip(self.num, row):
            if c:
                acc += c * t
        return acc / self.den

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloScalar.rational(other, 1)
        if not isinstance(other, CycloScalar):
            return NotImplemented
        try:
            a, b = self._match(other)
        except FieldMismatchError:
            lcm = self.order * other.order // gcd(self.order, other.order)
            a, b = self.lift(lcm), other.lift(lcm)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash(("cyclo", self._normalized_trace(), self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        sym = f"z{self.order}"
        parts = []
        for j, c in enumerate(self.num):
            if not c:
                continue
            mono = "1" if j == 0 else (sym if j == 1 else f"{sym}^{j}")
            q = Fraction(c, self.den)
            if j == 0:
                parts.append(str(q))
            elif q == 1:
                parts.append(mono)
            elif q == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{q}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [str(Fraction(c, self.den)) for c in self.num],
        }

    @staticmethod
    def from_json(data: dict) -> "CycloScalar":
        order = int(data["order"])
        coeffs = [Fraction(s) for s in data["coeffs"]]
        phi = CyclotomicField.get(order).phi
        if len(coeffs) != phi:
            raise ValueError("coefficient list has wrong length for the order")
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return CycloScalar(order, tuple(int(c * den) for c in coeffs), den)


def _frac_fold(vec: list[Fraction], field: CyclotomicField) -> list[Fraction]:
    """Reduce a dense Fraction vector of any degree to the power basis."""
    vec = list(vec)
    phi = field.phi
    base = field.red[0] if field.red else ()
    while len(vec) > phi:
        c = vec.pop()
        if c:
            d = len(vec) - phi  # z**(phi+d) folds into z**d * z**phi
            for j, bj in enumerate(base):
                if bj:
                    vec[d + j] += c * bj
    while len(vec) < phi:
        vec.append(Fraction(0))
    return vec


def _frac_divmod(a: list[Fraction], b: list[Fraction]):
    """Quotient and remainder of dense Fraction polynomials."""
    r = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(r) >= len(b):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        c = r[-1] / b[-1]
        k = len(r) - len(b)
        q[k] = c
        for j, bj in enumerate(b):
            r[k + j] -= c * bj
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, (r if r else [Fraction(0)])


def _frac_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _frac_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return out
