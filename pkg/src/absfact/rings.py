"""Exact coefficient rings: Z, Q, Z/m, and number fields Q[T]/q(T).

Ring *elements* are plain values carrying their own arithmetic: ints for Z,
``fractions.Fraction`` for Q, :class:`ModElem` for Z/m and :class:`NFElem`
for number fields.  Ring *objects* (``ZZ``, ``QQ``, ``Zmod(m)``,
``NumberField(q)``) act as tags on polynomials and provide zero/one,
coercion from int, inverses and exact division, so that polynomial code can
stay generic.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .arith import is_prime
from .errors import DivisionByZero, ExactDivisionFailed, NotInvertible


class ModElem:
    """Residue a mod m, stored canonically in [0, m)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        self.value = value % modulus
        self.modulus = modulus

    def _check(self, other: "ModElem") -> None:
        if self.modulus != other.modulus:
            raise ValueError("mixed moduli: %d vs %d" % (self.modulus, other.modulus))

    def __add__(self, other):
        if not isinstance(other, ModElem):
            return NotImplemented
        self._check(other)
        return ModElem(self.value + other.value, self.modulus)

    def __sub__(self, other):
        if not isinstance(other, ModElem):
            return NotImplemented
        self._check(other)
        return ModElem(self.value - other.value, self.modulus)

    def __mul__(self, other):
        if not isinstance(other, ModElem):
            return NotImplemented
        self._check(other)
        return ModElem(self.value * other.value, self.modulus)

    def __neg__(self):
        return ModElem(-self.value, self.modulus)

    def __truediv__(self, other):
        if not isinstance(other, ModElem):
            return NotImplemented
        return self * mod_inverse(other)

    def __eq__(self, other):
        return (
            isinstance(other, ModElem)
            and self.modulus == other.modulus
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return f"{self.value} mod {self.modulus}"

    @property
    def symmetric(self) -> int:
        """Representative in [-m/2, m/2); view used when building lattices."""
        return self.value - self.modulus if 2 * self.value >= self.modulus else self.value

    def __bool__(self):
        return self.value != 0


def mod_inverse(a: ModElem) -> ModElem:
    """Inverse of a in Z/m; raises NotInvertible when gcd(a, m) != 1."""
    try:
        return ModElem(pow(a.value, -1, a.modulus), a.modulus)
    except ValueError:
        raise NotInvertible(f"{a!r} is not invertible") from None


class IntegerRing:
    """The ring Z; elements are Python ints."""

    is_field = False
    char = 0

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return n

    def is_zero(self, a) -> bool:
        return a == 0

    def inv(self, a):
        if a in (1, -1):
            return a
        raise NotInvertible(f"{a} is not a unit in Z")

    def exact_div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in Z")
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionFailed(f"{a} not divisible by {b} in Z")
        return q

    def __repr__(self):
        return "ZZ"


class RationalField:
    """The field Q; elements are Fractions (always in lowest terms)."""

    is_field = True
    char = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def is_zero(self, a) -> bool:
        return a == 0

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(a)

    def exact_div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in Q")
        return Fraction(a) / Fraction(b)

    def __repr__(self):
        return "QQ"


ZZ = IntegerRing()
QQ = RationalField()


class Zmod:
    """The ring Z/m; a field when m is prime."""

    char = None  # set per instance

    def __init__(self, m: int):
        if m <= 0:
            raise ValueError("modulus must be positive")
        self.m = m
        self.is_field = is_prime(m)
        self.char = m if self.is_field else None

    def zero(self):
        return ModElem(0, self.m)

    def one(self):
        return ModElem(1, self.m)

    def from_int(self, n: int):
        return ModElem(n, self.m)

    def is_zero(self, a) -> bool:
        return a.value == 0

    def inv(self, a: ModElem) -> ModElem:
        return mod_inverse(a)

    def exact_div(self, a: ModElem, b: ModElem) -> ModElem:
        return a * mod_inverse(b)

    def __eq__(self, other):
        return isinstance(other, Zmod) and other.m == self.m

    def __hash__(self):
        return hash(("Zmod", self.m))

    def __repr__(self):
        return f"Zmod({self.m})"


class NFElem:
    """Element of Q[T]/q(T), stored as the coefficient vector of the
    degree < s representative (s = deg q)."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field: "NumberField"):
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > field.degree:
            vec = field._reduce_vec(vec)
        vec += [Fraction(0)] * (field.degree - len(vec))
        self.coeffs = tuple(vec)
        self.field = field

    def _check(self, other: "NFElem") -> None:
        if self.field is not other.field and self.field != other.field:
            raise ValueError("elements of different number fields")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, NFElem):
            return NotImplemented
        self._check(other)
        return NFElem([a + b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, NFElem):
            return NotImplemented
        self._check(other)
        return NFElem([a - b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElem([a * other for a in self.coeffs], self.field)
        if not isinstance(other, NFElem):
            return NotImplemented
        self._check(other)
        s = self.field.degree
        prod = [Fraction(0)] * (2 * s - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return NFElem(self.field._reduce_vec(prod), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return NFElem([-a for a in self.coeffs], self.field)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return NFElem([a / other for a in self.coeffs], self.field)
        if not isinstance(other, NFElem):
            return NotImplemented
        return self * nf_inverse(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        return (
            isinstance(other, NFElem)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, id(self.field)))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*T")
            else:
                parts.append(f"{c}*T^{i}")
        return " + ".join(parts) if parts else "0"


class NumberField:
    """Q[T]/q(T) for q irreducible over Q.

    Irreducibility of q is verified on construction (a reducible q would
    silently corrupt every later factorization step).
    """

    is_field = True
    char = 0

    def __init__(self, q_coeffs, check: bool = True):
        vec = [Fraction(c) for c in q_coeffs]
        while vec and vec[-1] == 0:
            vec.pop()
        if len(vec) < 2:
            raise ValueError("defining polynomial must have degree >= 1")
        self.q_coeffs = tuple(vec)
        self.degree = len(vec) - 1
        lc = vec[-1]
        # monic version used for reduction mod q
        self._q_monic = tuple(c / lc for c in vec)
        if check:
            from .numfield import is_irreducible_q  # deferred: numfield builds on poly
            from .poly import UniPoly

            if not is_irreducible_q(UniPoly(self.q_coeffs, QQ)):
                raise ValueError("defining polynomial is reducible over Q")

    def _reduce_vec(self, vec) -> list[Fraction]:
        # remainder of division by the monic q(T)
        s = self.degree
        work = [Fraction(c) for c in vec]
        for i in range(len(work) - 1, s - 1, -1):
            c = work[i]
            if c:
                work[i] = Fraction(0)
                for j in range(s):
                    work[i - s + j] -= c * self._q_monic[j]
        return work[:s]

    def gen(self) -> NFElem:
        """The class of T (a root of q in this field)."""
        if self.degree == 1:
            return self.from_rational(-self._q_monic[0])
        vec = [Fraction(0)] * self.degree
        vec[1] = Fraction(1)
        return NFElem(vec, self)

    def from_rational(self, c) -> NFElem:
        return NFElem([Fraction(c)] + [Fraction(0)] * (self.degree - 1), self)

    def zero(self):
        return self.from_rational(0)

    def one(self):
        return self.from_rational(1)

    def from_int(self, n: int):
        return self.from_rational(n)

    def is_zero(self, a: NFElem) -> bool:
        return not any(a.coeffs)

    def inv(self, a: NFElem) -> NFElem:
        return nf_inverse(a)

    def exact_div(self, a: NFElem, b: NFElem) -> NFElem:
        return a * nf_inverse(b)

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.q_coeffs == self.q_coeffs

    def __hash__(self):
        return hash(("NumberField", self.q_coeffs))

    def __repr__(self):
        return f"NumberField(q={list(self.q_coeffs)})"


def nf_reduce(field: NumberField, coeffs) -> NFElem:
    """Map a rational polynomial in T (coefficient vector, ascending) to its
    canonical representative of degree < deg q."""
    return NFElem(field._reduce_vec([Fraction(c) for c in coeffs]), field)


def nf_inverse(a: NFElem) -> NFElem:
    """Inverse in Q[T]/q(T) via the extended Euclidean algorithm with q."""
    if not a:
        raise DivisionByZero("inverse of 0 in number field")
    field = a.field
    # extended Euclid on coefficient vectors over Q
    r0 = list(field._q_monic)
    r1 = list(a.coeffs)
    while r1 and r1[-1] == 0:
        r1.pop()
    s0 = [Fraction(0)]
    s1 = [Fraction(1)]

    def deg(v):
        return len(v) - 1

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    while deg(r1) > 0:
        # divide r0 by r1
        q = [Fraction(0)] * (deg(r0) - deg(r1) + 1)
        rem = list(r0)
        for i in range(deg(r0) - deg(r1), -1, -1):
            c = rem[i + deg(r1)] / r1[-1]
            q[i] = c
            if c:
                for j, b in enumerate(r1):
                    rem[i + j] -= c * b
        rem = trim(rem)
        if not rem:
            # gcd(a, q) has positive degree: q reducible, should not happen
            raise NotInvertible("element shares a factor with q(T)")
        # s update: s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, c in enumerate(q):
            if c:
                for j, b in enumerate(s1):
                    prod[i + j] += c * b
        new_s = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            new_s[i] += c
        for i, c in enumerate(prod):
            new_s[i] -= c
        r0, r1 = r1, rem
        s0, s1 = s1, trim(new_s)
    # r1 is a nonzero constant: a * s1 = r1 mod q
    c = r1[0]
    return NFElem([x / c for x in s1], field)
