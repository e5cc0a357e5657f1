"""Integer polynomials in q and exact arithmetic in Z[q]/Phi_m(q)."""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "QPoly",
    "NonExactDivision",
    "NonIntegerValue",
    "CyclotomicInteger",
    "cyclotomic",
    "eval_at_root",
]


class NonExactDivision(ArithmeticError):
    pass


class NonIntegerValue(ArithmeticError):
    """A root-of-unity evaluation that does not land in Z."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPoly:
    """Polynomial with integer coefficients; ``coeffs[j]`` multiplies ``q**j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls([c])

    @classmethod
    def monomial(cls, power: int, coef: int = 1) -> "QPoly":
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [coef])

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly([other])
        return NotImplemented

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return QPoly((a[j] if j < len(a) else 0) + (b[j] if j < len(b) else 0) for j in range(size))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return (-self) + other

    def __mul__(self, other) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        result = QPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division; raises when a quotient coefficient would not be an integer."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dlen = len(other.coeffs)
        quot = [0] * max(len(rem) - dlen + 1, 0)
        for j in range(len(rem) - dlen, -1, -1):
            c = rem[j + dlen - 1]
            if c == 0:
                continue
            if c % lead:
                raise NonExactDivision(f"leading coefficient {lead} does not divide {c}")
            t = c // lead
            quot[j] = t
            for idx, d in enumerate(other.coeffs):
                rem[j + idx] -= t * d
        return QPoly(quot), QPoly(rem)

    def __floordiv__(self, other) -> "QPoly":
        """Exact division."""
        other = self._coerce(other)
        q, r = self.divmod(other)
        if r:
            raise NonExactDivision(f"{self} is not divisible by {other}")
        return q

    def __mod__(self, other) -> "QPoly":
        other = self._coerce(other)
        return self.divmod(other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_power(self, d: int) -> "QPoly":
        """``p(q**d)``."""
        if d == 0:
            return QPoly([self(1)])
        out = [0] * (d * max(self.degree, 0) + 1)
        for j, c in enumerate(self.coeffs):
            out[j * d] = c
        return QPoly(out)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if j == 0 else "q" if j == 1 else f"q^{j}"
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            parts.append(("-" if c < 0 else "+") + " " + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> QPoly:
    """``Phi_m(q)``, by exact division of ``q^m - 1`` by ``Phi_d`` for proper divisors d."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    p = QPoly([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            p = p // cyclotomic(d)
    return p


class CyclotomicInteger:
    """An element of ``Z[q]/Phi_m(q)``, i.e. of ``Z[zeta_m]``."""

    __slots__ = ("m", "residue")

    def __init__(self, m: int, poly: QPoly | Sequence[int]):
        if not isinstance(poly, QPoly):
            poly = QPoly(poly)
        self.m = m
        self.residue = poly % cyclotomic(m)

    def _same(self, other: "CyclotomicInteger"):
        if other.m != self.m:
            raise ValueError("different cyclotomic orders")

    def __add__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._same(other)
        return CyclotomicInteger(self.m, self.residue + other.residue)

    def __sub__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._same(other)
        return CyclotomicInteger(self.m, self.residue - other.residue)

    def __mul__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._same(other)
        return CyclotomicInteger(self.m, self.residue * other.residue)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.residue == QPoly([other])
        if isinstance(other, CyclotomicInteger):
            return self.m == other.m and self.residue == other.residue
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.residue))

    def is_integer(self) -> bool:
        return self.residue.degree <= 0

    def to_int(self) -> int:
        if not self.is_integer():
            raise NonIntegerValue(f"{self.residue} (mod Phi_{self.m}) is not an integer")
        return self.residue.coeffs[0] if self.residue.coeffs else 0

    def __repr__(self) -> str:
        return f"CyclotomicInteger(m={self.m}, {self.residue})"


def eval_at_root(p: QPoly, order: int, power: int) -> int:
    """``p(zeta**power)`` for a primitive ``order``-th root of unity ``zeta``.

    ``zeta**power`` is a primitive e-th root with ``e = order / gcd(order, power)``;
    the value is read off the residue of ``p(q**(power/g))`` modulo ``Phi_e``.
    """
    if order < 1 or power < 0:
        raise ValueError("need order >= 1 and power >= 0")
    g = gcd(order, power)
    e = order // g
    reduced_power = power // g if power else 0
    sub = p.substitute_power(reduced_power) if e > 1 else p
    return CyclotomicInteger(e, sub).to_int()
