"""Dense univariate polynomials in q with exact integer coefficients.

The coefficient sequence is stored ascending: index i holds the coefficient
of q**i.  The stored form is canonical -- no trailing zeros -- so the zero
polynomial is the empty tuple and its degree is None.  Instances are
immutable, hashable, and every operation returns a canonical result.

A polynomial is called q-nonnegative when every coefficient is >= 0; the
partial order "p dominates r" used throughout the package is expressed as
``(p - r).is_q_nonnegative()``.
"""

from __future__ import annotations

from typing import Iterable, Union


class QPoly:
    """An integer-coefficient polynomial in the single variable q."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient {c!r} is not an int")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return ZERO

    @classmethod
    def one(cls) -> "QPoly":
        return ONE

    @classmethod
    def q(cls) -> "QPoly":
        return Q

    @classmethod
    def constant(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def from_json(cls, data: object) -> "QPoly":
        """Build from the JSON encoding: a list of ascending int coefficients."""
        if not isinstance(data, list):
            raise TypeError(f"expected a list of ints, got {data!r}")
        return cls(data)

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_q_nonnegative(self) -> bool:
        """True when every coefficient is nonnegative."""
        return all(c >= 0 for c in self.coeffs)

    def eval_int(self, x: int) -> int:
        """Evaluate at an integer point by Horner's rule (exact)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other: Union["QPoly", int]) -> "QPoly | None":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QPoly((other,))
        return None

    def __add__(self, other: Union["QPoly", int]) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["QPoly", int]) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Union["QPoly", int]) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Union["QPoly", int]) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be a nonnegative int, got {n!r}")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Divide exactly by ``other`` in the integer polynomial ring.

        Raises ValueError when the quotient does not exist with integer
        coefficients (nonzero remainder or a leading-coefficient mismatch).
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        lead = div[-1]
        if len(rem) - 1 < dd:
            raise ValueError(f"{self} is not divisible by {other}")
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lead:
                raise ValueError(f"{self} is not divisible by {other}")
            f = c // lead
            quot[i - dd] = f
            for j in range(dd + 1):
                rem[i - dd + j] -= f * div[j]
        if any(rem):
            raise ValueError(f"{self} is not divisible by {other}")
        return QPoly(quot)

    # -- comparison / rendering ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        """Canonical ascending rendering, e.g. ``1+4q+q^2`` or ``-1+q``."""
        if not self.coeffs:
            return "0"
        out = ""
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += ("-" if c < 0 else "+") + body
        return out


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))
