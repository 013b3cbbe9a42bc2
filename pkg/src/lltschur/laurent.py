"""Integer Laurent polynomials in a single variable ``q``."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Immutable element of Z[q, q^-1].

    Stored as a map exponent -> coefficient with zero coefficients dropped,
    so structural equality is polynomial equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[None, int, Mapping[int, int], "LaurentPoly"] = None):
        if terms is None:
            d = {}
        elif isinstance(terms, LaurentPoly):
            d = terms._terms
        elif isinstance(terms, int):
            d = {0: terms} if terms else {}
        else:
            d = {}
            for e, c in terms.items():
                c = int(c)
                if c:
                    d[int(e)] = c
        self._terms = d
        self._hash = None

    @classmethod
    def _wrap(cls, d: dict) -> "LaurentPoly":
        # d must already be free of zero coefficients
        obj = cls.__new__(cls)
        obj._terms = d
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({exp: coeff} if coeff else {})

    @classmethod
    def coerce(cls, x: Scalar) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __getitem__(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def at_one(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, x):
        """Evaluate at ``x``; negative exponents need an invertible ``x``."""
        total = 0
        for e, c in self._terms.items():
            total += c * (x ** abs(e) if e < 0 and x in (1, -1) else x ** e)
        return total

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        d = dict(self._terms)
        for e, c in other._terms.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return LaurentPoly._wrap(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._wrap({ea + e: ca * c for e, c in b.items()})
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._wrap({eb + e: cb * c for e, c in a.items()})
        d: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                d[e] = d.get(e, 0) + ca * cb
        return LaurentPoly._wrap({e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if self.is_monomial():
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._wrap({e * k: c ** (-k)})
            raise ValueError("only unit monomials have negative powers")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()})

    def subs_qinv(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        return LaurentPoly._wrap({-e: c for e, c in self._terms.items()})

    def specialize(self, value: int) -> "LaurentPoly":
        """Substitute an integer for q, returning a constant.

        Only 1 and -1 are allowed when negative exponents are present.
        """
        if self._terms and min(self._terms) < 0 and value not in (1, -1):
            raise ValueError("cannot specialize negative powers at a non-unit")
        return LaurentPoly(self.evaluate(value))

    def divmod_q_minus_one(self) -> tuple["LaurentPoly", "LaurentPoly"]:
        """Divide by (q - 1): f = quotient (q - 1) + r q^lo, with r = f(1) and lo the lowest exponent."""
        if not self._terms:
            return ZERO, ZERO
        lo, hi = min(self._terms), max(self._terms)
        # synthetic division from the top degree down
        quot: dict = {}
        carry = 0
        for e in range(hi, lo - 1, -1):
            carry = self._terms.get(e, 0) + carry
            if e == lo:
                break
            if carry:
                quot[e - 1] = carry
        remainder = LaurentPoly.monomial(lo, carry) if carry else ZERO
        return LaurentPoly._wrap(quot), remainder

    def exact_div_q_minus_one(self) -> "LaurentPoly":
        quot, rem = self.divmod_q_minus_one()
        if rem:
            raise ArithmeticError(f"{self} is not divisible by q - 1")
        return quot

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- formatting / serialization ---------------------------------------
    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if a == 1 else f"{a}{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def needs_parens(self) -> bool:
        return len(self._terms) > 1

    def to_json(self) -> list:
        return [[e, str(c)] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data})


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
q = LaurentPoly.monomial(1)


def qpow(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k)
