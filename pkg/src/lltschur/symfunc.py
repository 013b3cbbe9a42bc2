"""Symmetric and quasisymmetric function vectors over Z[q, q^-1].

Schur is the canonical basis; monomial is only a conversion pivot and the
fundamental basis is where LLT enumeration lands.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .combinat import DescentSet, EMPTY, Partition, dominates, partitions
from .laurent import ONE, ZERO, LaurentPoly, Scalar


class NotSymmetricError(ValueError):
    """A quasisymmetric input is not symmetric."""


class _Vector:
    """Finite linear combination of basis elements indexed by ``key_type``."""

    basis = ""
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        d = {}
        if terms:
            for k, c in terms.items():
                k = self._key(k)
                c = LaurentPoly.coerce(c)
                if c:
                    d[k] = d[k] + c if k in d else c
                    if not d[k]:
                        del d[k]
        self._terms = d

    def _key(self, k):
        raise NotImplementedError

    @classmethod
    def _wrap(cls, n: int, d: dict):
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = d
        return obj

    @classmethod
    def zero(cls, n: int):
        return cls._wrap(n, {})

    def _sort_key(self, k):
        return k

    def keys(self) -> list:
        return sorted(self._terms, key=self._sort_key)

    def items(self) -> list:
        return [(k, self._terms[k]) for k in self.keys()]

    def coeff(self, k) -> LaurentPoly:
        return self._terms.get(self._key(k), ZERO)

    __getitem__ = coeff

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self.keys())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if self.n != other.n and self._terms and other._terms:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check_compatible(other)
        n = self.n if self._terms else other.n
        d = dict(self._terms)
        for k, c in other._terms.items():
            if k in d:
                v = d[k] + c
                if v:
                    d[k] = v
                else:
                    del d[k]
            else:
                d[k] = c
        return self._wrap(n, d)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar: Scalar):
        if not isinstance(scalar, (int, LaurentPoly)):
            return NotImplemented
        if not scalar:
            return self._wrap(self.n, {})
        d = {}
        for k, c in self._terms.items():
            v = c * scalar
            if v:
                d[k] = v
        return self._wrap(self.n, d)

    __rmul__ = __mul__

    def map_coeffs(self, fn):
        d = {}
        for k, c in self._terms.items():
            v = fn(c)
            if v:
                d[k] = v
        return self._wrap(self.n, d)

    def shift(self, k: int):
        """Multiply every coefficient by q^k."""
        return self.map_coeffs(lambda c: c.shift(k))

    def subs_qinv(self):
        return self.map_coeffs(lambda c: c.subs_qinv())

    def specialize(self, value: int):
        return self.map_coeffs(lambda c: c.specialize(value))

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        if self._terms != other._terms:
            return False
        return self.n == other.n or not self._terms

    __hash__ = None

    def _index_json(self, k):
        return list(k)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "terms": [{"index": self._index_json(k), "coeff": c.to_json()} for k, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping):
        if data.get("basis") != cls.basis:
            raise ValueError(f"expected basis {cls.basis!r}, got {data.get('basis')!r}")
        n = int(data["n"])
        terms = {}
        for t in data["terms"]:
            terms[cls._index_from_json(n, t["index"])] = LaurentPoly.from_json(t["coeff"])
        return cls(n, terms)

    @classmethod
    def _index_from_json(cls, n, index):
        return Partition(index)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.n}, {format_expansion(self, 's')})"


class SchurVector(_Vector):
    """Homogeneous symmetric function of degree n in the Schur basis."""

    basis = "schur"
    __slots__ = ()

    def _key(self, k):
        k = Partition(k)
        if k.size != self.n:
            raise ValueError(f"partition {k} has size {k.size}, expected {self.n}")
        return k

    def support(self) -> list[Partition]:
        return self.keys()


class MonomialVector(SchurVector):
    """Monomial symmetric basis; used only as a conversion pivot."""

    basis = "monomial"
    __slots__ = ()


class TwoSchurVector(SchurVector):
    """Coordinates in the 2-Schur basis, indexed by partitions 2^a 1^b."""

    basis = "two-schur"
    __slots__ = ()

    def _key(self, k):
        k = SchurVector._key(self, k)
        if not k.is_bounded(2):
            raise ValueError(f"{k} is not 2-bounded")
        return k


class FundVector(_Vector):
    """Quasisymmetric function of degree n in Gessel's fundamental basis."""

    basis = "fundamental"
    __slots__ = ()

    def _key(self, k):
        if isinstance(k, DescentSet):
            if k.n != self.n:
                raise ValueError(f"descent set for n={k.n}, expected {self.n}")
            return k
        return DescentSet(self.n, k)

    def _sort_key(self, k):
        return (len(k), sorted(k))

    def _index_json(self, k):
        return sorted(k)

    @classmethod
    def _index_from_json(cls, n, index):
        return DescentSet(n, index)


def format_expansion(f: _Vector, symbol: str | None = None) -> str:
    """Human readable form, e.g. ``k[1,1] + (q^2 + q)*k[2]``.

    Terms appear in reverse canonical order (smallest in dominance first).
    """
    if symbol is None:
        symbol = {"schur": "s", "monomial": "m", "two-schur": "k", "fundamental": "F"}[f.basis]
    if f.is_zero():
        return "0"
    out = []
    for k, c in reversed(f.items()):
        idx = symbol + "[" + ",".join(str(x) for x in (sorted(k) if isinstance(k, DescentSet) else k)) + "]"
        if c == 1:
            body, sign = idx, "+"
        elif c == -1:
            body, sign = idx, "-"
        else:
            cs = str(c)
            if c.needs_parens():
                body, sign = f"({cs})*{idx}", "+"
            elif cs.startswith("-"):
                body, sign = f"{cs[1:]}*{idx}", "-"
            else:
                body, sign = f"{cs}*{idx}", "+"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


# -- basic elements -------------------------------------------------------

def schur(lam: Sequence[int], coeff: Scalar = 1) -> SchurVector:
    lam = Partition(lam)
    return SchurVector(lam.size, {lam: coeff})


def one() -> SchurVector:
    return SchurVector._wrap(0, {EMPTY: ONE})


def h(r: int) -> SchurVector:
    if r < 0:
        return SchurVector.zero(r)
    return schur([r]) if r else one()


def e(r: int) -> SchurVector:
    if r < 0:
        return SchurVector.zero(r)
    return schur([1] * r) if r else one()


# -- strips ---------------------------------------------------------------

@lru_cache(maxsize=None)
def add_horizontal_strip(lam: Partition, r: int) -> tuple[Partition, ...]:
    """All mu with mu/lam a horizontal strip of size r."""
    if r < 0:
        return ()
    lam_ext = list(lam) + [0]
    out = []

    def rec(i, remaining, prefix):
        if i == len(lam_ext):
            if remaining == 0:
                out.append(Partition(prefix))
            return
        upper = lam_ext[i] + remaining if i == 0 else min(lam_ext[i - 1], lam_ext[i] + remaining)
        for v in range(lam_ext[i], upper + 1):
            rec(i + 1, remaining - (v - lam_ext[i]), prefix + [v])

    rec(0, r, [])
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def remove_horizontal_strip(lam: Partition, r: int) -> tuple[Partition, ...]:
    """All mu with lam/mu a horizontal strip of size r."""
    if r < 0 or r > lam.size:
        return ()
    lam_ext = list(lam) + [0]
    out = []

    def rec(i, remaining, prefix):
        if i == len(lam):
            if remaining == 0:
                out.append(Partition(prefix))
            return
        lower = lam_ext[i + 1]
        for v in range(lam[i], lower - 1, -1):
            taken = lam[i] - v
            if taken > remaining:
                break
            rec(i + 1, remaining - taken, prefix + [v])

    rec(0, r, [])
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def add_vertical_strip(lam: Partition, r: int) -> tuple[Partition, ...]:
    return tuple(sorted(mu.conjugate() for mu in add_horizontal_strip(lam.conjugate(), r)))


@lru_cache(maxsize=None)
def remove_vertical_strip(lam: Partition, r: int) -> tuple[Partition, ...]:
    return tuple(sorted(mu.conjugate() for mu in remove_horizontal_strip(lam.conjugate(), r)))


# -- Pieri and skewing ----------------------------------------------------

def _strip_apply(f: SchurVector, r: int, strips, degree: int) -> SchurVector:
    d: dict = {}
    for lam, c in f._terms.items():
        for mu in strips(lam, r):
            if mu in d:
                v = d[mu] + c
                if v:
                    d[mu] = v
                else:
                    del d[mu]
            else:
                d[mu] = c
    return SchurVector._wrap(degree, d)


def pieri_h_multiply(f: SchurVector, r: int) -> SchurVector:
    """h_r * f."""
    if r < 0:
        return SchurVector.zero(f.n + r)
    return _strip_apply(f, r, add_horizontal_strip, f.n + r)


def pieri_e_multiply(f: SchurVector, r: int) -> SchurVector:
    """e_r * f."""
    if r < 0:
        return SchurVector.zero(f.n + r)
    return _strip_apply(f, r, add_vertical_strip, f.n + r)


def h_perp(f: SchurVector, r: int) -> SchurVector:
    """Adjoint of multiplication by h_r."""
    if r < 0:
        return SchurVector.zero(f.n - r)
    return _strip_apply(f, r, remove_horizontal_strip, f.n - r)


def e_perp(f: SchurVector, r: int) -> SchurVector:
    """Adjoint of multiplication by e_r."""
    if r < 0:
        return SchurVector.zero(f.n - r)
    return _strip_apply(f, r, remove_vertical_strip, f.n - r)


def omega(f: SchurVector) -> SchurVector:
    """s_lam -> s_lam' with coefficients untouched."""
    if not isinstance(f, SchurVector) or type(f) is not SchurVector:
        raise TypeError("omega is defined on Schur expansions only")
    return SchurVector._wrap(f.n, {lam.conjugate(): c for lam, c in f._terms.items()})


# -- products via Jacobi-Trudi -------------------------------------------

def _det_terms(matrix_index) -> list[tuple[int, tuple[int, ...]]]:
    """Expand det(x_{a_ij}) over index matrix; entries < 0 vanish, 0 is unity."""
    size = len(matrix_index)
    out = []

    def rec(row, used, sign_perm, picked):
        if row == size:
            out.append((sign_perm, tuple(picked)))
            return
        for col in range(size):
            if used >> col & 1:
                continue
            idx = matrix_index[row][col]
            if idx < 0:
                continue
            # sign: count used columns greater than col (inversions contributed)
            inv = bin(used >> (col + 1)).count("1")
            rec(row + 1, used | (1 << col), -sign_perm if inv % 2 else sign_perm, picked + [idx])

    rec(0, 0, 1, [])
    return out


@lru_cache(maxsize=None)
def _jacobi_trudi(outer: Partition, inner: Partition = EMPTY) -> tuple[str, list]:
    """Choose the h- or e-form of Jacobi-Trudi for s_{outer/inner}."""
    lo, li = outer, inner
    co, ci = outer.conjugate(), inner.conjugate()
    if len(co) < len(lo):
        kind, a, b = "e", co, ci
    else:
        kind, a, b = "h", lo, li
    size = len(a)
    idx = [[a.part(i + 1) - b.part(j + 1) - (i + 1) + (j + 1) for j in range(size)] for i in range(size)]
    return kind, _det_terms(idx)


def schur_times(lam: Sequence[int], g: SchurVector) -> SchurVector:
    """s_lam * g."""
    return skew_schur_times(Partition(lam), EMPTY, g)


def skew_schur_times(outer: Partition, inner: Partition, g: SchurVector) -> SchurVector:
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        return SchurVector.zero(g.n + outer.size - inner.size)
    kind, terms = _jacobi_trudi(outer, inner)
    mult = pieri_h_multiply if kind == "h" else pieri_e_multiply
    total = SchurVector.zero(g.n + outer.size - inner.size)
    cache: dict = {}
    for sign, idxs in terms:
        key = tuple(sorted(idxs))
        if key not in cache:
            acc = g
            for r in key:
                acc = mult(acc, r)
            cache[key] = acc
        total = total + (cache[key] if sign > 0 else -cache[key])
    return total


def skew_schur(outer: Sequence[int], inner: Sequence[int] = ()) -> SchurVector:
    """Schur expansion of s_{outer/inner} by Jacobi-Trudi."""
    return skew_schur_times(Partition(outer), Partition(inner), one())


def multiply(f: SchurVector, g: SchurVector) -> SchurVector:
    total = SchurVector.zero(f.n + g.n)
    for lam, c in f.items():
        total = total + schur_times(lam, g) * c
    return total


# -- Kostka numbers and basis changes -------------------------------------

@lru_cache(maxsize=None)
def _kostka(lam: Partition, content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not lam else 0
    last = content[-1]
    return sum(_kostka(nu, content[:-1]) for nu in remove_horizontal_strip(lam, last))


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of SSYT of shape lam and content mu."""
    lam = Partition(lam)
    mu = tuple(int(x) for x in mu)
    if lam.size != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| = {lam.size}, |content| = {sum(mu)}")
    return _kostka(lam, tuple(x for x in mu if x))


@lru_cache(maxsize=None)
def _schur_in_monomial(lam: Partition) -> dict:
    return {mu: k for mu in partitions(lam.size) if (k := _kostka(lam, tuple(mu)))}


def schur_to_monomial(f: SchurVector) -> MonomialVector:
    d: dict = {}
    for lam, c in f._terms.items():
        for mu, k in _schur_in_monomial(lam).items():
            d[mu] = d.get(mu, ZERO) + c * k
    return MonomialVector(f.n, d)


def monomial_to_schur(f: MonomialVector) -> SchurVector:
    """Unitriangular elimination against the Kostka matrix."""
    residual = dict(f._terms)
    out: dict = {}
    while residual:
        lam = min(residual)  # lexicographically largest remaining
        c = residual.pop(lam)
        out[lam] = c
        for mu, k in _schur_in_monomial(lam).items():
            if mu == lam:
                assert k == 1
                continue
            assert lam < mu and dominates(lam, mu), "Kostka matrix not unitriangular"
            v = residual.get(mu, ZERO) - c * k
            if v:
                residual[mu] = v
            else:
                residual.pop(mu, None)
    return SchurVector._wrap(f.n, out)


def _mask_of_composition(parts: Iterable[int]) -> int:
    mask, s = 0, 0
    parts = list(parts)
    for p in parts[:-1]:
        s += p
        mask |= 1 << (s - 1)
    return mask


def _composition_of_mask(n: int, mask: int) -> tuple[int, ...]:
    out, last = [], 0
    for i in range(n - 1):
        if mask >> i & 1:
            out.append(i + 1 - last)
            last = i + 1
    out.append(n - last)
    return tuple(out)


def fund_to_monomial(f: FundVector, check: bool = True) -> MonomialVector:
    """Refine F_S = sum_{T >= S} M_T and read off m_mu = M_mu.

    With ``check`` every composition's coefficient is compared with its
    sorted rearrangement; a mismatch raises NotSymmetricError.
    """
    n = f.n
    if n == 0:
        return MonomialVector(0, {EMPTY: f.coeff(DescentSet(0))})
    bits = n - 1
    size = 1 << bits
    g = [None] * size
    for s, c in f._terms.items():
        g[s.to_mask()] = dict(c._terms)
    # subset-sum (zeta) transform
    for b in range(bits):
        bit = 1 << b
        for t in range(size):
            if t & bit and g[t ^ bit]:
                src = g[t ^ bit]
                dst = g[t]
                if dst is None:
                    g[t] = dict(src)
                else:
                    for ex, cf in src.items():
                        dst[ex] = dst.get(ex, 0) + cf
    coeffs = [LaurentPoly(x) if x else ZERO for x in g]
    out = {}
    for mu in partitions(n):
        c = coeffs[_mask_of_composition(mu)]
        if c:
            out[mu] = c
    if check:
        for t in range(size):
            mu = Partition(sorted(_composition_of_mask(n, t), reverse=True))
            if coeffs[t] != out.get(mu, ZERO):
                raise NotSymmetricError(
                    f"coefficient of M{_composition_of_mask(n, t)} differs from M{tuple(mu)}"
                )
    return MonomialVector(n, out)


def fund_to_schur(f: FundVector) -> SchurVector:
    return monomial_to_schur(fund_to_monomial(f))


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All SYT of shape lam as row tuples."""
    n = lam.size
    out = []

    def rec(rows, k):
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(rows, k + 1)
                rows[i].pop()

    rec([[] for _ in lam], 1)
    return tuple(out)


def tableau_descents(T) -> set[int]:
    """{i : i+1 lies in a strictly lower row than i}."""
    row_of = {v: r for r, row in enumerate(T) for v in row}
    return {i for i in range(1, len(row_of)) if row_of[i + 1] > row_of[i]}


def schur_to_fund(f: SchurVector) -> FundVector:
    d: dict = {}
    for lam, c in f._terms.items():
        for T in standard_tableaux(lam):
            key = DescentSet(f.n, tableau_descents(T))
            d[key] = d.get(key, ZERO) + c
    return FundVector(f.n, d)


def specialize_variables(f: SchurVector, nvars: int) -> dict[tuple[int, ...], LaurentPoly]:
    """Expand f in x_1..x_N; keys are exponent vectors of length N."""
    m = schur_to_monomial(f) if type(f) is SchurVector else f
    out: dict = {}
    for mu, c in m._terms.items():
        if len(mu) > nvars:
            continue
        padded = tuple(mu) + (0,) * (nvars - len(mu))
        for expv in set(permutations(padded)):
            out[expv] = out.get(expv, ZERO) + c
    return {k: v for k, v in out.items() if v}
