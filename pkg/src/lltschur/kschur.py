"""Vertex operators, generalized Hall-Littlewood polynomials and 2-Schur functions."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .combinat import Partition, two_bounded_partitions
from .laurent import ZERO, LaurentPoly
from .symfunc import (
    SchurVector,
    TwoSchurVector,
    e_perp,
    h_perp,
    one,
    pieri_h_multiply,
    schur,
)

SUPPORTED_PIECES = (Partition([1]), Partition([2]), Partition([1, 1]))


class NotInSpanError(ValueError):
    """A symmetric function has no expansion in the requested basis."""


def _linear(fn):
    """Extend a map on single Schur functions (cached per index) linearly."""

    cache: dict = {}

    def apply(a: int, f: SchurVector) -> SchurVector:
        total = SchurVector.zero(f.n + a)
        for lam, c in f.items():
            key = (a, lam)
            if key not in cache:
                cache[key] = fn(a, lam)
            total = total + cache[key] * c
        return total

    apply.cache = cache
    return apply


def _creation_S_single(a: int, lam: Partition) -> SchurVector:
    f = schur(lam)
    total = SchurVector.zero(f.n + a)
    for r in range(f.n + 1):
        if a + r < 0:
            continue
        g = e_perp(f, r)
        if g.is_zero():
            continue
        term = pieri_h_multiply(g, a + r)
        total = total + (term if r % 2 == 0 else -term)
    return total


_creation_S = _linear(_creation_S_single)


def creation_S(a: int, f: SchurVector) -> SchurVector:
    """sum_r (-1)^r h_{a+r} e_r^perp f."""
    return _creation_S(a, f)


def _jing_B_single(a: int, lam: Partition) -> SchurVector:
    f = schur(lam)
    total = SchurVector.zero(f.n + a)
    for j in range(f.n + 1):
        hj = h_perp(f, j)
        if hj.is_zero():
            continue
        for i in range(hj.n + 1):
            if a + i + j < 0:
                continue
            g = e_perp(hj, i)
            if g.is_zero():
                continue
            term = pieri_h_multiply(g, a + i + j) * LaurentPoly.monomial(j, -1 if i % 2 else 1)
            total = total + term
    return total


_jing_B = _linear(_jing_B_single)


def jing_B(a: int, f: SchurVector) -> SchurVector:
    """sum_{i,j} (-1)^i q^j h_{a+i+j} e_i^perp h_j^perp f."""
    return _jing_B(a, f)


@lru_cache(maxsize=None)
def _hall_littlewood(lam: Partition) -> SchurVector:
    f = one()
    for part in reversed(lam):
        f = jing_B(part, f)
    return f


def hall_littlewood(lam: Sequence[int]) -> SchurVector:
    """H_lam = B_{lam_1} ... B_{lam_l}(1)."""
    return _hall_littlewood(Partition(lam))


def rect_B(R: Sequence[int], f: SchurVector) -> SchurVector:
    """B_R for the 2-split pieces (1), (2), (1,1).

    B_(1,1) = B_1 B_1 - q B_2 B_0, which gives s_11 on 1 for every q.
    """
    R = Partition(R)
    if R == (1,) or R == (2,):
        return jing_B(R[0], f)
    if R == (1, 1):
        return jing_B(1, jing_B(1, f)) - jing_B(2, jing_B(0, f)).shift(1)
    raise ValueError(f"unsupported operator shape {R}; only (1), (2), (1,1)")


def k_split(lam: Sequence[int], k: int) -> list[Partition]:
    """Greedy split into pieces of main hook length k (the last may be shorter)."""
    lam = Partition(lam)
    if not lam.is_bounded(k):
        raise ValueError(f"{lam} is not {k}-bounded")
    pieces = []
    rest = list(lam)
    while rest:
        take = 1
        while take < len(rest) and rest[0] + take <= k:
            take += 1
        pieces.append(Partition(rest[:take]))
        rest = rest[take:]
    return pieces


def gen_HL(pieces: Sequence[Sequence[int]]) -> SchurVector:
    """B_{piece_0} ... B_{piece_last}(1)."""
    f = one()
    for piece in reversed([Partition(p) for p in pieces]):
        f = rect_B(piece, f)
    return f


@lru_cache(maxsize=None)
def _kschur2(lam: Partition) -> SchurVector:
    return gen_HL(k_split(lam, 2))


def kschur2(lam: Sequence[int]) -> SchurVector:
    """2-Schur function as the generalized Hall-Littlewood polynomial of its 2-split."""
    lam = Partition(lam)
    if not lam.is_bounded(2):
        raise ValueError(f"{lam} is not 2-bounded")
    return _kschur2(lam)


def two_schur_expand(f: SchurVector) -> TwoSchurVector:
    """Coordinates of f in the 2-Schur basis.

    kappa_lam = s_lam + (terms lexicographically above lam), so peeling off the
    lexicographically smallest Schur index is a triangular solve.
    """
    residual = dict(f._terms)
    out: dict = {}
    while residual:
        lam = max(residual)  # lexicographically smallest
        if not lam.is_bounded(2):
            raise NotInSpanError(f"s{tuple(lam)} survives elimination; not in the 2-Schur span")
        c = residual.pop(lam)
        out[lam] = c
        for mu, v in kschur2(lam).items():
            if mu == lam:
                if v != 1:
                    raise NotInSpanError(f"leading coefficient of kappa{tuple(lam)} is {v}")
                continue
            if not mu < lam:
                raise NotInSpanError(f"kappa{tuple(lam)} is not unitriangular at s{tuple(mu)}")
            new = residual.get(mu, ZERO) - c * v
            if new:
                residual[mu] = new
            else:
                residual.pop(mu, None)
    return TwoSchurVector._wrap(f.n, out)


def from_two_schur(coords: TwoSchurVector) -> SchurVector:
    total = SchurVector.zero(coords.n)
    for lam, c in coords.items():
        total = total + kschur2(lam) * c
    return total


class SplitBasis:
    """The 2-split polynomials C_lam of degree n with their Schur expansions."""

    def __init__(self, n: int):
        self.n = n
        self.partitions = two_bounded_partitions(n)
        self.vectors = {lam: gen_HL(k_split(lam, 2)) for lam in self.partitions}
        self._check_unitriangular()

    def _check_unitriangular(self):
        for lam, v in self.vectors.items():
            if v.coeff(lam) != 1 or any(not (mu <= lam) for mu in v.support()):
                raise NotInSpanError(f"split basis of degree {self.n} is singular at {lam}")

    def is_unitriangular(self) -> bool:
        try:
            self._check_unitriangular()
        except NotInSpanError:
            return False
        return True

    def matrix(self) -> list[list[LaurentPoly]]:
        """Rows are basis elements, columns the same partitions as Schur indices."""
        return [[self.vectors[a].coeff(b) for b in self.partitions] for a in self.partitions]

    def expand(self, f: SchurVector) -> dict[Partition, LaurentPoly]:
        residual = dict(f._terms)
        out = {}
        while residual:
            lam = max(residual)
            if lam not in self.vectors:
                raise NotInSpanError(f"s{tuple(lam)} is outside the span of the split basis")
            c = residual.pop(lam)
            out[lam] = c
            for mu, v in self.vectors[lam].items():
                if mu == lam:
                    continue
                new = residual.get(mu, ZERO) - c * v
                if new:
                    residual[mu] = new
                else:
                    residual.pop(mu, None)
        return out

    def combine(self, coords: dict) -> SchurVector:
        total = SchurVector.zero(self.n)
        for lam, c in coords.items():
            total = total + self.vectors[Partition(lam)] * c
        return total


@lru_cache(maxsize=None)
def split_basis(n: int) -> SplitBasis:
    return SplitBasis(n)


def project_T2(i: int, f: SchurVector, basis: SplitBasis | None = None) -> SchurVector:
    """Keep the split-basis coordinates whose index has first part i."""
    if basis is None:
        basis = split_basis(f.n)
    if basis.n != f.n and not f.is_zero():
        raise ValueError("degree mismatch")
    coords = basis.expand(f)
    return basis.combine({lam: c for lam, c in coords.items() if lam.part(1) == i})


@lru_cache(maxsize=None)
def _kschur2_def53(lam: Partition) -> SchurVector:
    if not lam:
        return one()
    if len(lam) == 1:
        return schur(lam)
    m, rest = lam[0], Partition(lam[1:])
    return project_T2(m, jing_B(m, _kschur2_def53(rest)))


def kschur2_def53(lam: Sequence[int]) -> SchurVector:
    """2-Schur function from the recursion s_(m, lam) = T_m B_m s_lam."""
    lam = Partition(lam)
    if not lam.is_bounded(2):
        raise ValueError(f"{lam} is not 2-bounded")
    return _kschur2_def53(lam)


def krec_sides(ell: int, mu: Sequence[int], nu: Sequence[int]) -> tuple[SchurVector, SchurVector]:
    """Both sides of the rectangle recursion B_(ell^(3-ell)) kappa_lam = q^(|mu|-l(mu)) kappa_(...)."""
    mu, nu = list(mu), list(nu)
    if ell not in (1, 2):
        raise ValueError("ell must be 1 or 2")
    if mu and not mu[-1] > ell:
        raise ValueError("need the last part of mu to exceed ell")
    if nu and not ell >= nu[0]:
        raise ValueError("need ell >= nu_1")
    lam = Partition(mu + nu)
    if not lam.is_bounded(2):
        raise ValueError(f"{lam} is not 2-bounded")
    rect = [ell] * (3 - ell)
    lhs = rect_B(rect, kschur2(lam))
    rhs = kschur2(sorted(rect + list(lam), reverse=True)).shift(sum(mu) - len(mu))
    return lhs, rhs


def krec_verify(ell: int, mu: Sequence[int], nu: Sequence[int]) -> bool:
    lhs, rhs = krec_sides(ell, mu, nu)
    return lhs == rhs
