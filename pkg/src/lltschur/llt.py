"""LLT polynomials of tuples of skew shapes.

The fundamental expansion sums q^inv(T) F_Des(T) over standard fillings.
Fillings are grown one value at a time, so the enumeration is a dynamic
program over (filled cells, cell of the last value) rather than a walk over
every filling.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .combinat import (
    DescentSet,
    Partition,
    all_pairs,
    all_permutations,
    descents,
    inverse_descents,
    inversion_set,
    staircase,
    validate_permutation,
)
from .laurent import LaurentPoly, ZERO
from .symfunc import FundVector, SchurVector, fund_to_schur, omega

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 10


class BoundExceeded(RuntimeError):
    """Enumeration size above the configured bound."""


# -- shapes ---------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    """A skew diagram given by its cells; content of (r, c) is c - r + offset."""

    cells: tuple[tuple[int, int], ...]
    content_offset: int = 0

    def __post_init__(self):
        cells = tuple(sorted((int(r), int(c)) for r, c in self.cells))
        if len(set(cells)) != len(cells):
            raise ValueError("repeated cell")
        object.__setattr__(self, "cells", cells)
        cellset = set(cells)
        # skew diagrams are exactly the order-convex cell sets
        for (r1, c1) in cells:
            for (r2, c2) in cells:
                if r1 <= r2 and c1 <= c2:
                    for r in range(r1, r2 + 1):
                        for c in range(c1, c2 + 1):
                            if (r, c) not in cellset:
                                raise ValueError(f"cells {sorted(cellset)} do not form a skew diagram")

    @classmethod
    def single(cls, content: int = 0) -> "Component":
        return cls(((0, 0),), content)

    @classmethod
    def horizontal_domino(cls) -> "Component":
        return cls(((0, 0), (0, 1)), 0)

    @classmethod
    def vertical_domino(cls) -> "Component":
        return cls(((0, 0), (1, 0)), 1)

    @classmethod
    def skew(cls, outer: Sequence[int], inner: Sequence[int] = (), content_offset: int = 0) -> "Component":
        outer, inner = Partition(outer), Partition(inner)
        cells = [(r, c) for r in range(len(outer)) for c in range(inner.part(r + 1), outer[r])]
        return cls(tuple(cells), content_offset)

    def __len__(self) -> int:
        return len(self.cells)

    def content(self, cell: tuple[int, int]) -> int:
        return cell[1] - cell[0] + self.content_offset

    def contents(self) -> tuple[int, ...]:
        return tuple(self.content(x) for x in self.cells)

    def kind(self) -> str:
        """One of 'H', 'V', '0', '1' for the two-diagonal pieces, else 'other'."""
        cs = self.contents()
        if len(self.cells) == 1 and cs[0] in (0, 1):
            return str(cs[0])
        if len(self.cells) == 2 and sorted(cs) == [0, 1]:
            (r1, c1), (r2, c2) = self.cells
            return "H" if r1 == r2 else "V"
        return "other"

    def skew_shape(self) -> tuple[Partition, Partition]:
        """(outer, inner) after translating to the origin."""
        r0 = min(r for r, _ in self.cells)
        c0 = min(c for _, c in self.cells)
        rows: dict[int, list[int]] = {}
        for r, c in self.cells:
            rows.setdefault(r - r0, []).append(c - c0)
        nrows = max(rows) + 1
        outer, inner = [0] * nrows, [0] * nrows
        for r in range(nrows):
            if r in rows:
                outer[r], inner[r] = max(rows[r]) + 1, min(rows[r])
            else:
                # empty row between disconnected pieces
                inner[r] = outer[r] = inner[r - 1]
        return Partition(outer), Partition(inner)

    def to_json(self) -> dict:
        return {"kind": "cells", "cells": [list(x) for x in self.cells], "content_offset": self.content_offset}

    @classmethod
    def from_json(cls, data) -> "Component":
        if data.get("kind", "cells") != "cells":
            raise ValueError(f"unknown component kind {data.get('kind')!r}")
        return cls(tuple(tuple(x) for x in data["cells"]), int(data.get("content_offset", 0)))


@dataclass(frozen=True)
class ShapeTuple:
    components: tuple[Component, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def d(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.components)

    def cells(self) -> list[tuple[int, tuple[int, int], int, int]]:
        """(component, cell, content, shifted content) for every cell."""
        d = self.d
        out = []
        for i, comp in enumerate(self.components):
            for x in comp.cells:
                c = comp.content(x)
                out.append((i, x, c, d * c + i))
        return out

    def reading_order(self):
        cells = sorted(self.cells(), key=lambda t: t[3])
        shifted = [t[3] for t in cells]
        assert len(set(shifted)) == len(shifted), "shifted contents collide"
        return cells

    def swap(self, i: int) -> "ShapeTuple":
        comps = list(self.components)
        comps[i], comps[i + 1] = comps[i + 1], comps[i]
        return ShapeTuple(tuple(comps))

    def to_json(self) -> dict:
        return {"components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, data) -> "ShapeTuple":
        return cls(tuple(Component.from_json(c) for c in data["components"]))

    @classmethod
    def single_cells(cls, contents: Iterable[int]) -> "ShapeTuple":
        return cls(tuple(Component.single(c) for c in contents))


PIECES = {
    "H": Component.horizontal_domino(),
    "V": Component.vertical_domino(),
    "0": Component.single(0),
    "1": Component.single(1),
}


@dataclass(frozen=True)
class TwoDiagTuple:
    """Tuple of pieces H, V (dominoes on contents {0,1}) and single cells 0, 1."""

    pieces: tuple[str, ...]

    def __post_init__(self):
        pieces = tuple(self.pieces)
        bad = [p for p in pieces if p not in PIECES]
        if bad:
            raise ValueError(f"unknown pieces {bad}; expected letters from H, V, 0, 1")
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def parse(cls, text: str) -> "TwoDiagTuple":
        return cls(tuple(text.strip().upper()))

    def __str__(self) -> str:
        return "".join(self.pieces)

    @property
    def n(self) -> int:
        return sum(2 if p in "HV" else 1 for p in self.pieces)

    @property
    def m(self) -> int:
        """Number of cells with content 1."""
        return sum(1 for p in self.pieces if p in "HV1")

    @property
    def z(self) -> int:
        return self.pieces.count("V")

    def shape_tuple(self) -> ShapeTuple:
        return ShapeTuple(tuple(PIECES[p] for p in self.pieces))

    def conjugate(self) -> "TwoDiagTuple":
        """Reverse the order and swap single-cell contents 0 <-> 1."""
        flip = {"0": "1", "1": "0", "H": "H", "V": "V"}
        return TwoDiagTuple(tuple(flip[p] for p in reversed(self.pieces)))


def two_diag_tuples(max_pieces: int) -> list[TwoDiagTuple]:
    out = []
    for k in range(1, max_pieces + 1):
        for word in _words("HV01", k):
            out.append(TwoDiagTuple(word))
    return out


def _words(alphabet: str, k: int):
    if k == 0:
        yield ()
        return
    for rest in _words(alphabet, k - 1):
        for a in alphabet:
            yield rest + (a,)


def as_shape_tuple(t) -> ShapeTuple:
    if isinstance(t, ShapeTuple):
        return t
    if isinstance(t, TwoDiagTuple):
        return t.shape_tuple()
    if isinstance(t, str):
        return TwoDiagTuple.parse(t).shape_tuple()
    raise TypeError(f"cannot interpret {t!r} as a tuple of shapes")


# -- fillings and the inversion statistic ----------------------------------

Filling = tuple[tuple[int, ...], ...]


def check_standard(t: ShapeTuple, T: Filling) -> None:
    if len(T) != t.d or any(len(v) != len(c) for v, c in zip(T, t.components)):
        raise ValueError("filling does not match the shape")
    values = sorted(v for comp in T for v in comp)
    if values != list(range(1, t.n + 1)):
        raise ValueError("entries must be 1..n each once")
    for comp, vals in zip(t.components, T):
        where = dict(zip(comp.cells, vals))
        for (r, c), v in where.items():
            if (r, c - 1) in where and where[(r, c - 1)] >= v:
                raise ValueError("rows must increase")
            if (r - 1, c) in where and where[(r - 1, c)] >= v:
                raise ValueError("columns must increase")


def inv_d(t: ShapeTuple, T: Filling) -> int:
    """Pairs (x, y) with 0 < shifted(y) - shifted(x) < d and T(x) > T(y)."""
    t = as_shape_tuple(t)
    check_standard(t, T)
    d = t.d
    entries = []
    for (i, x, c, s) in t.cells():
        comp = t.components[i]
        entries.append((s, T[i][comp.cells.index(x)]))
    count = 0
    for sx, vx in entries:
        for sy, vy in entries:
            if 0 < sy - sx < d and vx > vy:
                count += 1
    return count


def standard_fillings(t: ShapeTuple) -> list[Filling]:
    """Every standard filling, by brute force over permutations of 1..n."""
    t = as_shape_tuple(t)
    n = t.n
    out = []
    for perm in permutations(range(1, n + 1)):
        it = iter(perm)
        T = tuple(tuple(next(it) for _ in comp.cells) for comp in t.components)
        try:
            check_standard(t, T)
        except ValueError:
            continue
        out.append(T)
    return out


def content_reading_word(t: ShapeTuple, T: Filling) -> tuple[int, ...]:
    t = as_shape_tuple(t)
    word = []
    for (i, x, c, s) in t.reading_order():
        word.append(T[i][t.components[i].cells.index(x)])
    return tuple(word)


# -- enumeration kernel ---------------------------------------------------

def _structure(t: ShapeTuple):
    """Canonical description: predecessor masks and inversion windows in reading order."""
    order = t.reading_order()
    pos = {(i, x): p for p, (i, x, _, _) in enumerate(order)}
    d = t.d
    pred, after = [], []
    for p, (i, (r, c), _, s) in enumerate(order):
        mask = 0
        for nb in ((r, c - 1), (r - 1, c)):
            if (i, nb) in pos:
                mask |= 1 << pos[(i, nb)]
        pred.append(mask)
        w = 0
        for p2, (_, _, _, s2) in enumerate(order):
            if 0 < s2 - s < d:
                w |= 1 << p2
        after.append(w)
    return len(order), tuple(pred), tuple(after)


def _fund_kernel(n: int, pred: Sequence[int], weights: Sequence) -> dict[int, dict[int, int]]:
    """sum over standard fillings of q^inv x F_ides, keyed by descent mask.

    ``weights[p]`` is an int mask (unit weights) or a tuple of (bit, weight).
    Placing the next largest value at position p adds the weights of already
    filled positions in its window; a descent at v occurs when v+1 is read
    before v.
    """
    if n == 0:
        return {0: {0: 1}}
    unit = all(isinstance(w, int) for w in weights)
    layer: dict = {}
    for p in range(n):
        if pred[p] == 0:
            layer[(1 << p, p)] = {0: {0: 1}}
    for v in range(1, n):
        dbit_v = 1 << (v - 1)
        new: dict = {}
        for (filled, last), table in layer.items():
            for p in range(n):
                bit = 1 << p
                if filled & bit or pred[p] & ~filled:
                    continue
                if unit:
                    inc = (weights[p] & filled).bit_count()
                else:
                    inc = sum(wt for b, wt in weights[p] if filled & b)
                dbit = dbit_v if p < last else 0
                key = (filled | bit, p)
                tgt = new.get(key)
                if tgt is None:
                    tgt = new[key] = {}
                for desc, poly in table.items():
                    nd = desc | dbit
                    tp = tgt.get(nd)
                    if tp is None:
                        tgt[nd] = {ex + inc: cf for ex, cf in poly.items()}
                    else:
                        for ex, cf in poly.items():
                            k = ex + inc
                            tp[k] = tp.get(k, 0) + cf
        layer = new
    out: dict = {}
    for table in layer.values():
        for desc, poly in table.items():
            tp = out.setdefault(desc, {})
            for ex, cf in poly.items():
                tp[ex] = tp.get(ex, 0) + cf
    return out


def _to_fund(n: int, raw: dict) -> FundVector:
    terms = {DescentSet.from_mask(n, m): LaurentPoly(p) for m, p in raw.items()}
    return FundVector(n, terms)


@lru_cache(maxsize=None)
def _llt_structural(n: int, pred: tuple, after: tuple) -> FundVector:
    return _to_fund(n, _fund_kernel(n, pred, after))


def llt(t, max_n: int = DEFAULT_MAX_N) -> FundVector:
    """LLT polynomial as a fundamental quasisymmetric expansion."""
    t = as_shape_tuple(t)
    if t.n > max_n:
        raise BoundExceeded(f"tuple has {t.n} cells, bound is {max_n}")
    return _llt_structural(*_structure(t))


@lru_cache(maxsize=None)
def _llt_schur_structural(n, pred, after) -> SchurVector:
    return fund_to_schur(_llt_structural(n, pred, after))


def llt_schur(t, max_n: int = DEFAULT_MAX_N) -> SchurVector:
    t = as_shape_tuple(t)
    if t.n > max_n:
        raise BoundExceeded(f"tuple has {t.n} cells, bound is {max_n}")
    return _llt_schur_structural(*_structure(t))


def llt_bruteforce(t) -> FundVector:
    """Same polynomial by explicit enumeration of standard fillings."""
    t = as_shape_tuple(t)
    terms: dict = {}
    for T in standard_fillings(t):
        word = content_reading_word(t, T)
        key = DescentSet(t.n, inverse_descents(word))
        terms[key] = terms.get(key, ZERO) + LaurentPoly.monomial(inv_d(t, T))
    return FundVector(t.n, terms)


def llt_specialized(t, nvars: int) -> dict[tuple[int, ...], LaurentPoly]:
    """Sum over semistandard fillings with entries <= nvars of q^inv x^T."""
    t = as_shape_tuple(t)
    d = t.d
    cells = [(i, x, s) for (i, x, c, s) in t.cells()]
    index = {(i, x): k for k, (i, x, s) in enumerate(cells)}
    n = len(cells)
    left = [index.get((i, (x[0], x[1] - 1))) for (i, x, s) in cells]
    up = [index.get((i, (x[0] - 1, x[1]))) for (i, x, s) in cells]
    pairs = [(a, b) for a in range(n) for b in range(n) if 0 < cells[b][2] - cells[a][2] < d]
    values = [0] * n
    out: dict = {}

    def rec(k):
        if k == n:
            inv = sum(1 for a, b in pairs if values[a] > values[b])
            expv = [0] * nvars
            for v in values:
                expv[v - 1] += 1
            key = tuple(expv)
            out[key] = out.get(key, ZERO) + LaurentPoly.monomial(inv)
            return
        lo = 1
        if left[k] is not None:
            lo = max(lo, values[left[k]])
        if up[k] is not None:
            lo = max(lo, values[up[k]] + 1)
        for v in range(lo, nvars + 1):
            values[k] = v
            rec(k + 1)
        values[k] = 0

    # cells of each component are sorted row-major, so neighbours come first
    rec(0)
    return {k: v for k, v in out.items() if v}


# -- unicellular tuples ---------------------------------------------------

@dataclass(frozen=True)
class UnicellularProfile:
    n: int
    contents: tuple[int, ...]
    w: tuple[int, ...]
    f: tuple[int, ...]
    partition: Partition


def _single_cell_contents(t) -> tuple[int, ...]:
    t = as_shape_tuple(t)
    if any(len(c) != 1 for c in t.components):
        raise ValueError("profile needs a tuple of single cells")
    return tuple(c.content(c.cells[0]) for c in t.components)


def profile(t) -> UnicellularProfile:
    """w, f and the staircase partition of a tuple of single cells."""
    contents = _single_cell_contents(t)
    n = d = len(contents)
    shifted = [d * c + i for i, c in enumerate(contents)]
    w = tuple(sum(1 for s in shifted if s < si) + 1 for si in shifted)
    ordered = sorted(shifted)
    f = tuple(sum(1 for s in shifted if s < si - d) for si in ordered)
    lam = Partition(f[n - r] for r in range(1, n + 1))
    return UnicellularProfile(n, contents, w, f, lam)


def profile_prime(t) -> Partition:
    """Partition read from f'(i) = #{j : shifted_j <= shifted_i - d}."""
    t = as_shape_tuple(t)
    d = t.d
    shifted = sorted(s for (_, _, _, s) in t.cells())
    n = len(shifted)
    f = [sum(1 for s in shifted if s <= si - d) for si in shifted]
    return Partition(f[n - r] for r in range(1, n + 1))


def _check_in_staircase(n: int, lam: Partition) -> None:
    if not staircase(n - 1).contains(lam):
        raise ValueError(f"{lam} is not contained in the staircase of size {n - 1}")


def tuple_from_partition(n: int, lam: Sequence[int]) -> ShapeTuple:
    """Single cells whose profile partition is lam.

    Uses contents 0/1 only when lam fits in an m x (n - m) box.
    """
    lam = Partition(lam)
    _check_in_staircase(n, lam)
    m = len(lam)
    if not lam or lam[0] <= n - m:
        ones = {lam[r - 1] + m - r for r in range(1, m + 1)}
        return ShapeTuple.single_cells(1 if i in ones else 0 for i in range(n))
    shifted = _realize_profile(n, lam)
    base = min(s // n for s in shifted)
    contents = [0] * n
    for s in shifted:
        contents[s % n] = s // n - base
    return ShapeTuple.single_cells(contents)


def _realize_profile(n: int, lam: Partition) -> list[int]:
    """Increasing shifted contents with distinct residues realizing f."""
    target = [lam.part(n + 1 - b) for b in range(1, n + 1)]  # f(b), 1-based b
    chosen: list[int] = []
    used = set()

    def rec(b):
        if b > n:
            return True
        fb = target[b - 1]
        lo = chosen[-1] + 1 if chosen else 0
        if fb >= 1:
            lo = max(lo, chosen[fb - 1] + n + 1)
        hi = lo + n - 1
        if fb + 1 <= b - 1:
            hi = min(hi, chosen[fb] + n - 1)
        for s in range(lo, hi + 1):
            if s % n in used:
                continue
            chosen.append(s)
            used.add(s % n)
            if rec(b + 1):
                return True
            chosen.pop()
            used.discard(s % n)
        return False

    if not rec(1):
        raise ValueError(f"no single-cell tuple realizes {lam} for n={n}")
    return chosen


# -- inversion matrices ---------------------------------------------------

class InversionMatrix:
    """Strictly upper triangular nonnegative weights m_ij, 1-based."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict[tuple[int, int], int], check: bool = True):
        self.n = n
        self.entries = {}
        for (i, j), v in entries.items():
            if not 1 <= i < j <= n:
                raise ValueError(f"entry ({i},{j}) is not strictly upper triangular")
            if v < 0:
                raise ValueError("weights must be nonnegative")
            if v:
                self.entries[(i, j)] = int(v)
        if check and not self.satisfies_star():
            raise ValueError("matrix violates the nesting condition (*)")

    def __getitem__(self, ij) -> int:
        return self.entries.get(ij, 0)

    def satisfies_star(self) -> bool:
        """A zero at (i, j) forces zeros at every (k, l) with k < i < j < l."""
        n = self.n
        for i, j in all_pairs(n):
            if self[(i, j)] == 0:
                for k in range(1, i):
                    for l in range(j + 1, n + 1):
                        if self[(k, l)]:
                            return False
        return True

    @classmethod
    def all_ones(cls, n: int) -> "InversionMatrix":
        return cls(n, {p: 1 for p in all_pairs(n)})


def partition_pairs(n: int, lam: Sequence[int]) -> set[tuple[int, int]]:
    """Cells of lam as pairs: row r gives (j, n+1-r) for j <= lam_r."""
    lam = Partition(lam)
    return {(j, n + 1 - r) for r in range(1, len(lam) + 1) for j in range(1, lam[r - 1] + 1)}


def matrix_from_partition(n: int, lam: Sequence[int]) -> InversionMatrix:
    """0/1 matrix vanishing exactly on the cells of lam."""
    lam = Partition(lam)
    _check_in_staircase(n, lam)
    cells = partition_pairs(n, lam)
    return InversionMatrix(n, {p: 1 for p in all_pairs(n) if p not in cells})


def inv_M(w: Sequence[int], M: InversionMatrix) -> int:
    w = validate_permutation(w)
    if len(w) != M.n:
        raise ValueError("size mismatch")
    return sum(M[p] for p in inversion_set(w))


def _matrix_weights(M: InversionMatrix):
    n = M.n
    weights = []
    for p in range(n):
        # position p+1; later positions j > p+1 hold smaller values
        weights.append(tuple((1 << (j - 1), M[(p + 1, j)]) for j in range(p + 2, n + 1) if M[(p + 1, j)]))
    return weights


def G_M(M: InversionMatrix) -> FundVector:
    """sum over w in S_n of q^inv(w, M) F_iD(w)."""
    if not M.satisfies_star():
        raise ValueError("matrix violates the nesting condition (*)")
    n = M.n
    if all(v == 1 for v in M.entries.values()):
        weights = [sum(1 << (j - 1) for j in range(p + 2, n + 1) if M[(p + 1, j)]) for p in range(n)]
    else:
        weights = _matrix_weights(M)
    return _to_fund(n, _fund_kernel(n, [0] * n, weights))


def G_M_bruteforce(M: InversionMatrix) -> FundVector:
    n = M.n
    terms: dict = {}
    for w in all_permutations(n):
        key = DescentSet(n, inverse_descents(w))
        terms[key] = terms.get(key, ZERO) + LaurentPoly.monomial(inv_M(w, M))
    return FundVector(n, terms)


@lru_cache(maxsize=None)
def _G_unicellular(n: int, lam: Partition) -> FundVector:
    return G_M(matrix_from_partition(n, lam))


def G_unicellular(n: int, lam: Sequence[int]) -> FundVector:
    """Unicellular LLT polynomial G_lam as a fundamental expansion."""
    lam = Partition(lam)
    _check_in_staircase(n, lam)
    return _G_unicellular(n, lam)


def G_unicellular_variant(n: int, lam: Sequence[int], pairs: str, findex: str) -> FundVector:
    """One of four candidate readings of the permutation formula.

    ``pairs`` is 'cells' (count inversions on the cells of lam) or
    'complement'; ``findex`` is 'inverse' (F indexed by the descents of
    v^-1) or 'direct'.
    """
    lam = Partition(lam)
    _check_in_staircase(n, lam)
    cells = partition_pairs(n, lam)
    counted = cells if pairs == "cells" else set(all_pairs(n)) - cells
    terms: dict = {}
    for v in all_permutations(n):
        inv = len(inversion_set(v) & counted)
        key = DescentSet(n, inverse_descents(v) if findex == "inverse" else descents(v))
        terms[key] = terms.get(key, ZERO) + LaurentPoly.monomial(inv)
    return FundVector(n, terms)


@lru_cache(maxsize=None)
def _G_unicellular_schur(n: int, lam: Partition) -> SchurVector:
    return fund_to_schur(_G_unicellular(n, lam))


def G_unicellular_schur(n: int, lam: Sequence[int]) -> SchurVector:
    lam = Partition(lam)
    _check_in_staircase(n, lam)
    return _G_unicellular_schur(n, lam)


# -- L(n, lam) --------------------------------------------------------------

L_NORMALIZATIONS = ("conjugate", "reversed")
_L_normalization: str | None = None


def normalize_conjugate(g: SchurVector, p: int, normalization: str) -> SchurVector:
    """omega(g), or q^p omega(g)(q^-1) for the 'reversed' normalization."""
    w = omega(g)
    if normalization == "conjugate":
        return w
    if normalization == "reversed":
        return w.subs_qinv().shift(p)
    raise ValueError(f"unknown normalization {normalization!r}")


def L_normalization() -> str:
    """The normalization of L fixed by the n=6 worked example (selected once)."""
    global _L_normalization
    if _L_normalization is None:
        from .theorems import select_L_normalization

        _L_normalization = select_L_normalization()
        log.info("L normalization: %s", _L_normalization)
    return _L_normalization


def L(n: int, lam: Sequence[int], normalization: str | None = None) -> SchurVector:
    """Conjugate of the unicellular LLT polynomial G_lam."""
    lam = Partition(lam)
    if normalization is None:
        normalization = L_normalization()
    p = n * (n - 1) // 2 - lam.size
    return normalize_conjugate(G_unicellular_schur(n, lam), p, normalization)


# -- dominoes, splitting and swapping ---------------------------------------

def domino_tuple(a: Sequence[int], odd: bool = False) -> ShapeTuple:
    """Horizontal (0) / vertical (1) dominoes on contents {0,1}; odd appends a 0-cell."""
    comps = [PIECES["V"] if x else PIECES["H"] for x in a]
    if any(x not in (0, 1) for x in a):
        raise ValueError("a must be a 0/1 sequence")
    if odd:
        comps.append(PIECES["0"])
    return ShapeTuple(tuple(comps))


def split_cells(t, i: int) -> tuple[ShapeTuple, ShapeTuple, int]:
    """Merge single cells i, i+1 (contents eps, 1-eps) into a domino.

    Returns (tuple with horizontal domino, tuple with vertical domino, eps);
    llt(t) = llt(first) + q^eps llt(second).
    """
    t = as_shape_tuple(t)
    if not 0 <= i < t.d - 1:
        raise ValueError("index out of range")
    a, b = t.components[i], t.components[i + 1]
    if len(a) != 1 or len(b) != 1:
        raise ValueError("components i, i+1 must be single cells")
    ca, cb = a.contents()[0], b.contents()[0]
    if ca not in (0, 1) or cb != 1 - ca:
        raise ValueError("contents must be eps and 1 - eps")
    comps = list(t.components)
    mu0 = ShapeTuple(tuple(comps[:i] + [PIECES["H"]] + comps[i + 2:]))
    mu1 = ShapeTuple(tuple(comps[:i] + [PIECES["V"]] + comps[i + 2:]))
    return mu0, mu1, ca


def _by_content(comp: Component, vals: Sequence[int]) -> dict[int, int]:
    return {comp.content(x): v for x, v in zip(comp.cells, vals)}


def _from_content(comp: Component, by_content: dict[int, int]) -> tuple[int, ...]:
    return tuple(by_content[comp.content(x)] for x in comp.cells)


def _psi_forward(a: int, b: int, c: int, d: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Vertical (a at content 0, b at content 1) then horizontal (c, d)
    -> horizontal (content 0, content 1), vertical (content 0, content 1)."""
    if a > d > c > b:
        return (c, d), (a, b)
    if a > d > b > c:
        return (c, b), (a, d)
    if d > a > c > b:
        return (a, d), (c, b)
    if d > a > b > c:
        return (c, d), (a, b)
    if a > b > d > c:
        return (c, b), (a, d)
    if d > c > a > b:
        return (a, d), (c, b)
    raise ValueError(f"entries {a, b, c, d} do not come from a standard filling")


def swap_psi(t, i: int, T: Filling) -> Filling:
    """Filling of t.swap(i) with the same inversion number as T.

    Components i and i+1 must be the two dominoes on contents {0,1}; all other
    entries, and the sets of entries on each diagonal, are unchanged.
    """
    t = as_shape_tuple(t)
    check_standard(t, T)
    ki, kj = t.components[i].kind(), t.components[i + 1].kind()
    if {ki, kj} != {"H", "V"}:
        raise ValueError("components i, i+1 must be a horizontal and a vertical domino")
    vi = _by_content(t.components[i], T[i])
    vj = _by_content(t.components[i + 1], T[i + 1])
    if ki == "V":
        (h0, h1), (v0, v1) = _psi_forward(vi[0], vi[1], vj[0], vj[1])
        new_i = _from_content(PIECES["H"], {0: h0, 1: h1})
        new_j = _from_content(PIECES["V"], {0: v0, 1: v1})
    else:
        target = ((vi[0], vi[1]), (vj[0], vj[1]))
        values = [vi[0], vi[1], vj[0], vj[1]]
        pre = None
        for a, b, c, d in permutations(values):
            if a > b and d > c:
                try:
                    if _psi_forward(a, b, c, d) == target:
                        pre = (a, b, c, d)
                        break
                except ValueError:
                    continue
        if pre is None:
            raise ValueError("no preimage; filling is not standard")
        a, b, c, d = pre
        new_i = _from_content(PIECES["V"], {0: a, 1: b})
        new_j = _from_content(PIECES["H"], {0: c, 1: d})
    out = list(T)
    out[i], out[i + 1] = new_i, new_j
    return tuple(out)


def f_xy(w: Sequence[int], x: int, y: int) -> tuple[int, ...]:
    """Kadell's involution: fix w when (x,y) and (x+1,y) agree as inversions, else w s_x."""
    w = validate_permutation(w)
    n = len(w)
    if not (1 <= x and x + 1 < y <= n):
        raise ValueError(f"need 1 <= x, x+1 < y <= n; got x={x}, y={y}, n={n}")
    a = w[x - 1] > w[y - 1]
    b = w[x] > w[y - 1]
    if a == b:
        return w
    out = list(w)
    out[x - 1], out[x] = out[x], out[x - 1]
    return tuple(out)
