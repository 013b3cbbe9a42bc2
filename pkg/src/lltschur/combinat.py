"""Partitions, descent sets and permutation statistics."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction. Partitions compare by size
    first and then in decreasing lexicographic order, so ``(3) < (2, 1) <
    (1, 1, 1)``; this is a linear extension of dominance (largest first)
    and fixes the iteration order of every expansion.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        p = [int(x) for x in parts]
        while p and p[-1] == 0:
            p.pop()
        for a, b in zip(p, p[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {p}")
        if p and p[-1] < 0:
            raise ValueError(f"parts must be positive: {p}")
        return super().__new__(cls, p)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part access, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return _conjugate(self)

    def contains(self, other: Sequence[int]) -> bool:
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def main_hook(self) -> int:
        """lambda_1 + length - 1 (zero for the empty partition)."""
        return self[0] + len(self) - 1 if self else 0

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, row in enumerate(self) for c in range(row)]

    def is_bounded(self, k: int) -> bool:
        return not self or self[0] <= k

    def _key(self):
        return (sum(self), tuple(-x for x in self))

    def __lt__(self, other):
        return self._key() < Partition(other)._key()

    def __le__(self, other):
        return self._key() <= Partition(other)._key()

    def __gt__(self, other):
        return self._key() > Partition(other)._key()

    def __ge__(self, other):
        return self._key() >= Partition(other)._key()

    def __eq__(self, other):
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        return tuple.__ne__(self, other)

    __hash__ = tuple.__hash__

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "()"


EMPTY = Partition()


@lru_cache(maxsize=None)
def _conjugate(p: Partition) -> Partition:
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def conjugate(p: Sequence[int]) -> Partition:
    return Partition(p).conjugate()


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when ``a`` dominates ``b`` (equal sizes assumed)."""
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in canonical order (decreasing lex)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``."""
    out = []

    def rec(prefix, remaining_rows, bound):
        out.append(Partition(prefix))
        if remaining_rows == 0:
            return
        for x in range(1, bound + 1):
            rec(prefix + [x], remaining_rows - 1, x)

    rec([], rows, cols)
    return sorted(out)


def staircase(m: int) -> Partition:
    return Partition(range(m, 0, -1))


def rectangle(rows: int, cols: int) -> Partition:
    return Partition([cols] * rows if cols > 0 else [])


def sub_partitions(outer: Sequence[int]) -> list[Partition]:
    """All partitions contained in ``outer``."""
    outer = list(outer)
    out = []

    def rec(prefix, i, bound):
        out.append(Partition(prefix))
        if i == len(outer):
            return
        for x in range(1, min(bound, outer[i]) + 1):
            rec(prefix + [x], i + 1, x)

    rec([], 0, outer[0] if outer else 0)
    return sorted(out)


def two_bounded_partitions(n: int) -> list[Partition]:
    """Partitions 2^a 1^b of n, canonical order."""
    return [Partition([2] * a + [1] * (n - 2 * a)) for a in range(n // 2, -1, -1)]


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1,1"``; empty string or ``"0"`` gives the empty partition."""
    text = text.strip()
    if text in ("", "()", "[]", "-"):
        return EMPTY
    return Partition(int(x) for x in text.replace(" ", "").strip("()[]").split(","))


# -- descent sets ---------------------------------------------------------

class DescentSet(frozenset):
    """Subset of {1..n-1}, remembered together with n."""

    def __new__(cls, n: int, elements: Iterable[int] = ()):
        obj = super().__new__(cls, elements)
        for i in obj:
            if not 1 <= i <= n - 1:
                raise ValueError(f"descent {i} out of range for n={n}")
        obj.n = n
        return obj

    def __reduce__(self):
        return (DescentSet, (self.n, tuple(self)))

    def __eq__(self, other):
        if isinstance(other, DescentSet):
            return self.n == other.n and frozenset.__eq__(self, other)
        return frozenset.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    __hash__ = frozenset.__hash__

    def __repr__(self) -> str:
        return f"DescentSet({self.n}, {sorted(self)})"

    def to_mask(self) -> int:
        m = 0
        for i in self:
            m |= 1 << (i - 1)
        return m

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "DescentSet":
        return cls(n, (i + 1 for i in range(n - 1) if mask >> i & 1))

    def composition(self) -> tuple[int, ...]:
        cuts = [0] + sorted(self) + [self.n]
        return tuple(b - a for a, b in zip(cuts, cuts[1:]) if b > a)


def descents(word: Sequence[int]) -> set[int]:
    """{i : word_i > word_{i+1}}, 1-based positions."""
    return {i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]}


# -- permutations ---------------------------------------------------------

def validate_permutation(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def inversion_set(w: Sequence[int]) -> set[tuple[int, int]]:
    """{(i, j) : i < j and w(i) > w(j)}, 1-based positions."""
    n = len(w)
    return {(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j]}


def inverse(w: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def inverse_descents(w: Sequence[int]) -> set[int]:
    """Descent set of w^{-1}: values i with i+1 to the left of i in w."""
    return descents(inverse(w))


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return permutations(range(1, n + 1))


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))
