"""Integer partitions: conjugation, beta sets, border strips, hook dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Optional


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0)) ==
    Partition((2, 1)) == (2, 1)``. Rows and columns are 1-based wherever cells
    are mentioned.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and x > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> frozenset:
        return frozenset((i + 1, j + 1) for i, row in enumerate(self) for j in range(row))


EMPTY = Partition()


@dataclass(frozen=True)
class BorderStrip:
    """An edge-connected skew shape with no 2x2 block, as a set of (row, col) cells."""

    cells: frozenset

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def rows(self) -> int:
        return len({r for r, _ in self.cells})

    @property
    def columns(self) -> int:
        return len({c for _, c in self.cells})

    @property
    def height(self) -> int:
        return self.rows - 1

    def is_valid(self) -> bool:
        """Check connectedness and absence of 2x2 blocks directly on the cells."""
        cells = self.cells
        if not cells:
            return False
        for r, c in cells:
            if {(r, c + 1), (r + 1, c), (r + 1, c + 1)} <= cells:
                return False
        start = next(iter(cells))
        seen = {start}
        stack = [start]
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(cells)


def conjugate(lam) -> Partition:
    lam = Partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def beta_set(lam, r: int) -> tuple[int, ...]:
    """Return ``(lam_i + r - i)`` for ``i = 1..r``; needs ``r >= l(lam)``.

    >>> beta_set((2, 1), 3)
    (4, 2, 0)
    """
    lam = Partition(lam)
    if r < len(lam):
        raise ValueError(f"beta set length {r} is shorter than l(lambda) = {len(lam)}")
    return tuple(lam.part(i) + r - i for i in range(1, r + 1))


def from_beta_set(beta: Iterable[int]) -> Partition:
    """Inverse of :func:`beta_set`; the entries are sorted first."""
    beta = sorted(beta, reverse=True)
    if len(set(beta)) != len(beta) or (beta and beta[-1] < 0):
        raise ValueError(f"not a beta set: {beta}")
    r = len(beta)
    return Partition(b - (r - i) for i, b in enumerate(beta, start=1))


def skew_strip(lam, sigma) -> BorderStrip:
    """The cells of ``lam`` not in ``sigma`` (assumed ``sigma`` inside ``lam``)."""
    return BorderStrip(Partition(lam).cells() - Partition(sigma).cells())


def remove_strip_bottom_left(lam, p: int) -> Optional[tuple[Partition, BorderStrip]]:
    """Remove the size-``p`` border strip that contains the cell ``(l(lam), 1)``.

    The strip is found by walking the rim from the bottom-left cell, moving
    right while the current row continues and up otherwise. It is valid only
    if the walk stops at the end of a row. Returns ``None`` when no such strip
    exists, including ``p < 1`` and the empty partition.
    """
    lam = Partition(lam)
    if p < 1 or not lam:
        return None
    row, col = len(lam), 1
    cells = [(row, col)]
    while len(cells) < p:
        if col < lam[row - 1]:
            col += 1
        elif row > 1:
            row -= 1
        else:
            return None
        cells.append((row, col))
    if col != lam[row - 1]:
        return None
    first_col = {}
    for r, c in cells:
        first_col[r] = min(c, first_col.get(r, c))
    rest = [first_col[i + 1] - 1 if i + 1 in first_col else x for i, x in enumerate(lam)]
    return Partition(rest), BorderStrip(frozenset(cells))


def mn_strips(lam, p: int) -> list[tuple[Partition, int]]:
    """All ``(lam minus R, height(R))`` over border strips ``R`` of size ``p``.

    Uses the beta-set description: removing a p-strip lowers one beta entry by
    p, and the height is the number of entries jumped over.
    """
    lam = Partition(lam)
    if p < 1:
        raise ValueError("strip size must be positive")
    beta = beta_set(lam, len(lam))
    present = set(beta)
    out = []
    for b in beta:
        t = b - p
        if t < 0 or t in present:
            continue
        height = sum(1 for x in beta if t < x < b)
        out.append((from_beta_set([t if x == b else x for x in beta]), height))
    return out


def hook_dimension(lam) -> int:
    """Number of standard tableaux of shape ``lam`` via the hook length formula."""
    lam = Partition(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.size) // hooks


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in reverse-lexicographic order.

    >>> [tuple(p) for p in partitions_of(3)]
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield EMPTY
        return

    def rec(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for tail in rec(remaining - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def partitions_up_to(n: int) -> Iterator[Partition]:
    """All partitions of size ``0..n``, by size then reverse-lex."""
    for k in range(n + 1):
        yield from partitions_of(k)


def z_value(rho) -> int:
    """Size of the centralizer of a permutation with cycle type ``rho``."""
    out = 1
    for k in set(rho):
        m = rho.count(k)
        out *= k**m * factorial(m)
    return out


def union(*parts: Iterable[int]) -> Partition:
    """Merge the parts of several partitions into one."""
    merged = []
    for p in parts:
        merged.extend(p)
    merged.sort(reverse=True)
    return Partition(merged)


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1"``; the empty string and ``"0"`` denote the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return EMPTY
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    if any(x < 1 for x in parts):
        raise ValueError(f"malformed partition {text!r}: parts must be positive")
    return Partition(parts)
