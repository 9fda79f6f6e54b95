"""Index tuples modulo an ambient period, their orders and conversions.

Two families of strictly increasing integer tuples show up in the degree
computations.  The wide family only requires entries to be pairwise
distinct mod n; the windowed family additionally fits inside one period
(last - first < n) and is the one that carries degrees.  A windowed index
factors uniquely as a column set inside [1, n] plus a nonnegative period
shift, and that factorization drives both the covering relation and the
fixed-point formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class InvalidIndexError(ValueError):
    """A tuple violates the index invariants, or two indices live mod different n."""


@dataclass(frozen=True)
class CompositeIndex:
    """Strictly increasing tuple of positive ints, pairwise distinct mod n."""

    entries: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(a) for a in self.entries))
        object.__setattr__(self, "n", int(self.n))
        if self.n < 2:
            raise InvalidIndexError(f"period must be at least 2, got {self.n}")
        if not self.entries:
            raise InvalidIndexError("index needs at least one entry")
        if self.entries[0] < 1:
            raise InvalidIndexError(f"entries must be positive: {self.entries}")
        for a, b in zip(self.entries, self.entries[1:]):
            if b <= a:
                raise InvalidIndexError(f"entries must strictly increase: {self.entries}")
        residues = {a % self.n for a in self.entries}
        if len(residues) != len(self.entries):
            raise InvalidIndexError(
                f"entries of {self.entries} repeat a residue mod {self.n}"
            )

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def span(self) -> int:
        return self.entries[-1] - self.entries[0]

    @property
    def in_window(self) -> bool:
        """True when all entries fit in one period (span < n)."""
        return self.span < self.n

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)


@dataclass(frozen=True)
class SchubertSymbol:
    """Column set plus period shift naming a subvariety Z."""

    columns: tuple[int, ...]
    offset: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(int(c) for c in self.columns))
        object.__setattr__(self, "offset", int(self.offset))
        if not self.columns:
            raise InvalidIndexError("column set needs at least one entry")
        if self.columns[0] < 1:
            raise InvalidIndexError(f"columns must be positive: {self.columns}")
        for a, b in zip(self.columns, self.columns[1:]):
            if b <= a:
                raise InvalidIndexError(f"columns must strictly increase: {self.columns}")
        if self.offset < 0:
            raise InvalidIndexError(f"period shift must be nonnegative, got {self.offset}")

    @property
    def m(self) -> int:
        return len(self.columns)

    def __str__(self) -> str:
        cols = ",".join(str(c) for c in self.columns)
        return f"({cols};{self.offset})"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing parts, padded to m rows, with reference box m x p.

    Parts may exceed p; the box records which rectangle the partition is
    measured against, and mu_1 <= p holds exactly when the partition comes
    from a column set that names a nonempty subvariety.
    """

    parts: tuple[int, ...]
    m: int
    p: int

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if len(parts) > self.m:
            raise InvalidIndexError(f"{parts} has more than {self.m} parts")
        parts = parts + (0,) * (self.m - len(parts))
        object.__setattr__(self, "parts", parts)
        if any(x < 0 for x in parts):
            raise InvalidIndexError(f"parts must be nonnegative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidIndexError(f"parts must weakly decrease: {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)


def validate_index(entries: Iterable[int], n: int) -> CompositeIndex:
    """Build a CompositeIndex, raising InvalidIndexError on any violation."""
    return CompositeIndex(tuple(entries), n)


def bottom_index(m: int, n: int) -> CompositeIndex:
    """(1, 2, ..., m): the unique minimum of the windowed family."""
    return CompositeIndex(tuple(range(1, m + 1)), n)


def _check_same_space(alpha: CompositeIndex, beta: CompositeIndex) -> None:
    if alpha.n != beta.n:
        raise InvalidIndexError(f"cannot compare indices mod {alpha.n} and mod {beta.n}")
    if alpha.m != beta.m:
        raise InvalidIndexError(
            f"cannot compare indices of lengths {alpha.m} and {beta.m}"
        )


def _require_window(alpha: CompositeIndex) -> None:
    if not alpha.in_window:
        raise InvalidIndexError(
            f"index {alpha.entries} spans a full period mod {alpha.n}"
        )


def schubert_to_composite(s: SchubertSymbol, n: int) -> CompositeIndex:
    """Realize a (columns; shift) symbol as a windowed index mod n.

    Writing the shift as k*m + r with 0 <= r < m, the last r columns wrap
    one extra period: the result is (k*n + i_{r+1}, ..., k*n + i_m,
    (k+1)*n + i_1, ..., (k+1)*n + i_r).
    """
    m = s.m
    if s.columns[-1] > n:
        raise InvalidIndexError(f"columns {s.columns} exceed the period {n}")
    k, r = divmod(s.offset, m)
    head = tuple(k * n + s.columns[l] for l in range(r, m))
    tail = tuple((k + 1) * n + s.columns[l] for l in range(r))
    return CompositeIndex(head + tail, n)


def composite_to_schubert(alpha: CompositeIndex) -> SchubertSymbol:
    """Factor a windowed index into its column set and total period shift."""
    _require_window(alpha)
    residues = [((a - 1) % alpha.n) + 1 for a in alpha.entries]
    shift = sum((a - r) // alpha.n for a, r in zip(alpha.entries, residues))
    return SchubertSymbol(tuple(sorted(residues)), shift)


def dimension(alpha: CompositeIndex) -> int:
    """sum(alpha_l - l) minus one for each pair a full period or more apart.

    On the windowed family the correction vanishes and the value is also
    |columns| + n * shift of the factored symbol.
    """
    ents = alpha.entries
    base = sum(a - l for l, a in enumerate(ents, start=1))
    excess = sum(
        (ents[l] - ents[k]) // alpha.n
        for l in range(1, len(ents))
        for k in range(l)
    )
    return base - excess


def symbol_dimension(s: SchubertSymbol, n: int) -> int:
    """|columns| + n * shift, the dimension of the subvariety the symbol names."""
    return sum(c - l for l, c in enumerate(s.columns, start=1)) + n * s.offset


def leq_componentwise(i: Iterable[int], j: Iterable[int]) -> bool:
    """Entrywise <= on equal-length tuples."""
    a, b = tuple(i), tuple(j)
    if len(a) != len(b):
        raise InvalidIndexError(f"cannot compare tuples of lengths {len(a)} and {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def _merged_prefix(entries: tuple[int, ...], n: int, count: int) -> list[int]:
    # first `count` values of the merged progressions {a + k*n : k >= 0}
    vals = sorted(a + k * n for a in entries for k in range(count))
    return vals[:count]


def leq_sequence(alpha: CompositeIndex, beta: CompositeIndex) -> bool:
    """Termwise <= of the merged period-progressions of the two indices.

    The merged sequences are eventually offset copies of each other, so
    comparing the first m * (max_entry // n + 2) terms decides the order.
    """
    _check_same_space(alpha, beta)
    m, n = alpha.m, alpha.n
    count = m * (max(alpha.entries[-1], beta.entries[-1]) // n + 2)
    fa = _merged_prefix(alpha.entries, n, count)
    fb = _merged_prefix(beta.entries, n, count)
    return all(x <= y for x, y in zip(fa, fb))


def covers(alpha: CompositeIndex, beta: CompositeIndex) -> bool:
    """True when alpha sits immediately above beta in the windowed order.

    In factored form (i; d) covers (j; b) exactly when either the shifts
    agree and one column drops by 1, or the shift drops by 1 while the
    column set rolls from (1, i_2, ..., i_m) to (i_2, ..., i_m, n).
    Indices outside the window cover nothing and are covered by nothing.
    """
    _check_same_space(alpha, beta)
    if not (alpha.in_window and beta.in_window):
        return False
    si = composite_to_schubert(alpha)
    sj = composite_to_schubert(beta)
    if sj.offset == si.offset:
        diffs = [(x, y) for x, y in zip(si.columns, sj.columns) if x != y]
        return len(diffs) == 1 and diffs[0][0] - diffs[0][1] == 1
    if sj.offset == si.offset - 1:
        return (
            si.columns[0] == 1
            and si.columns[-1] < alpha.n
            and sj.columns == si.columns[1:] + (alpha.n,)
        )
    return False


def _decrement_tuples(entries: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    # single-entry decrements that stay strictly increasing, positive, in-window
    out = []
    for l, a in enumerate(entries):
        v = a - 1
        if l == 0:
            if v < 1 or entries[-1] - v >= n:
                continue
        elif v <= entries[l - 1]:
            continue
        out.append(entries[:l] + (v,) + entries[l + 1 :])
    return out


def lower_covers(alpha: CompositeIndex) -> list[CompositeIndex]:
    """All indices alpha covers: the valid single-entry decrements."""
    _require_window(alpha)
    return [
        CompositeIndex(t, alpha.n) for t in _decrement_tuples(alpha.entries, alpha.n)
    ]


def lower_set(alpha: CompositeIndex) -> Iterator[CompositeIndex]:
    """All windowed indices <= alpha componentwise, in lexicographic order."""
    _require_window(alpha)
    n, m, top = alpha.n, alpha.m, alpha.entries

    def rec(prefix: tuple[int, ...]) -> Iterator[CompositeIndex]:
        l = len(prefix)
        if l == m:
            yield CompositeIndex(prefix, n)
            return
        lo = prefix[-1] + 1 if prefix else 1
        hi = top[l]
        if prefix:
            # leave room for the remaining entries inside the window
            hi = min(hi, prefix[0] + n - 1 - (m - 1 - l))
        for v in range(lo, hi + 1):
            yield from rec(prefix + (v,))

    yield from rec(())


def partition_of(s: SchubertSymbol, p: int) -> Partition:
    """Complementary partition (p + l - i_l) of a column set in an m x p box."""
    for l, c in enumerate(s.columns, start=1):
        if c > p + l:
            raise InvalidIndexError(
                f"column {c} at position {l} exceeds {p + l}; the symbol names nothing"
            )
    parts = tuple(p + l - c for l, c in enumerate(s.columns, start=1))
    return Partition(parts, s.m, p)
