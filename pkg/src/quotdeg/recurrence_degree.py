"""Degrees as the unique solution of a decrement recurrence.

d(alpha) = sum over positions l of d(alpha with entry l decremented), on
strictly increasing positive tuples spanning less than one period, pinned
by d(1, ..., m) = 1 and by zero on the boundary: a repeated entry, a
leading entry at 0, or a span reaching the period.  This module solves
the recurrence by dynamic programming over the box below the queried
tuple, keeping its own bookkeeping (plain entry tuples, no index types)
so that agreement with the chain count is a real cross-check.
"""

from __future__ import annotations

from .indices import InvalidIndexError, SchubertSymbol, schubert_to_composite


class RecurrenceTable:
    """Lazily filled table of recurrence values for fixed m and period n.

    A table may be reused across queries; values accumulate.  `overrides`
    maps specific tuples to pinned values consulted before the built-in
    initial and boundary conditions (a testing seam for checking that each
    condition is actually load-bearing).
    """

    def __init__(
        self,
        m: int,
        n: int,
        overrides: dict[tuple[int, ...], int] | None = None,
    ) -> None:
        if m < 1:
            raise ValueError(f"m must be positive, got {m}")
        if n < 2:
            raise ValueError(f"period must be at least 2, got {n}")
        self.m = m
        self.n = n
        self.values: dict[tuple[int, ...], int] = {}
        self.overrides = dict(overrides or {})
        self._bottom = tuple(range(1, m + 1))

    def _pinned(self, t: tuple[int, ...]) -> int | None:
        # overrides first, then initial value at the bottom, then boundary zeros
        if t in self.overrides:
            return self.overrides[t]
        if t == self._bottom:
            return 1
        if any(b <= a for a, b in zip(t, t[1:])):
            return 0
        if t[0] < 1:
            return 0
        if t[-1] - t[0] >= self.n:
            return 0
        return None

    def _box(self, top: tuple[int, ...]) -> list[tuple[int, ...]]:
        # in-region tuples componentwise <= top, i.e. strictly increasing,
        # positive, spanning under one period
        m, n = self.m, self.n
        out: list[tuple[int, ...]] = []

        def rec(prefix: tuple[int, ...]) -> None:
            l = len(prefix)
            if l == m:
                out.append(prefix)
                return
            lo = prefix[-1] + 1 if prefix else 1
            hi = top[l]
            if prefix:
                hi = min(hi, prefix[0] + n - 1 - (m - 1 - l))
            for v in range(lo, hi + 1):
                rec(prefix + (v,))

        rec(())
        return out

    def degree(self, entries: tuple[int, ...]) -> int:
        """Recurrence value at `entries`; 0 for any boundary or outside probe."""
        t = tuple(int(x) for x in entries)
        if len(t) != self.m:
            raise ValueError(f"expected {self.m} entries, got {t}")
        pinned = self._pinned(t)
        if pinned is not None:
            return pinned
        if t in self.values:
            return self.values[t]
        for cur in sorted(self._box(t), key=lambda u: (sum(u), u)):
            if cur in self.values:
                continue
            pv = self._pinned(cur)
            if pv is not None:
                self.values[cur] = pv
                continue
            acc = 0
            for l in range(self.m):
                dec = cur[:l] + (cur[l] - 1,) + cur[l + 1 :]
                dv = self._pinned(dec)
                acc += self.values[dec] if dv is None else dv
            self.values[cur] = acc
        return self.values[t]


def degree_recurrence(
    entries: tuple[int, ...],
    m: int,
    n: int,
    overrides: dict[tuple[int, ...], int] | None = None,
) -> int:
    """One-shot recurrence solve; boundary probes evaluate to 0, never error."""
    return RecurrenceTable(m, n, overrides).degree(tuple(entries))


def subvariety_degree(columns, d: int, m: int, p: int, q: int) -> int:
    """Degree of the subvariety named by a column set and shift d inside
    the order-q space; the value itself does not depend on q beyond the
    validity bound d <= q."""
    cols = tuple(int(c) for c in columns)
    if len(cols) != m:
        raise InvalidIndexError(f"expected {m} columns, got {cols}")
    if not 0 <= d <= q:
        raise InvalidIndexError(f"shift {d} must lie in [0, {q}]")
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    for l, c in enumerate(cols, start=1):
        if c > p + l:
            raise InvalidIndexError(
                f"column {c} at position {l} exceeds {p + l}; the symbol names nothing"
            )
    alpha = schubert_to_composite(SchubertSymbol(cols, d), m + p)
    return RecurrenceTable(m, m + p).degree(alpha.entries)


def quot_degree(m: int, p: int, q: int) -> int:
    """Degree of the full order-q space in its ambient projective embedding."""
    if m < 1 or p < 1:
        raise ValueError(f"m and p must be positive, got m={m} p={p}")
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    top = tuple(range(p + 1, m + p + 1))
    return subvariety_degree(top, q, m, p, q)
