"""Cross-method and identity sweeps behind the verify command.

Each suite exhaustively checks one contract over a bounded range and
reports (cases, failures).  Results are plain data with deterministic
ordering so the CLI can emit byte-identical reports for identical inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .chain_degree import degree_bruteforce, degree_chain
from .indices import (
    CompositeIndex,
    SchubertSymbol,
    bottom_index,
    composite_to_schubert,
    covers,
    dimension,
    leq_componentwise,
    leq_sequence,
    lower_covers,
    schubert_to_composite,
    symbol_dimension,
)
from .recurrence_degree import RecurrenceTable
from .vafa import (
    DEFAULT_PRECISION,
    DEFAULT_TOLERANCE,
    ToleranceError,
    lg_roots,
    powersum_determinant,
    vi_degree,
)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)


@dataclass
class VerifyReport:
    max_n: int
    max_dim: int
    precision: int
    tolerance: float
    fault_injected: bool
    suites: list[SuiteResult]
    duality: list[dict] | None = None

    @property
    def total_cases(self) -> int:
        return sum(s.cases for s in self.suites)

    @property
    def total_failures(self) -> int:
        return sum(len(s.failures) for s in self.suites)

    @property
    def ok(self) -> bool:
        return self.total_failures == 0


def windowed_indices(n: int, m: int, max_dim: int) -> Iterator[tuple[int, ...]]:
    """All windowed index tuples of length m mod n with dimension <= max_dim,
    in lexicographic order."""

    def rec(prefix: tuple[int, ...], dim: int) -> Iterator[tuple[int, ...]]:
        l = len(prefix)
        if l == m:
            yield prefix
            return
        lo = prefix[-1] + 1 if prefix else 1
        hi = prefix[0] + n - 1 - (m - 1 - l) if prefix else max_dim // m + 1
        for v in range(lo, hi + 1):
            d = dim + v - (l + 1)
            # each remaining entry contributes at least v - l - 1
            rest = (m - l - 1) * (v - l - 1)
            if d + rest > max_dim:
                break
            yield from rec(prefix + (v,), d)

    yield from rec((), 0)


def valid_symbols(m: int, p: int, max_dim: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """All (columns, d) naming a subvariety with dimension <= max_dim."""
    n = m + p
    for cols in itertools.combinations(range(1, n + 1), m):
        if any(c > p + l for l, c in enumerate(cols, start=1)):
            continue
        base = sum(c - l for l, c in enumerate(cols, start=1))
        if base > max_dim:
            continue
        for d in range((max_dim - base) // n + 1):
            yield cols, d


def base_case_suite(max_mp: int = 4) -> SuiteResult:
    """Bottom index has degree 1 in every space, all three methods."""
    out = SuiteResult("base_case")
    for m in range(1, max_mp + 1):
        for p in range(1, max_mp + 1):
            n = m + p
            out.cases += 1
            bot = bottom_index(m, n)
            ch = degree_chain(bot)
            rec = RecurrenceTable(m, n).degree(bot.entries)
            try:
                vi = vi_degree(tuple(range(1, m + 1)), 0, m, p).value
            except ToleranceError as exc:
                out.failures.append(f"m={m} p={p} bottom vi failed: {exc}")
                continue
            if not ch == rec == vi == 1:
                out.failures.append(
                    f"m={m} p={p} bottom degrees chain={ch} recurrence={rec} vi={vi}"
                )
    return out


def roundtrip_suite(max_n: int, max_dim: int) -> SuiteResult:
    """Symbol <-> index conversions invert each other and match dimensions."""
    out = SuiteResult("roundtrip")
    for n in range(2, max_n + 1):
        for m in range(1, n):
            p = n - m
            for cols, d in valid_symbols(m, p, max_dim):
                out.cases += 1
                s = SchubertSymbol(cols, d)
                alpha = schubert_to_composite(s, n)
                back = composite_to_schubert(alpha)
                if back != s:
                    out.failures.append(f"n={n} {s} -> {alpha} -> {back}")
                    continue
                if dimension(alpha) != symbol_dimension(s, n):
                    out.failures.append(
                        f"n={n} {s}: dimension {dimension(alpha)} != "
                        f"{symbol_dimension(s, n)}"
                    )
    return out


def cross_method_suite(
    max_n: int,
    max_dim: int,
    precision: int = DEFAULT_PRECISION,
    tolerance: float = DEFAULT_TOLERANCE,
    memo: dict | None = None,
) -> SuiteResult:
    """chain = recurrence = fixed-point sum on every subvariety in range."""
    out = SuiteResult("cross_method")
    if memo is None:
        memo = {}
    for n in range(2, max_n + 1):
        for m in range(1, n):
            p = n - m
            table = RecurrenceTable(m, n)
            roots = lg_roots(m, n, precision)
            for cols, d in valid_symbols(m, p, max_dim):
                out.cases += 1
                alpha = schubert_to_composite(SchubertSymbol(cols, d), n)
                ch = degree_chain(alpha, memo)
                rec = table.degree(alpha.entries)
                try:
                    vi = vi_degree(
                        cols, d, m, p, tolerance=tolerance, roots=roots
                    ).value
                except ToleranceError as exc:
                    out.failures.append(f"n={n} i={cols} d={d}: vi failed: {exc}")
                    continue
                if not ch == rec == vi:
                    out.failures.append(
                        f"n={n} i={cols} d={d}: chain={ch} recurrence={rec} vi={vi}"
                    )
    return out


def pieri_suite(max_n: int, max_dim: int, memo: dict | None = None) -> SuiteResult:
    """degree(alpha) equals the sum of degrees over its lower covers."""
    out = SuiteResult("pieri")
    if memo is None:
        memo = {}
    for n in range(2, max_n + 1):
        for m in range(1, n):
            bottom = bottom_index(m, n)
            for entries in windowed_indices(n, m, max_dim):
                alpha = CompositeIndex(entries, n)
                if alpha == bottom:
                    continue
                out.cases += 1
                total = sum(degree_chain(b, memo) for b in lower_covers(alpha))
                got = degree_chain(alpha, memo)
                if got != total:
                    out.failures.append(
                        f"n={n} alpha={entries}: degree {got} != cover sum {total}"
                    )
    return out


def chain_oracle_suite(max_n: int, max_dim: int, memo: dict | None = None) -> SuiteResult:
    """Worklist count agrees with the uncached upward walk (small range)."""
    out = SuiteResult("chain_oracle")
    if memo is None:
        memo = {}
    for n in range(2, min(max_n, 5) + 1):
        for m in range(1, n):
            for entries in windowed_indices(n, m, min(max_dim, 8)):
                alpha = CompositeIndex(entries, n)
                out.cases += 1
                fast = degree_chain(alpha, memo)
                slow = degree_bruteforce(alpha, max_dim=8)
                if fast != slow:
                    out.failures.append(
                        f"n={n} alpha={entries}: worklist {fast} != walk {slow}"
                    )
    return out


def order_agreement_suite(max_n: int) -> SuiteResult:
    """Merged-progression order restricted to the window is the componentwise
    order: checked on all pairs with entries <= 3n."""
    out = SuiteResult("order_agreement")
    for n in range(2, max_n + 1):
        for m in range(1, n):
            pool = [
                CompositeIndex(entries, n)
                for entries in windowed_indices(n, m, 3 * n * m)
                if entries[-1] <= 3 * n
            ]
            for a in pool:
                for b in pool:
                    out.cases += 1
                    seq = leq_sequence(a, b)
                    comp = leq_componentwise(a.entries, b.entries)
                    if seq != comp:
                        out.failures.append(
                            f"n={n} {a.entries} vs {b.entries}: "
                            f"sequence={seq} componentwise={comp}"
                        )
    return out


def _partitions_at_most(total: int, parts: int, bound: int) -> Iterator[tuple[int, ...]]:
    # weakly decreasing tuples of `parts` entries in [0, bound] summing to total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, bound), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions_at_most(total - first, parts - 1, first):
            yield (first,) + rest


def powersum_suite(max_mp: int = 3) -> SuiteResult:
    """Exact determinant identity: 1 on the full rectangle, 0 on every other
    partition of the same weight (each such mu has mu_m < p)."""
    out = SuiteResult("powersum_identity")
    for m in range(1, max_mp + 1):
        for p in range(1, max_mp + 1):
            n = m + p
            rect = (p,) * m
            for mu in _partitions_at_most(m * p, m, m * p):
                out.cases += 1
                val = powersum_determinant(mu, m, n)
                want = 1 if mu == rect else 0
                if val != want:
                    out.failures.append(f"m={m} p={p} mu={mu}: {val} != {want}")
    return out


def cover_soundness_suite(max_n: int, max_dim: int = 6) -> SuiteResult:
    """covers() matches the order-theoretic definition on small lower sets."""
    out = SuiteResult("cover_soundness")
    for n in range(2, min(max_n, 5) + 1):
        for m in range(1, n):
            pool = [
                CompositeIndex(entries, n) for entries in windowed_indices(n, m, max_dim)
            ]
            for a in pool:
                below = [b for b in pool if b != a and leq_componentwise(b.entries, a.entries)]
                for b in below:
                    out.cases += 1
                    strict_between = any(
                        leq_componentwise(b.entries, c.entries)
                        and leq_componentwise(c.entries, a.entries)
                        for c in below
                        if c != b
                    )
                    want = not strict_between
                    got = covers(a, b)
                    if got != want:
                        out.failures.append(
                            f"n={n} {a.entries} covers {b.entries}: "
                            f"got {got}, order says {want}"
                        )
    return out


def duality_rows(max_n: int, max_q: int = 2) -> list[dict]:
    """Informational comparison of deg(m, p, q) against deg(p, m, q); an
    observed pattern, reported but never asserted."""
    from .recurrence_degree import quot_degree

    rows = []
    for n in range(2, max_n + 1):
        for m in range(1, n // 2 + 1):
            p = n - m
            for q in range(max_q + 1):
                a = quot_degree(m, p, q)
                b = quot_degree(p, m, q)
                rows.append(
                    {
                        "m": str(m),
                        "p": str(p),
                        "q": str(q),
                        "deg_mpq": str(a),
                        "deg_pmq": str(b),
                        "equal": a == b,
                    }
                )
    return rows


def run_verify(
    max_n: int = 5,
    max_dim: int = 14,
    precision: int = DEFAULT_PRECISION,
    tolerance: float = DEFAULT_TOLERANCE,
    inject_fault: bool = False,
    duality: bool = False,
) -> VerifyReport:
    """Run every suite; with inject_fault, poison one chain memo entry so a
    healthy detector must report at least one failure."""
    memo: dict = {}
    if inject_fault:
        # the smallest nontrivial index: its true chain count is 1
        memo[((2,), 2)] = 2
    suites = [
        base_case_suite(min(max_n - 1, 4)),
        roundtrip_suite(max_n, max_dim),
        cross_method_suite(max_n, max_dim, precision, tolerance, memo),
        pieri_suite(max_n, max_dim, memo),
        chain_oracle_suite(max_n, max_dim, memo),
        cover_soundness_suite(max_n),
        order_agreement_suite(max_n),
        powersum_suite(min(max_n - 2, 3) if max_n >= 3 else 1),
    ]
    return VerifyReport(
        max_n=max_n,
        max_dim=max_dim,
        precision=precision,
        tolerance=tolerance,
        fault_injected=inject_fault,
        suites=suites,
        duality=duality_rows(max_n) if duality else None,
    )
