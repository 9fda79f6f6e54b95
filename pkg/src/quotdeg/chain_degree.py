"""Degrees as counts of saturated chains up from the bottom index.

The degree of the subvariety named by a windowed index alpha equals the
number of maximal chains in the componentwise order below alpha.  Every
cover step decrements a single entry, so the count satisfies a sum over
lower covers; degree_chain evaluates that sum with an explicit worklist
(no recursion depth limit), enumerate_chains lists the chains themselves,
and degree_bruteforce recounts paths by plain depth-first walking upward
from the bottom, sharing no code with the worklist.

Note the bottom (1, ..., m) is automatically <= any valid index: strictly
increasing positive entries force alpha_l >= l, so there is no reachable
"empty lower set" case; tuples failing validation raise instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .indices import CompositeIndex, _decrement_tuples, _require_window, dimension

Chain = tuple[CompositeIndex, ...]

DEFAULT_CHAIN_CAP = 100_000
DEFAULT_BRUTEFORCE_BOUND = 10

MemoTable = dict[tuple[tuple[int, ...], int], int]


def degree_chain(alpha: CompositeIndex, memo: MemoTable | None = None) -> int:
    """Number of saturated chains from (1, ..., m) up to alpha.

    Pass a dict as `memo` to reuse partial counts across calls; keys are
    (entries, n) so one table can serve several periods.
    """
    _require_window(alpha)
    if memo is None:
        memo = {}
    n = alpha.n
    key = (alpha.entries, n)
    if key in memo:
        return memo[key]
    bottom = tuple(range(1, alpha.m + 1))

    # collect everything reachable by decrements, stopping at memoized leaves
    seen = {alpha.entries}
    pending = [alpha.entries]
    while pending:
        cur = pending.pop()
        if (cur, n) in memo or cur == bottom:
            continue
        for dec in _decrement_tuples(cur, n):
            if dec not in seen:
                seen.add(dec)
                pending.append(dec)

    # fill in increasing dimension order; decrements always come first
    for cur in sorted(seen, key=lambda t: (sum(t), t)):
        k = (cur, n)
        if k in memo:
            continue
        if cur == bottom:
            memo[k] = 1
        else:
            memo[k] = sum(memo[(dec, n)] for dec in _decrement_tuples(cur, n))
    return memo[key]


@dataclass(frozen=True)
class ChainEnumeration:
    """Chains listed up to a cap, plus the exact total regardless of the cap."""

    chains: tuple[Chain, ...]
    total: int
    capped: bool


def _upward_steps(
    cur: tuple[int, ...], target: tuple[int, ...], n: int
) -> list[tuple[int, ...]]:
    # single-entry increments staying componentwise below target and in-window
    out = []
    m = len(cur)
    for l in range(m):
        v = cur[l] + 1
        if v > target[l]:
            continue
        if l + 1 < m and v >= cur[l + 1]:
            continue
        t = cur[:l] + (v,) + cur[l + 1 :]
        if t[-1] - t[0] >= n:
            continue
        out.append(t)
    out.sort()
    return out


def _iter_chain_tuples(target: tuple[int, ...], n: int):
    # yields chains bottom -> target as tuples of entry tuples, in lex order
    bottom = tuple(range(1, len(target) + 1))
    if bottom == target:
        yield (bottom,)
        return
    stack: list[tuple[tuple[int, ...], ...]] = [(bottom, iter(_upward_steps(bottom, target, n)))]
    while stack:
        cur, it = stack[-1]
        nxt = next(it, None)
        if nxt is None:
            stack.pop()
        elif nxt == target:
            yield tuple(frame[0] for frame in stack) + (target,)
        else:
            stack.append((nxt, iter(_upward_steps(nxt, target, n))))


def enumerate_chains(alpha: CompositeIndex, cap: int = DEFAULT_CHAIN_CAP) -> ChainEnumeration:
    """List the saturated chains below alpha in lexicographic order.

    At most `cap` chains are materialized; `total` is always the exact
    count and `capped` flags a truncated listing.
    """
    _require_window(alpha)
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    total = degree_chain(alpha)
    chains = []
    for tup in _iter_chain_tuples(alpha.entries, alpha.n):
        if len(chains) >= cap:
            break
        chains.append(tuple(CompositeIndex(t, alpha.n) for t in tup))
    return ChainEnumeration(tuple(chains), total, total > len(chains))


def degree_bruteforce(alpha: CompositeIndex, max_dim: int = DEFAULT_BRUTEFORCE_BOUND) -> int:
    """Uncached path count from the bottom, as an oracle for degree_chain.

    Walks upward one increment at a time with no memo table, so its cost
    is the degree itself; refuses indices of dimension above max_dim.
    """
    _require_window(alpha)
    dim = dimension(alpha)
    if dim > max_dim:
        raise ValueError(f"dimension {dim} exceeds the brute-force bound {max_dim}")
    target = alpha.entries
    n = alpha.n
    bottom = tuple(range(1, alpha.m + 1))

    def count(cur: tuple[int, ...]) -> int:
        if cur == target:
            return 1
        return sum(count(t) for t in _upward_steps(cur, target, n))

    return count(bottom)
