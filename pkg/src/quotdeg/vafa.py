"""Degrees and correlators as fixed-point sums over roots of z^n = +-1.

The intersection numbers computed combinatorially elsewhere in this
package also arise as sums over m-element subsets of the n roots of
z^n + (-1)^m = 0, with each subset contributing a symmetric function of
its roots.  Everything here is evaluated in configurable-precision
complex arithmetic (mpmath, precision in bits, default 53 = double) with
a deterministic reduction order, then snapped to a nearby integer only
when the residual and imaginary part clear the tolerance.

The power-sum determinant at the bottom of the formulas is computed
exactly over the integers, giving an arithmetic-free consistency anchor
for the floating-point paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf, workprec

from .indices import InvalidIndexError, Partition, SchubertSymbol, partition_of

DEFAULT_PRECISION = 53
DEFAULT_TOLERANCE = 1e-6


class ToleranceError(ArithmeticError):
    """A numeric result failed the residual, reality, or rounding-safety check."""


class DimensionMismatchError(ValueError):
    """Requested exponents match no admissible total dimension."""


@dataclass(frozen=True)
class NumericResult:
    """An integer read off a floating-point sum, with its evidence.

    `raw` is the unrounded complex value (downcast to double for
    reporting), `residual` the modulus of raw minus the integer, `imag`
    the size of the imaginary part.  Instances exist only for sums that
    passed the checks; failures raise ToleranceError instead.
    """

    value: int
    raw: complex
    residual: float
    imag: float
    precision: int
    tolerance: float


@dataclass(frozen=True)
class LGRootSystem:
    """The n roots of z^n + (-1)^m = 0 at a fixed working precision."""

    m: int
    n: int
    precision: int
    roots: tuple


def lg_roots(m: int, n: int, precision: int = DEFAULT_PRECISION) -> LGRootSystem:
    """Roots of z^n = (-1)^(m+1): the n-th roots of unity for odd m,
    rotated by a half step for even m."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if precision < 4:
        raise ValueError(f"precision must be at least 4 bits, got {precision}")
    with workprec(precision):
        if m % 2:
            roots = tuple(mp.expjpi(mpf(2 * k) / n) for k in range(n))
        else:
            roots = tuple(mp.expjpi(mpf(2 * k + 1) / n) for k in range(n))
    return LGRootSystem(m, n, precision, roots)


def vandermonde(values) -> complex:
    """Product of pairwise differences v_j - v_k over j < k; 1 for a single value."""
    vals = tuple(values)
    prod = 1
    for j in range(len(vals)):
        for k in range(j + 1, len(vals)):
            prod = prod * (vals[j] - vals[k])
    return prod


def _det(rows):
    # Leibniz expansion; exact on ints, fine for the small m used here
    m = len(rows)
    total = 0
    for perm in itertools.permutations(range(m)):
        inv = sum(
            1 for a in range(m) for b in range(a + 1, m) if perm[a] > perm[b]
        )
        term = rows[0][perm[0]]
        for i in range(1, m):
            term = term * rows[i][perm[i]]
        total = total - term if inv % 2 else total + term
    return total


def _parts(mu, m: int) -> tuple[int, ...]:
    # normalize a Partition or bare sequence to exactly m weakly decreasing parts
    if isinstance(mu, Partition):
        parts = mu.parts
    else:
        parts = tuple(int(x) for x in mu)
    if len(parts) > m:
        if any(parts[m:]):
            raise ValueError(f"{parts} has more than {m} nonzero parts")
        parts = parts[:m]
    parts = parts + (0,) * (m - len(parts))
    if any(x < 0 for x in parts):
        raise ValueError(f"parts must be nonnegative: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must weakly decrease: {parts}")
    return parts


def schur_eval(values, mu) -> complex:
    """Schur polynomial at the given points, as a ratio of alternants."""
    vals = tuple(values)
    m = len(vals)
    parts = _parts(mu, m)
    for j in range(m):
        for k in range(j + 1, m):
            if vals[j] == vals[k]:
                raise ValueError("coincident values make the alternant ratio 0/0")
    num = _det([[v ** (parts[j] + m - 1 - j) for j in range(m)] for v in vals])
    den = _det([[v ** (m - 1 - j) for j in range(m)] for v in vals])
    return num / den


def power_sum(k: int, m: int, n: int) -> int:
    """Exact sum of k-th powers of the roots of z^n = (-1)^(m+1):
    zero unless n divides k = j*n, and then n * (-1)^(j*(m-1))."""
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    j, r = divmod(k, n)
    if r:
        return 0
    return n * (-1) ** (j * (m - 1))


def powersum_determinant(mu, m: int, n: int) -> Fraction:
    """det[p(mu_j + m + i - j)] / n^m, exactly.

    Equals 1 when mu is the full m x (n - m) rectangle and 0 for every
    other mu of the same weight; this is the closed-form value of the
    subset sum defining the degree of a point, so it anchors the
    floating-point evaluation with integer arithmetic.
    """
    parts = _parts(mu, m)
    rows = [
        [power_sum(parts[j] + m + i - j, m, n) for j in range(m)]
        for i in range(m)
    ]
    return Fraction(_det(rows), n**m)


def _finalize(total, precision: int, tolerance: float) -> NumericResult:
    re, im = total.real, total.imag
    rounded = int(mp.nint(re))
    if abs(rounded) >= 2 ** (precision - 1):
        raise ToleranceError(
            f"|{rounded}| is too large to round safely at {precision} bits; "
            "raise the precision"
        )
    residual = float(abs(total - rounded))
    imag = float(abs(im))
    if residual > tolerance or imag > tolerance:
        raise ToleranceError(
            f"sum {complex(total)} is not within {tolerance} of an integer "
            f"(residual {residual}, imaginary part {imag})"
        )
    return NumericResult(
        value=rounded,
        raw=complex(total),
        residual=residual,
        imag=imag,
        precision=precision,
        tolerance=tolerance,
    )


def _kahan_sum(terms):
    total = mpc(0)
    comp = mpc(0)
    for t in terms:
        y = t - comp
        tmp = total + y
        comp = (tmp - total) - y
        total = tmp
    return total


def _root_system(m: int, n: int, precision: int | None, roots: LGRootSystem | None):
    if roots is not None:
        if (roots.m % 2, roots.n) != (m % 2, n):
            raise ValueError("supplied root system does not match m, n")
        if precision is not None and precision != roots.precision:
            raise ValueError("supplied root system has a different precision")
        return roots
    return lg_roots(m, n, DEFAULT_PRECISION if precision is None else precision)


def _degree_summand(qs, parts: tuple[int, ...], exponent: int, powers=None):
    """One subset's contribution: (prod q)(sum q)^E Delta^2 s_mu, computed
    without division as Delta * det[q_i ^ (mu_j + m + 1 - j)].

    `qs` is the subset; `powers` optionally maps each root to its
    precomputed power list.  Symmetric in the subset, degenerate subsets
    contribute 0 through the Delta factor.
    """
    m = len(qs)
    delta = vandermonde(qs)
    if powers is None:
        rows = [[q ** (parts[j] + m - j) for j in range(m)] for q in qs]
    else:
        rows = [[powers[q][parts[j] + m - j] for j in range(m)] for q in qs]
    s = qs[0]
    for q in qs[1:]:
        s = s + q
    return delta * _det(rows) * s**exponent


def vi_degree(
    columns,
    d: int,
    m: int,
    p: int,
    precision: int | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
    roots: LGRootSystem | None = None,
) -> NumericResult:
    """Degree of the subvariety named by (columns; d) as a fixed-point sum.

    Sums (prod q)(sum q)^E Delta^2 s_mu over m-subsets of the roots, with
    E = |columns| + n*d the subvariety's dimension and mu the column set's
    complementary partition, then scales by (-1)^(m(m-1)/2) / n^m.
    """
    cols = tuple(columns.columns) if isinstance(columns, SchubertSymbol) else tuple(
        int(c) for c in columns
    )
    if len(cols) != m:
        raise InvalidIndexError(f"expected {m} columns, got {cols}")
    if d < 0:
        raise InvalidIndexError(f"shift must be nonnegative, got {d}")
    n = m + p
    mu = partition_of(SchubertSymbol(cols, d), p)
    exponent = m * p - mu.weight + n * d
    sys = _root_system(m, n, precision, roots)
    with workprec(sys.precision):
        maxpow = (mu.parts[0] if mu.parts else 0) + m
        powers = {}
        for q in sys.roots:
            row = [mpc(1)]
            for _ in range(maxpow):
                row.append(row[-1] * q)
            powers[q] = row
        total = _kahan_sum(
            _degree_summand(subset, mu.parts, exponent, powers)
            for subset in itertools.combinations(sys.roots, m)
        )
        total = total * (-1) ** (m * (m - 1) // 2) / mpf(n) ** m
        return _finalize(total, sys.precision, tolerance)


@dataclass(frozen=True)
class CorrelatorSpec:
    """Exponents a_1..a_m of the generator classes, with the order q they pin.

    The weighted total sum(l * a_l) must equal m*p + n*q for a nonnegative
    integer q; from_powers infers q or raises DimensionMismatchError.
    """

    powers: tuple[int, ...]
    m: int
    p: int
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "powers", tuple(int(a) for a in self.powers))
        if len(self.powers) != self.m:
            raise ValueError(f"expected {self.m} exponents, got {self.powers}")
        if any(a < 0 for a in self.powers):
            raise ValueError(f"exponents must be nonnegative: {self.powers}")
        weight = sum(l * a for l, a in enumerate(self.powers, start=1))
        if self.q < 0 or weight != self.m * self.p + (self.m + self.p) * self.q:
            raise DimensionMismatchError(
                f"sum(l * a_l) = {weight} does not equal {self.m * self.p} + "
                f"{self.m + self.p} * {self.q}"
            )

    @classmethod
    def from_powers(cls, powers, m: int, p: int) -> "CorrelatorSpec":
        powers = tuple(int(a) for a in powers)
        if len(powers) != m:
            raise ValueError(f"expected {m} exponents, got {powers}")
        if any(a < 0 for a in powers):
            raise ValueError(f"exponents must be nonnegative: {powers}")
        n = m + p
        weight = sum(l * a for l, a in enumerate(powers, start=1))
        q, r = divmod(weight - m * p, n)
        if r or q < 0:
            raise DimensionMismatchError(
                f"sum(l * a_l) = {weight} is not {m * p} + {n}*q for any q >= 0"
            )
        return cls(powers, m, p, q)


def _elementary_all(qs):
    # e_0..e_m of the subset via incremental expansion of prod(1 + q_i t)
    e = [mpc(1)] + [mpc(0)] * len(qs)
    for idx, q in enumerate(qs, start=1):
        for k in range(idx, 0, -1):
            e[k] = e[k] + q * e[k - 1]
    return e


def _correlator_summand(qs, powers: tuple[int, ...]):
    """One subset's contribution: prod e_l(q)^a_l * (prod q) * Delta^2."""
    e = _elementary_all(qs)
    term = vandermonde(qs) ** 2 * e[len(qs)]
    for l, a in enumerate(powers, start=1):
        if a:
            term = term * e[l] ** a
    return term


def vi_correlator(
    spec: CorrelatorSpec,
    precision: int | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
    roots: LGRootSystem | None = None,
) -> NumericResult:
    """Genus-zero correlator of powers of the generator classes.

    Each critical subset contributes the class values times the inverse
    Hessian (prod q) Delta^2 / n^m; the global sign is (-1)^(m(m-1)/2).
    """
    m, p = spec.m, spec.p
    n = m + p
    sys = _root_system(m, n, precision, roots)
    with workprec(sys.precision):
        total = _kahan_sum(
            _correlator_summand(subset, spec.powers)
            for subset in itertools.combinations(sys.roots, m)
        )
        total = total * (-1) ** (m * (m - 1) // 2) / mpf(n) ** m
        return _finalize(total, sys.precision, tolerance)
