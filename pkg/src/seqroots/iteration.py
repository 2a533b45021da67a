"""Power iteration on count vectors and exact complex root estimation.

Iterating the 2m x 2m integer matrix on an integer start vector makes the
pair ratios (u_j - i*v_j)/(u_{j+1} - i*v_{j+1}) converge to the root whose
shifted eigenvalue has the strictly largest modulus.  Estimates are kept as
exact Gaussian rationals; floating values appear only in stopping tests,
residuals and display.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .gaussian import GaussInt, GaussRational, gauss_divide, to_float
from .matrices import RealBlockMatrix, ZeroBeta, companion, complexify, shift
from .polynomial import Polynomial, evaluate_residual
from .rewriting import (
    CapExceeded,
    CountVector,
    cancel_conjugates,
    count,
    derive_rules,
    rewrite_word,
    word_from_counts,
)


class DimensionMismatch(ValueError):
    """Count vector length does not match the matrix dimension."""


class DegenerateDenominator(ZeroDivisionError):
    """The denominator pair of the ratio is (0, 0) at this step."""


class SolveStatus(Enum):
    CONVERGED = "CONVERGED"
    MAX_ITER = "MAX_ITER"
    NON_CONVERGENT = "NON_CONVERGENT"
    DEGENERATE = "DEGENERATE"


@dataclass(frozen=True, slots=True)
class ShiftParams:
    """Spectral shift alpha*I + beta*R; beta must be nonzero."""

    alpha: GaussInt
    beta: GaussInt = GaussInt(1, 0)

    def __post_init__(self) -> None:
        if self.beta.is_zero():
            raise ZeroBeta("beta must be nonzero")


@dataclass(frozen=True, slots=True)
class SolveOptions:
    """Knobs for the iteration loop.

    tol is a relative tolerance on successive estimate deltas, exact_iters
    forces a fixed number of steps (table reproduction), engine picks the
    matrix-vector path ("counts") or literal rewriting ("words").
    """

    tol: float = 1e-12
    stable_steps: int = 3
    residual_tol: float = 1e-8
    max_iter: int = 200
    dedupe_tol: float = 1e-6
    engine: str = "counts"
    exact_iters: int | None = None
    length_cap: int = 1_000_000
    initial_counts: CountVector | None = None


@dataclass(frozen=True, slots=True)
class IterationRecord:
    """Counts after k steps plus the ratio estimate, absent on degenerate steps."""

    k: int
    counts: CountVector
    estimate: GaussRational | None


@dataclass(frozen=True, slots=True)
class RootEstimate:
    value: GaussRational | None
    float_value: complex | None
    residual: float | None
    iterations: int
    status: SolveStatus
    records: tuple[IterationRecord, ...] = ()


@dataclass(frozen=True, slots=True)
class ScanHit:
    """One distinct root together with the shift that found it."""

    shift: ShiftParams
    estimate: RootEstimate


def step_counts(matrix: RealBlockMatrix, v: CountVector) -> CountVector:
    """Exact big-integer matrix-vector product."""
    if len(v) != matrix.dim:
        raise DimensionMismatch(f"vector of length {len(v)} against {matrix.dim}x{matrix.dim} matrix")
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in matrix.entries)


def estimate_root(v: CountVector, j: int) -> GaussRational:
    """Exact ratio (u_j - i*v_j)/(u_{j+1} - i*v_{j+1}) of adjacent pairs of v.

    j is 1-based and must satisfy 1 <= j <= m-1 for a length-2m vector.
    Raises DegenerateDenominator when the (j+1)-th pair is (0, 0).
    """
    m = len(v) // 2
    if not 1 <= j <= m - 1:
        raise ValueError(f"j must be in 1..{m - 1}, got {j}")
    num = GaussInt(v[2 * j - 2], -v[2 * j - 1])
    den = GaussInt(v[2 * j], -v[2 * j + 1])
    if den.is_zero():
        raise DegenerateDenominator(f"denominator pair at j={j + 1} is zero")
    return gauss_divide(num, den)


def _try_estimate(v: CountVector) -> GaussRational | None:
    try:
        return estimate_root(v, 1)
    except DegenerateDenominator:
        return None


def solve(p: Polynomial, shift_params: ShiftParams, opts: SolveOptions | None = None) -> RootEstimate:
    """Run the full pipeline on p and return the dominant-root estimate.

    Degree 1 returns -a1/a0 exactly with zero iterations.  Otherwise the
    companion matrix is shifted, complexified and iterated from (1, 0, ..., 0)
    (or opts.initial_counts).  Stops CONVERGED once opts.stable_steps
    consecutive defined estimates agree within opts.tol (relative) and the
    residual meets opts.residual_tol; NON_CONVERGENT when, after half the
    iteration budget, the recent estimates either scatter far beyond tol or
    have pinned to a value that is not a root; DEGENERATE if the count vector
    dies to zero; MAX_ITER otherwise.
    """
    opts = opts or SolveOptions()
    if p.degree == 1:
        value = gauss_divide(-p.coeffs[1], p.coeffs[0])
        f = to_float(value)
        return RootEstimate(value, f, evaluate_residual(p, f), 0, SolveStatus.CONVERGED)

    m = p.degree
    matrix = complexify(shift(companion(p), shift_params.alpha, shift_params.beta))
    dim = 2 * m
    v: CountVector = tuple(opts.initial_counts) if opts.initial_counts else (1,) + (0,) * (dim - 1)
    if len(v) != dim:
        raise DimensionMismatch(f"initial counts must have length {dim}")

    use_words = opts.engine == "words"
    if use_words:
        rules = derive_rules(matrix)
        word = word_from_counts(v, m)

    est = _try_estimate(v)
    records = [IterationRecord(0, v, est)]
    defined: list[complex] = [to_float(est)] if est is not None else []
    stable_run = 0
    status: SolveStatus | None = None
    forced = opts.exact_iters is not None
    limit = opts.exact_iters if forced else opts.max_iter

    k = 0
    while k < limit and status is None:
        k += 1
        if use_words:
            next_length = sum(len(rules.images[s]) for s in word.symbols)
            if next_length > opts.length_cap:
                raise CapExceeded([word], next_length, opts.length_cap)
            word = cancel_conjugates(rewrite_word(rules, word))
            v = count(word)
        else:
            v = step_counts(matrix, v)
        est = _try_estimate(v)
        records.append(IterationRecord(k, v, est))

        if est is not None:
            f = to_float(est)
            if defined:
                if abs(f - defined[-1]) <= opts.tol * max(1.0, abs(f)):
                    stable_run += 1
                else:
                    stable_run = 0
            defined.append(f)
            if (
                not forced
                and stable_run >= opts.stable_steps
                and evaluate_residual(p, f) <= opts.residual_tol
            ):
                status = SolveStatus.CONVERGED
                break

        if all(c == 0 for c in v):
            status = SolveStatus.DEGENERATE
            break

        if not forced and k >= opts.max_iter // 2 and len(defined) >= 8:
            window = defined[-8:]
            scale = max(1.0, max(abs(x) for x in window))
            spread = max(abs(a - b) for a in window for b in window)
            if spread >= 100.0 * opts.tol * scale:
                status = SolveStatus.NON_CONVERGENT
            elif (
                spread <= opts.tol * scale
                and evaluate_residual(p, window[-1]) > opts.residual_tol
            ):
                # The ratio has pinned to a non-root, the signature of tied
                # dominant moduli collapsing the iteration.
                status = SolveStatus.NON_CONVERGENT

    if status is None:
        if forced and defined and stable_run >= opts.stable_steps and (
            evaluate_residual(p, defined[-1]) <= opts.residual_tol
        ):
            status = SolveStatus.CONVERGED
        else:
            status = SolveStatus.MAX_ITER

    value = next((r.estimate for r in reversed(records) if r.estimate is not None), None)
    f = to_float(value) if value is not None else None
    residual = evaluate_residual(p, f) if f is not None else None
    return RootEstimate(value, f, residual, k, status, tuple(records))


def scan_shifts(p: Polynomial, radius: int = 2, opts: SolveOptions | None = None) -> list[ScanHit]:
    """Solve with every shift alpha in the integer box |re|,|im| <= radius,
    beta = 1, in lexicographic (re, im) order; keep converged results and drop
    duplicates whose floating values agree within opts.dedupe_tol."""
    opts = opts or SolveOptions()
    hits: list[ScanHit] = []
    for re_part in range(-radius, radius + 1):
        for im_part in range(-radius, radius + 1):
            params = ShiftParams(GaussInt(re_part, im_part))
            result = solve(p, params, opts)
            if result.status is not SolveStatus.CONVERGED:
                continue
            if result.residual is None or result.residual > opts.residual_tol:
                continue
            if all(
                abs(result.float_value - h.estimate.float_value) > opts.dedupe_tol
                for h in hits
            ):
                hits.append(ScanHit(params, result))
    return hits
