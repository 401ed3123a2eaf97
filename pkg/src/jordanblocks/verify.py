"""Sweep suites cross-checking the recursion against its ground truths.

The suites compare the recursion with the matrix oracle pointwise, and with
the closed-form facts it must satisfy: the p = 2 standardness pattern, the
period-p^t behavior in n, the reflection symmetry around multiples of p^t,
and the standard-iff-all-multiplicities-one equivalence.

Each checker walks a deterministic grid of (m, n, p) triples, records every
disagreement it finds (up to a configurable cap) instead of aborting, and
returns a :class:`VerifyReport`.  Reports serialize to the JSON schema
``{suite, cases_checked, failures[], elapsed_ms}`` consumed by the CLI.

Suites are pure sweeps over pure functions; running one twice, or splitting a
grid across workers and merging in (m, n, p) order, yields identical counts
and counterexample lists.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Iterable

from .oracle import DEFAULT_MAX_DIM, oracle_jordan_partition
from .partitions import (
    as_prime,
    composition,
    is_standard,
    jordan_partition,
    lambda_from_composition,
    reverse,
    standard_predicate_p2,
)

__all__ = [
    "SUITE_NAMES",
    "DEFAULT_COUNTEREXAMPLE_CAP",
    "SweepSpec",
    "Failure",
    "VerifyReport",
    "check_oracle_agreement",
    "check_theorem1",
    "check_periodicity",
    "check_reflection",
    "check_corollary1",
    "check_invariants",
]

SUITE_NAMES = (
    "oracle",
    "theorem1",
    "periodicity",
    "reflection",
    "corollary1",
    "invariants",
)

DEFAULT_COUNTEREXAMPLE_CAP = 100


@dataclass(frozen=True)
class SweepSpec:
    """Bounds for a sweep: 1 <= m <= m_max, m <= n <= n_max, p in primes."""

    m_max: int
    n_max: int
    primes: tuple[int, ...] = (2,)
    suites: tuple[str, ...] = SUITE_NAMES

    def __post_init__(self) -> None:
        if self.m_max < 1 or self.n_max < self.m_max:
            raise ValueError(f"need 1 <= m_max <= n_max, got {self.m_max}, {self.n_max}")
        if not self.suites:
            raise ValueError("suite set must be nonempty")
        unknown = set(self.suites) - set(SUITE_NAMES)
        if unknown:
            raise ValueError(f"unknown suites {sorted(unknown)}; valid: {SUITE_NAMES}")
        for p in self.primes:
            as_prime(p)

    def triples(self) -> Iterable[tuple[int, int, int]]:
        """All (m, n, p) in the grid, sorted by (m, n, p)."""
        primes = tuple(sorted(self.primes))
        for m in range(1, self.m_max + 1):
            for n in range(m, self.n_max + 1):
                for p in primes:
                    yield m, n, p


@dataclass(frozen=True)
class Failure:
    """One counterexample, with enough context to replay it."""

    m: int
    n: int
    p: int
    expected: object
    actual: object

    def to_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "p": self.p,
                "expected": self.expected, "actual": self.actual}


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    cases_checked: int
    failures: tuple[Failure, ...]
    failure_count: int
    elapsed: float  # seconds

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases_checked": self.cases_checked,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }


class _Recorder:
    """Counts every failure but stores only the first ``cap`` of them."""

    def __init__(self, suite: str, cap: int):
        self.suite = suite
        self.cap = cap
        self.cases = 0
        self.count = 0
        self.kept: list[Failure] = []
        self.t0 = time.perf_counter()

    def case(self, ok: bool, make_failure) -> None:
        self.cases += 1
        if not ok:
            self.count += 1
            if len(self.kept) < self.cap:
                self.kept.append(make_failure())

    def report(self) -> VerifyReport:
        return VerifyReport(
            suite=self.suite,
            cases_checked=self.cases,
            failures=tuple(self.kept),
            failure_count=self.count,
            elapsed=time.perf_counter() - self.t0,
        )


def check_oracle_agreement(
    spec: SweepSpec,
    cap: int = DEFAULT_COUNTEREXAMPLE_CAP,
    max_dim: int = DEFAULT_MAX_DIM,
    method: str = "auto",
) -> VerifyReport:
    """Recursion-computed decomposition == matrix-rank decomposition, pointwise."""
    rec = _Recorder("oracle", cap)
    for m, n, p in spec.triples():
        want = jordan_partition(m, n, p).pairs
        got = oracle_jordan_partition(m, n, p, max_dim=max_dim, method=method).pairs
        rec.case(
            want == got,
            lambda m=m, n=n, p=p, want=want, got=got: Failure(
                m, n, p, expected=[list(x) for x in want], actual=[list(x) for x in got]
            ),
        )
    return rec.report()


def check_theorem1(
    m_max: int, n_max: int, cap: int = DEFAULT_COUNTEREXAMPLE_CAP
) -> VerifyReport:
    """At p = 2, computed standardness == the closed-form predicate."""
    rec = _Recorder("theorem1", cap)
    for n in range(1, n_max + 1):
        for m in range(1, min(m_max, n) + 1):
            want = standard_predicate_p2(m, n)
            got = is_standard(jordan_partition(m, n, 2), m, n)
            rec.case(
                want == got,
                lambda m=m, n=n, want=want, got=got: Failure(
                    m, n, 2, expected=want, actual=got
                ),
            )
    return rec.report()


def check_periodicity(
    m: int, t: int, p: int, n_max: int, cap: int = DEFAULT_COUNTEREXAMPLE_CAP
) -> VerifyReport:
    """composition(m, n, p) == composition(m, n + p^t, p) for m <= n <= n_max.

    Requires m <= p^t; the period claim does not hold below that.
    """
    p = as_prime(p).value
    period = p**t
    if m > period:
        raise ValueError(f"periodicity needs m <= p^t, got m={m} > {p}^{t} = {period}")
    rec = _Recorder("periodicity", cap)
    for n in range(m, n_max + 1):
        base = composition(m, n, p).parts
        shifted = composition(m, n + period, p).parts
        rec.case(
            base == shifted,
            lambda m=m, n=n, p=p, base=base, shifted=shifted: Failure(
                m, n, p, expected=list(base), actual=list(shifted)
            ),
        )
    return rec.report()


def check_reflection(
    m: int, t: int, p: int, cap: int = DEFAULT_COUNTEREXAMPLE_CAP
) -> VerifyReport:
    """composition(m, p^t + i, p) == reverse(composition(m, 2p^t - i, p)), 0 <= i <= p^t."""
    p = as_prime(p).value
    center = p**t
    if m > center:
        raise ValueError(f"reflection needs m <= p^t, got m={m} > {p}^{t} = {center}")
    rec = _Recorder("reflection", cap)
    for i in range(center + 1):
        left = composition(m, center + i, p).parts
        right = reverse(composition(m, 2 * center - i, p)).parts
        rec.case(
            left == right,
            lambda m=m, n=center + i, p=p, left=left, right=right: Failure(
                m, n, p, expected=list(left), actual=list(right)
            ),
        )
    return rec.report()


def check_corollary1(
    spec: SweepSpec, cap: int = DEFAULT_COUNTEREXAMPLE_CAP
) -> VerifyReport:
    """Standard decomposition <=> all multiplicities equal 1, over the grid."""
    rec = _Recorder("corollary1", cap)
    for m, n, p in spec.triples():
        comp = composition(m, n, p)
        by_partition = is_standard(lambda_from_composition(n, comp), m, n)
        by_composition = comp.is_all_ones()
        rec.case(
            by_partition == by_composition,
            lambda m=m, n=n, p=p, a=by_partition, b=by_composition: Failure(
                m, n, p, expected=a, actual=b
            ),
        )
    return rec.report()


_INVARIANT_PRIMES = (2, 3, 5, 7)


def check_invariants(
    n_max: int = 1024,
    primes: tuple[int, ...] = _INVARIANT_PRIMES,
    samples: int = 2000,
    seed: int = 0,
    cap: int = DEFAULT_COUNTEREXAMPLE_CAP,
) -> VerifyReport:
    """Structural invariants on seeded random triples (m <= n <= n_max).

    Per triple: composition parts are positive and sum to m; sizes strictly
    decrease; total mass is m*n; the largest size lies in [n, m+n-1]; both
    size formulas agree; and standardness matches the all-ones composition.
    """
    for p in primes:
        as_prime(p)
    rng = random.Random(seed)
    rec = _Recorder("invariants", cap)
    for _ in range(samples):
        n = rng.randint(1, n_max)
        m = rng.randint(1, n)
        p = rng.choice(primes)
        problems = _invariant_problems(m, n, p)
        rec.case(
            not problems,
            lambda m=m, n=n, p=p, problems=tuple(problems): Failure(
                m, n, p, expected="all invariants", actual=list(problems)
            ),
        )
    return rec.report()


def _invariant_problems(m: int, n: int, p: int) -> list[str]:
    problems = []
    comp = composition(m, n, p)
    if any(part < 1 for part in comp.parts):
        problems.append("nonpositive composition part")
    if comp.total != m:
        problems.append(f"composition sums to {comp.total}, not {m}")
    dec = lambda_from_composition(n, comp)
    sizes = [size for _, size in dec.pairs]
    if any(x <= y for x, y in zip(sizes, sizes[1:])) or sizes[-1] < 1:
        problems.append(f"sizes not strictly decreasing positive: {sizes}")
    if dec.mass != m * n:
        problems.append(f"mass {dec.mass} != {m * n}")
    if not n <= sizes[0] <= m + n - 1:
        problems.append(f"largest size {sizes[0]} outside [{n}, {m + n - 1}]")
    # the two equivalent size formulas, recomputed from scratch
    parts = comp.parts
    for i in range(len(parts)):
        head = sum(parts[:i])
        tail = sum(parts[i + 1 :])
        first = n + tail - head
        second = m + n - 2 * head - parts[i]
        if first != second or first != sizes[i]:
            problems.append(f"size formula mismatch at index {i}: {first}, {second}, {sizes[i]}")
            break
    if is_standard(dec, m, n) != comp.is_all_ones():
        problems.append("standardness disagrees with all-ones composition")
    return problems
