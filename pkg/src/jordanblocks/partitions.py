"""Jordan partitions of tensor products of unipotent Jordan blocks.

Over a field of characteristic p, the tensor product J_m(1) ⊗ J_n(1) of two
unipotent Jordan blocks (m <= n) splits into Jordan blocks whose sizes form a
partition of m*n with exactly m parts.  This module computes that partition
with pure integer arithmetic: a case analysis on the base-p^k digits of m and
n yields a composition of m (the multiplicities of the distinct block sizes),
and a telescoping-sum formula turns the composition plus n into the block
sizes themselves.

Everything here is exact and fast enough for exhaustive sweeps; the matrix
oracle in :mod:`jordanblocks.oracle` provides the independent cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "MAX_BLOCK_SIZE",
    "Prime",
    "BlockPair",
    "RadixParams",
    "CaseId",
    "Composition",
    "JordanDecomposition",
    "as_prime",
    "radix_params",
    "classify_case",
    "reverse",
    "composition",
    "lambda_from_composition",
    "jordan_partition",
    "is_standard",
    "standard_predicate_p2",
    "clear_cache",
]

# Inputs are plain Python ints (no overflow), but unbounded m, n would let a
# stray CLI argument allocate absurd memo tables.  2^20 is far beyond any
# sweep we run.
MAX_BLOCK_SIZE = 1 << 20


def _is_prime(v: int) -> bool:
    if v < 2:
        return False
    if v < 4:
        return True
    if v % 2 == 0:
        return False
    f = 3
    while f * f <= v:
        if v % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Prime:
    """A prime characteristic, validated by trial division at construction."""

    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise TypeError(f"prime must be an int, got {self.value!r}")
        if not _is_prime(self.value):
            raise ValueError(f"{self.value} is not prime")

    def __int__(self) -> int:
        return self.value


_PRIME_CACHE: dict[int, Prime] = {}


def as_prime(p: int | Prime) -> Prime:
    """Coerce an int (or pass through a Prime), validating primality."""
    if isinstance(p, Prime):
        return p
    got = _PRIME_CACHE.get(p)
    if got is None:
        got = _PRIME_CACHE.setdefault(p, Prime(p))
    return got


@dataclass(frozen=True)
class BlockPair:
    """An ordered pair of block sizes with 1 <= m <= n."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < self.m:
            raise ValueError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        if self.n > MAX_BLOCK_SIZE:
            raise ValueError(f"block size {self.n} exceeds the supported bound {MAX_BLOCK_SIZE}")


@dataclass(frozen=True)
class RadixParams:
    """Digits of m and n in base p^k, where p^k <= n < p^(k+1).

    n = b*p^k + d with 0 < b < p and 0 <= d < p^k;
    m = a*p^k + c with 0 <= a < p and 0 <= c < p^k.
    """

    k: int
    a: int
    b: int
    c: int
    d: int


class CaseId(Enum):
    """Which of the six mutually exclusive recursion cases applies."""

    CASE1 = 1
    CASE2 = 2
    CASE3 = 3
    CASE4 = 4
    CASE5 = 5
    CASE6 = 6


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive integers; empty encodes a composition of 0."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        for part in self.parts:
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise ValueError(f"composition parts must be positive ints, got {self.parts!r}")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def is_all_ones(self) -> bool:
        return all(part == 1 for part in self.parts)


@dataclass(frozen=True)
class JordanDecomposition:
    """Multiplicity form of a Jordan partition: (multiplicity, size) pairs.

    Sizes are strictly decreasing.  ``n_context`` is the larger tensor factor
    the decomposition was computed for; with m = sum of multiplicities the
    sizes must total m * n_context, and the largest size lies in
    [n_context, m + n_context - 1].
    """

    pairs: tuple[tuple[int, int], ...]
    n_context: int

    def __post_init__(self) -> None:
        if not self.pairs:
            raise ValueError("decomposition must have at least one block size")
        for mult, size in self.pairs:
            if mult < 1 or size < 1:
                raise ValueError(f"multiplicities and sizes must be positive: {self.pairs!r}")
        sizes = [size for _, size in self.pairs]
        if any(x <= y for x, y in zip(sizes, sizes[1:])):
            raise ValueError(f"block sizes must strictly decrease: {sizes!r}")
        m = self.block_count
        n = self.n_context
        if m > n:
            raise ValueError(f"{m} blocks cannot come from a factor of size n={n}")
        if self.mass != m * n:
            raise ValueError(f"block sizes sum to {self.mass}, expected m*n = {m * n}")
        if not n <= sizes[0] <= m + n - 1:
            raise ValueError(f"largest block {sizes[0]} outside [{n}, {m + n - 1}]")

    @property
    def block_count(self) -> int:
        """Total number of Jordan blocks (the m of the pair)."""
        return sum(mult for mult, _ in self.pairs)

    @property
    def mass(self) -> int:
        return sum(mult * size for mult, size in self.pairs)

    def expanded(self) -> tuple[int, ...]:
        """The partition written out with repeats, weakly decreasing."""
        return tuple(
            itertools.chain.from_iterable([size] * mult for mult, size in self.pairs)
        )

    def multiplicities(self) -> Composition:
        return Composition(tuple(mult for mult, _ in self.pairs))


# ---------------------------------------------------------------------------
# Radix digits and case dispatch
# ---------------------------------------------------------------------------

def _radix(m: int, n: int, p: int) -> tuple[int, int, int, int, int, int]:
    """Return (k, p^k, a, b, c, d) for 1 <= m <= n."""
    k = 0
    pk = 1
    while pk * p <= n:
        pk *= p
        k += 1
    b, d = divmod(n, pk)
    a, c = divmod(m, pk)
    return k, pk, a, b, c, d


def _split(m: int, n: int, p: int):
    """Case number, emitted parts, and subproblems for one recursion step.

    Returns ``(case, emitted, children, mode)`` where ``children`` is a tuple
    of (m', n') subproblems, each with m' + n' < m + n, and ``mode`` says how
    their results are assembled:

    * ``"prefix"``     -- emitted ++ child0
    * ``"palindrome"`` -- child0 ++ emitted ++ reverse(child0) ++ child1
    * ``"reverse"``    -- reverse(child0)
    * ``"leaf"``       -- emitted
    """
    k, pk, a, b, c, d = _radix(m, n, p)
    pk1 = pk * p
    if m + n > pk1:
        return 1, (m + n - pk1,), ((pk1 - n, pk1 - m),), "prefix"
    if c + d > pk:
        top = (a + b + 1) * pk
        return 2, (c + d - pk,), ((top - n, top - m),), "prefix"
    if 1 <= c + d and a > 0:
        top = (a + b) * pk
        middle = (abs(c - d),) if c != d else ()
        return 3, middle, ((min(c, d), max(c, d)), (top - n, top - m)), "palindrome"
    if a == 0 and d > 0:
        n2 = b * pk - d
        # c + d <= p^k and b >= 1 guarantee m = c <= n2 here.
        if m > n2:
            raise RuntimeError(f"case dispatch violated m <= n' for (m={m}, n={n}, p={p})")
        return 4, (), ((m, n2),), "reverse"
    if a == 0 and d == 0:
        return 5, (m,), (), "leaf"
    if c == 0 and d == 0:
        return 6, (pk,), (((a - 1) * pk, (b - 1) * pk),), "prefix"
    raise RuntimeError(f"no case guard matched (m={m}, n={n}, p={p})")


def radix_params(m: int, n: int, p: int | Prime) -> RadixParams:
    """Base-p^k digits (k, a, b, c, d) of a pair 1 <= m <= n."""
    p = as_prime(p).value
    _check_pair(m, n)
    k, _, a, b, c, d = _radix(m, n, p)
    return RadixParams(k=k, a=a, b=b, c=c, d=d)


def classify_case(m: int, n: int, p: int | Prime) -> CaseId:
    """The unique recursion case that applies to (m, n, p), 1 <= m <= n."""
    p = as_prime(p).value
    _check_pair(m, n)
    return CaseId(_split(m, n, p)[0])


def _check_pair(m: int, n: int) -> None:
    BlockPair(m, n)  # raises with the right message


# ---------------------------------------------------------------------------
# The composition recursion
# ---------------------------------------------------------------------------

# Memo shared across calls; all writers compute identical values, so plain
# dict assignment (last write wins under the GIL) is safe concurrently.
_MEMO: dict[tuple[int, int, int], tuple[int, ...]] = {}


def clear_cache() -> None:
    """Drop the composition memo table (mainly for tests and memory control)."""
    _MEMO.clear()


def _composition_parts(m: int, n: int, p: int) -> tuple[int, ...]:
    """Iterative post-order evaluation of the recursion with memoization.

    An explicit stack instead of Python recursion: chains can be ~m+n deep,
    which overflows the interpreter stack long before the sizes get
    interesting.
    """
    memo = _MEMO
    root = (m, n, p)
    stack = [root]
    while stack:
        key = stack[-1]
        if key in memo:
            stack.pop()
            continue
        km, kn, kp = key
        if km == 0:
            memo[key] = ()
            stack.pop()
            continue
        _, emitted, children, mode = _split(km, kn, kp)
        child_keys = [(cm, cn, kp) for cm, cn in children]
        pending = [ck for ck in child_keys if ck not in memo]
        if pending:
            stack.extend(pending)
            continue
        if mode == "prefix":
            parts = emitted + memo[child_keys[0]]
        elif mode == "palindrome":
            inner = memo[child_keys[0]]
            parts = inner + emitted + inner[::-1] + memo[child_keys[1]]
        elif mode == "reverse":
            parts = memo[child_keys[0]][::-1]
        else:  # leaf
            parts = emitted
        memo[key] = parts
        stack.pop()
    return memo[root]


def composition(m: int, n: int, p: int | Prime) -> Composition:
    """Multiplicity composition of the Jordan partition for 0 <= m <= n.

    The result is a composition of m: its parts are the multiplicities of the
    distinct block sizes of J_m(1) ⊗ J_n(1) in characteristic p, largest size
    first.  m = 0 (equivalently n = 0) yields the empty composition.
    """
    p = as_prime(p).value
    if m < 0 or n < 0:
        raise ValueError(f"m and n must be nonnegative, got m={m}, n={n}")
    if m > n:
        raise ValueError(f"need m <= n, got m={m} > n={n}")
    if n > MAX_BLOCK_SIZE:
        raise ValueError(f"block size {n} exceeds the supported bound {MAX_BLOCK_SIZE}")
    return Composition(_composition_parts(m, n, p))


def reverse(comp: Composition) -> Composition:
    """The same parts in the opposite order."""
    return Composition(comp.parts[::-1])


def lambda_from_composition(n: int, comp: Composition) -> JordanDecomposition:
    """Recover the Jordan partition from n and its multiplicity composition.

    Block size i is ``n + (sum of later parts) - (sum of earlier parts)``;
    equivalently ``m + n - 2*(sum of earlier parts) - part_i``.  Both forms
    are computed and must agree.
    """
    parts = comp.parts
    if not parts:
        raise ValueError("cannot build a decomposition from the empty composition")
    m = sum(parts)
    if n < m:
        raise ValueError(f"composition of {m} does not fit a factor of size n={n}")
    head = 0  # sum of parts before i
    tail = m  # sum of parts from i on
    pairs = []
    for part in parts:
        tail -= part
        size = n + tail - head
        alt = m + n - 2 * head - part
        if size != alt:
            raise RuntimeError(f"size formulas disagree: {size} vs {alt}")
        pairs.append((part, size))
        head += part
    return JordanDecomposition(pairs=tuple(pairs), n_context=n)


def jordan_partition(m: int, n: int, p: int | Prime) -> JordanDecomposition:
    """Jordan block decomposition of J_m(1) ⊗ J_n(1) in characteristic p.

    Accepts the factors in either order (the tensor product is symmetric).
    """
    if m > n:
        m, n = n, m
    pair = BlockPair(m, n)
    comp = composition(pair.m, pair.n, p)
    return lambda_from_composition(pair.n, comp)


def is_standard(dec: JordanDecomposition, m: int, n: int) -> bool:
    """Whether the decomposition is the generic one: sizes m+n-1, m+n-3, ...

    The standard pattern has m distinct sizes stepping down by 2 from m+n-1.
    """
    if dec.block_count != m or dec.n_context != n:
        raise ValueError(
            f"decomposition has m={dec.block_count}, n={dec.n_context}; asked about ({m}, {n})"
        )
    expected = tuple(range(m + n - 1, n - m, -2))
    return dec.expanded() == expected


def standard_predicate_p2(m: int, n: int) -> bool:
    """Closed-form standardness test in characteristic 2 (no recursion).

    True exactly for m = 1; m = 2 with n odd; and m = 3 with n ≡ 2 (mod 4),
    n >= 6.  Never true for 4 <= m <= n.
    """
    _check_pair(m, n)
    if m == 1:
        return True
    if m == 2:
        return n % 2 == 1
    if m == 3:
        return n >= 6 and (n - 6) % 4 == 0
    return False
