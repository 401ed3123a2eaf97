"""Brute-force Jordan type of J_m(1) ⊗ J_n(1) by linear algebra over GF(p).

This is the independent ground truth for :mod:`jordanblocks.partitions`: build
the Kronecker product of two unipotent Jordan blocks, subtract the identity to
get a nilpotent matrix N, and read the Jordan type off the rank sequence
rank(N^0), rank(N^1), ... — the first differences of the ranks are the
conjugate of the block-size partition.

Two routes to the rank sequence are provided:

* :func:`rank_sequence_of_nilpotent` materializes each power N^j by iterated
  multiplication and ranks it.  Transparent, but cubic per power.
* :func:`tensor_rank_sequence` exploits that row(N^(j+1)) = row-span of
  E_j @ N for any row basis E_j of row(N^j), so it carries an echelonized row
  basis forward instead of full powers, and applies N through its
  shift-operator structure in O(dim) per row.  Same ranks, orders of
  magnitude faster; the two routes are differentially tested.

Ranks over GF(2) use rows bit-packed into uint64 words; other primes use one
residue per int64 entry.  The elimination kernels are numba-compiled.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from numba import njit

from .partitions import JordanDecomposition, Prime, as_prime

__all__ = [
    "DEFAULT_MAX_DIM",
    "GfMatrix",
    "RankSequence",
    "unipotent_jordan_block",
    "kronecker",
    "rank_gfp",
    "rank_sequence_of_nilpotent",
    "tensor_rank_sequence",
    "partition_from_ranks",
    "oracle_rank_sequence",
    "oracle_jordan_partition",
]

# Kronecker products have dimension m*n; refuse anything past this unless the
# caller raises the bound explicitly (memory grows quadratically in it).
DEFAULT_MAX_DIM = 10_000

# Dense float64 matmul is exact only while inner products stay below 2^53.
_EXACT_LIMIT = 1 << 53


class GfMatrix:
    """Dense matrix over GF(p): int64 entries, row-major, reduced mod p."""

    __slots__ = ("data", "p")

    def __init__(self, data, p: int | Prime):
        self.p = as_prime(p).value
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-D, got shape {arr.shape}")
        self.data = np.ascontiguousarray(arr % self.p)

    @classmethod
    def identity(cls, size: int, p: int | Prime) -> "GfMatrix":
        return cls(np.eye(size, dtype=np.int64), p)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GfMatrix):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.data, other.data)

    def __matmul__(self, other: "GfMatrix") -> "GfMatrix":
        if self.p != other.p:
            raise ValueError(f"mixed characteristics {self.p} and {other.p}")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.data.shape} @ {other.data.shape}")
        return GfMatrix(_matmul_mod(self.data, other.data, self.p), self.p)

    def __sub__(self, other: "GfMatrix") -> "GfMatrix":
        if self.p != other.p:
            raise ValueError(f"mixed characteristics {self.p} and {other.p}")
        if self.data.shape != other.data.shape:
            raise ValueError(f"shape mismatch {self.data.shape} - {other.data.shape}")
        return GfMatrix(self.data - other.data, self.p)

    def __repr__(self) -> str:
        return f"GfMatrix({self.rows}x{self.cols} over GF({self.p}))"

    def to_lists(self) -> list[list[int]]:
        return self.data.tolist()


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # BLAS float64 is exact here because every product sums fewer than
    # 2^53 / (p-1)^2 terms; guard anyway so a huge p cannot corrupt silently.
    if (p - 1) * (p - 1) * a.shape[1] >= _EXACT_LIMIT:
        raise ValueError(f"p={p} too large for exact float64 accumulation at this size")
    prod = a.astype(np.float64) @ b.astype(np.float64)
    return prod.astype(np.int64) % p


# ---------------------------------------------------------------------------
# Elimination kernels
# ---------------------------------------------------------------------------

@njit(cache=True)
def _echelon_packed(M, ncols):  # pragma: no cover - numba-compiled
    """In-place row echelon of a GF(2) matrix with bit-packed rows.

    Returns the rank; rows [0, rank) end up as the echelonized nonzero rows.
    """
    nrows, nwords = M.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        w = col >> 6
        bit = np.uint64(1) << np.uint64(col & 63)
        piv = -1
        for r in range(rank, nrows):
            if M[r, w] & bit:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for t in range(w, nwords):
                tmp = M[rank, t]
                M[rank, t] = M[piv, t]
                M[piv, t] = tmp
        for r in range(rank + 1, nrows):
            if M[r, w] & bit:
                for t in range(w, nwords):
                    M[r, t] ^= M[rank, t]
        rank += 1
    return rank


@njit(cache=True)
def _echelon_modp(M, p):  # pragma: no cover - numba-compiled
    """In-place row echelon over GF(p) on int64 entries in [0, p). Returns rank."""
    nrows, ncols = M.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for r in range(rank, nrows):
            if M[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for t in range(col, ncols):
                tmp = M[rank, t]
                M[rank, t] = M[piv, t]
                M[piv, t] = tmp
        # pivot^(p-2) mod p is the inverse (p prime)
        inv = np.int64(1)
        base = M[rank, col]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        if inv != 1:
            for t in range(col, ncols):
                M[rank, t] = (M[rank, t] * inv) % p
        for r in range(rank + 1, nrows):
            f = M[r, col]
            if f != 0:
                for t in range(col, ncols):
                    M[r, t] = (M[r, t] - f * M[rank, t]) % p
        rank += 1
    return rank


def _pack_rows(data: np.ndarray) -> np.ndarray:
    """Pack a 0/1 int matrix into uint64 words, 64 columns per word, LSB first."""
    nrows, ncols = data.shape
    nwords = max(1, (ncols + 63) // 64)
    packed = np.packbits(data.astype(np.uint8), axis=1, bitorder="little")
    if packed.shape[1] < nwords * 8:
        packed = np.pad(packed, ((0, 0), (0, nwords * 8 - packed.shape[1])))
    return np.ascontiguousarray(packed).view(np.uint64)


def rank_gfp(A: GfMatrix) -> int:
    """Rank of A over GF(p); the input matrix is not modified."""
    if A.p == 2:
        return int(_echelon_packed(_pack_rows(A.data), A.cols))
    return int(_echelon_modp(A.data.copy(), A.p))


# ---------------------------------------------------------------------------
# Jordan blocks, Kronecker products, rank sequences
# ---------------------------------------------------------------------------

def unipotent_jordan_block(size: int, p: int | Prime) -> GfMatrix:
    """size x size matrix with 1 on the diagonal and the superdiagonal."""
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    block = np.eye(size, dtype=np.int64)
    block += np.eye(size, k=1, dtype=np.int64)
    return GfMatrix(block, p)


def kronecker(A: GfMatrix, B: GfMatrix, max_dim: int = DEFAULT_MAX_DIM) -> GfMatrix:
    """Kronecker product A ⊗ B over the common GF(p)."""
    if A.p != B.p:
        raise ValueError(f"mixed characteristics {A.p} and {B.p}")
    out_rows = A.rows * B.rows
    if out_rows > max_dim or A.cols * B.cols > max_dim:
        raise ValueError(
            f"Kronecker dimension {out_rows} exceeds the size bound {max_dim}"
        )
    return GfMatrix(np.kron(A.data, B.data), A.p)


@dataclass(frozen=True)
class RankSequence:
    """ranks[j] = rank(N^j) for a nilpotent N: strictly decreasing to a final 0."""

    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        rs = self.ranks
        if len(rs) < 2 or rs[-1] != 0:
            raise ValueError(f"rank sequence must end at 0: {rs!r}")
        for i in range(len(rs) - 1):
            if rs[i] <= rs[i + 1]:
                raise ValueError(f"ranks must strictly decrease to 0: {rs!r}")

    @property
    def dimension(self) -> int:
        return self.ranks[0]

    def __iter__(self):
        return iter(self.ranks)


def rank_sequence_of_nilpotent(N: GfMatrix) -> RankSequence:
    """Ranks of N^0, N^1, ... down to 0, by iterated multiplication.

    Every intermediate power is needed, so powers are built as
    N^(j+1) = N^j @ N rather than by repeated squaring.  Raises if the ranks
    have not reached 0 after dim steps (N was not nilpotent).
    """
    if N.rows != N.cols:
        raise ValueError(f"need a square matrix, got {N.rows}x{N.cols}")
    dim = N.rows
    ranks = [dim]
    power = N
    for _ in range(dim):
        r = rank_gfp(power)
        ranks.append(r)
        if r == 0:
            return RankSequence(tuple(ranks))
        power = power @ N
    raise ValueError(f"matrix is not nilpotent over GF({N.p})")


def partition_from_ranks(rs: RankSequence) -> tuple[int, ...]:
    """Block-size partition whose power-ranks are ``rs``, weakly decreasing.

    The j-th first difference of the ranks counts the blocks of size >= j;
    those counts must themselves be weakly decreasing for a partition to
    exist.
    """
    ranks = rs.ranks
    counts = [ranks[j] - ranks[j + 1] for j in range(len(ranks) - 1)]
    for j in range(len(counts) - 1):
        if counts[j] < counts[j + 1]:
            raise ValueError(f"rank differences must weakly decrease: {ranks!r}")
    parts = tuple(
        sum(1 for c in counts if c >= i) for i in range(1, counts[0] + 1)
    )
    return parts


# ---------------------------------------------------------------------------
# Row-flag rank sequences driven by the shift structure of the tensor product
# ---------------------------------------------------------------------------
#
# Index the tensor basis by (i1, i2) -> q = i1*n + i2.  With S the one-step
# shift on each factor, N = S⊗I + I⊗S + S⊗S, so a row vector v maps to
#   (v @ N)[q] = v[q - n] + v[q - 1]' + v[q - n - 1]'
# where the primed terms only flow within a row of the (i1, i2) grid, i.e.
# sources with i2 == n-1 are masked out before the +1 / +(n+1) shifts.


def _shift_words(E: np.ndarray, s: int) -> np.ndarray:
    """Shift every packed row of E left by s bit positions (toward higher q)."""
    nwords = E.shape[1]
    ws, bs = divmod(s, 64)
    out = np.zeros_like(E)
    if ws >= nwords:
        return out
    if bs == 0:
        out[:, ws:] = E[:, : nwords - ws]
    else:
        out[:, ws:] = E[:, : nwords - ws] << np.uint64(bs)
        if nwords - ws - 1 > 0:
            out[:, ws + 1 :] |= E[:, : nwords - ws - 1] >> np.uint64(64 - bs)
    return out


def _packed_masks(m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    dim = m * n
    nwords = max(1, (dim + 63) // 64)
    inner = np.ones(nwords * 64, dtype=np.uint8)
    inner[dim:] = 0
    inner[n - 1 : dim : n] = 0  # sources on the last grid column
    valid = np.ones(nwords * 64, dtype=np.uint8)
    valid[dim:] = 0
    pack = lambda bits: np.packbits(bits, bitorder="little").view(np.uint64)
    return pack(inner), pack(valid)


def _apply_rows_packed(E, n, inner_mask, valid_mask):
    masked = E & inner_mask
    out = _shift_words(E, n) ^ _shift_words(masked, 1) ^ _shift_words(masked, n + 1)
    out &= valid_mask
    return out


def _apply_rows_modp(E: np.ndarray, m: int, n: int, p: int) -> np.ndarray:
    grid = E.reshape(E.shape[0], m, n)
    out = np.zeros_like(grid)
    out[:, 1:, :] += grid[:, :-1, :]
    out[:, :, 1:] += grid[:, :, :-1]
    out[:, 1:, 1:] += grid[:, :-1, :-1]
    out %= p
    return out.reshape(E.shape[0], m * n)


def tensor_rank_sequence(
    m: int, n: int, p: int | Prime, max_dim: int = DEFAULT_MAX_DIM
) -> RankSequence:
    """Rank sequence of N = J_m(1) ⊗ J_n(1) - I without materializing powers.

    Carries an echelonized basis of the row space of N^j forward through one
    application of N per step.  Produces exactly the sequence of
    :func:`rank_sequence_of_nilpotent` on the same matrix.
    """
    p = as_prime(p).value
    if m < 1 or n < 1:
        raise ValueError(f"block sizes must be positive, got ({m}, {n})")
    dim = m * n
    if dim > max_dim:
        raise ValueError(f"tensor dimension {dim} exceeds the size bound {max_dim}")
    if p == 2:
        inner_mask, valid_mask = _packed_masks(m, n)
        basis = np.zeros((dim, inner_mask.size), dtype=np.uint64)
        idx = np.arange(dim)
        basis[idx, idx // 64] = np.uint64(1) << (idx % 64).astype(np.uint64)
        apply_rows = lambda E: _apply_rows_packed(E, n, inner_mask, valid_mask)
        echelon = lambda E: int(_echelon_packed(E, dim))
    else:
        basis = np.eye(dim, dtype=np.int64)
        apply_rows = lambda E: _apply_rows_modp(E, m, n, p)
        echelon = lambda E: int(_echelon_modp(E, p))
    rows = apply_rows(basis)  # rows of N itself
    ranks = [dim]
    while True:
        r = echelon(rows)
        ranks.append(r)
        if r == 0:
            return RankSequence(tuple(ranks))
        if len(ranks) > dim + 1:
            raise ValueError("rank sequence failed to reach 0")  # unreachable
        rows = apply_rows(np.ascontiguousarray(rows[:r]))


# ---------------------------------------------------------------------------
# The oracle proper
# ---------------------------------------------------------------------------

def oracle_rank_sequence(
    m: int,
    n: int,
    p: int | Prime,
    max_dim: int = DEFAULT_MAX_DIM,
    method: str = "auto",
) -> RankSequence:
    """Rank sequence of the nilpotent part of J_m(1) ⊗ J_n(1) over GF(p).

    ``method`` is ``"dense"`` (explicit Kronecker matrix and iterated powers),
    ``"flag"`` (row-basis propagation), or ``"auto"`` (dense only for small
    dimensions, where its transparency is free).
    """
    p = as_prime(p).value
    if m < 1 or n < 1:
        raise ValueError(f"block sizes must be positive, got ({m}, {n})")
    dim = m * n
    if dim > max_dim:
        raise ValueError(f"tensor dimension {dim} exceeds the size bound {max_dim}")
    if method == "auto":
        method = "dense" if dim <= 256 else "flag"
    if method == "flag":
        return tensor_rank_sequence(m, n, p, max_dim=max_dim)
    if method != "dense":
        raise ValueError(f"unknown method {method!r}")
    product = kronecker(
        unipotent_jordan_block(m, p), unipotent_jordan_block(n, p), max_dim=max_dim
    )
    nilpotent = product - GfMatrix.identity(dim, p)
    return rank_sequence_of_nilpotent(nilpotent)


def oracle_jordan_partition(
    m: int,
    n: int,
    p: int | Prime,
    max_dim: int = DEFAULT_MAX_DIM,
    method: str = "auto",
) -> JordanDecomposition:
    """Jordan decomposition of J_m(1) ⊗ J_n(1) over GF(p), by matrix ranks.

    Accepts the factors in either order; the Kronecker product is built
    exactly as given (the two orders are permutation-similar, which the test
    suite exercises).
    """
    ranks = oracle_rank_sequence(m, n, p, max_dim=max_dim, method=method)
    expanded = partition_from_ranks(ranks)
    pairs = tuple((len(list(g)), size) for size, g in itertools.groupby(expanded))
    return JordanDecomposition(pairs=pairs, n_context=max(m, n))
