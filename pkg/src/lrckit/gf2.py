"""Dense GF(2) linear algebra and binary linear code primitives.

Matrices are immutable wrappers over numpy uint8 arrays; all elimination is
XOR based. Codes are given by parity-check matrices H: the code is the right
nullspace of H, the dual code is the row space of H.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import DimensionTooLarge, InvalidParams

__all__ = [
    "ENUMERATION_CAP",
    "INFINITE_DISTANCE",
    "BitMatrix",
    "CodewordSet",
    "rank",
    "rref",
    "nullspace_basis",
    "kronecker",
    "enumerate_codewords",
    "iter_codeword_blocks",
    "min_distance",
    "solve",
    "recovery_parity_word",
]

# Enumerating a code touches 2**dim words; past this the caller must opt in.
ENUMERATION_CAP = 25

# Minimum distance of the zero-dimensional code. Kept as a distinguished
# non-integer so distance-bound comparisons cannot silently treat it as data.
INFINITE_DISTANCE = math.inf

_BLOCK_BITS = 16


class BitMatrix:
    """Immutable dense binary matrix over GF(2)."""

    __slots__ = ("_a",)

    def __init__(self, entries) -> None:
        a = np.array(entries, dtype=np.uint8)
        if a.ndim != 2:
            raise InvalidParams("matrix entries must form a two-dimensional array")
        if a.shape[1] < 1:
            raise InvalidParams("matrix must have at least one column")
        if a.size and a.max() > 1:
            raise InvalidParams("matrix entries must be 0 or 1")
        a.setflags(write=False)
        self._a = a

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        if n < 1:
            raise InvalidParams("identity size must be positive")
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "BitMatrix":
        if rows < 1 or cols < 1:
            raise InvalidParams("ones matrix must have positive shape")
        return cls(np.ones((rows, cols), dtype=np.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def array(self) -> np.ndarray:
        """Read-only uint8 view of the entries."""
        return self._a

    def row(self, i: int) -> np.ndarray:
        return self._a[i]

    def row_support(self, i: int) -> tuple[int, ...]:
        """0-based column indices of the ones in row i."""
        return tuple(int(j) for j in np.nonzero(self._a[i])[0])

    def column_support(self, j: int) -> tuple[int, ...]:
        """0-based row indices of the ones in column j."""
        return tuple(int(i) for i in np.nonzero(self._a[:, j])[0])

    def __getitem__(self, idx):
        return self._a[idx]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self._a.shape == other._a.shape and np.array_equal(self._a, other._a)

    def __hash__(self) -> int:
        return hash((self._a.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def _as_array(matrix: BitMatrix | np.ndarray | Sequence) -> np.ndarray:
    if isinstance(matrix, BitMatrix):
        return matrix.array
    a = np.asarray(matrix, dtype=np.uint8)
    if a.ndim != 2:
        raise InvalidParams("expected a two-dimensional binary matrix")
    return a


def _rref(a: np.ndarray, pivot_cols: int | None = None) -> tuple[np.ndarray, tuple[int, ...]]:
    """In-place reduced row echelon form; pivots limited to the first
    ``pivot_cols`` columns (all columns if None). Returns (a, pivot tuple)."""
    rows, cols = a.shape
    limit = cols if pivot_cols is None else pivot_cols
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] ^= a[r]
        pivots.append(c)
        r += 1
    return a, tuple(pivots)


def rref(matrix: BitMatrix | np.ndarray) -> tuple[BitMatrix, tuple[int, ...]]:
    """Reduced row echelon form over GF(2) and the pivot column indices."""
    a, pivots = _rref(_as_array(matrix).copy())
    return BitMatrix(a), pivots


def rank(matrix: BitMatrix | np.ndarray) -> int:
    """Rank over GF(2), by Gaussian elimination."""
    _, pivots = _rref(_as_array(matrix).copy())
    return len(pivots)


def nullspace_basis(matrix: BitMatrix | np.ndarray) -> BitMatrix:
    """Basis of the right nullspace of H, one vector per row.

    Rows are ordered by their free (non-pivot) column, ascending; each basis
    vector has a 1 at its free column and zeros at all other free columns, so
    the basis is systematic on the free positions. A full-rank input yields a
    0-row result.
    """
    a = _as_array(matrix)
    reduced, pivots = _rref(a.copy())
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for ri, p in enumerate(pivots):
            basis[bi, p] = reduced[ri, f]
    return BitMatrix(basis)


def kronecker(a: BitMatrix | np.ndarray, b: BitMatrix | np.ndarray) -> BitMatrix:
    """Kronecker product; 0/1 entries stay 0/1 without reduction."""
    return BitMatrix(np.kron(_as_array(a), _as_array(b)))


@dataclass(frozen=True, eq=False)
class CodewordSet:
    """All codewords of a code, one per row, in information-vector order.

    Row i is the codeword of the message whose bits are the binary digits of
    i (first basis vector = most significant bit), so the all-zero word is
    always row 0 and the set is closed under XOR of rows.
    """

    length: int
    words: np.ndarray

    def __post_init__(self) -> None:
        if self.words.ndim != 2 or self.words.shape[1] != self.length:
            raise InvalidParams("codeword array shape does not match length")
        self.words.setflags(write=False)

    def __len__(self) -> int:
        return self.words.shape[0]

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.words)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CodewordSet):
            return NotImplemented
        return self.length == other.length and np.array_equal(self.words, other.words)


def _message_block(start: int, count: int, dim: int) -> np.ndarray:
    idx = np.arange(start, start + count, dtype=np.int64)
    shifts = np.arange(dim - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] >> shifts) & 1).astype(np.uint8)


def iter_codeword_blocks(
    matrix: BitMatrix | np.ndarray,
    max_dim: int = ENUMERATION_CAP,
    block_bits: int = _BLOCK_BITS,
) -> Iterator[np.ndarray]:
    """Yield the codewords of the nullspace of H in blocks of at most
    2**block_bits rows, in information-vector order."""
    a = _as_array(matrix)
    basis = nullspace_basis(a).array
    dim = basis.shape[0]
    if dim > max_dim:
        raise DimensionTooLarge(f"code dimension {dim} exceeds cap {max_dim}")
    if dim == 0:
        yield np.zeros((1, a.shape[1]), dtype=np.uint8)
        return
    total = 1 << dim
    step = 1 << min(block_bits, dim)
    for start in range(0, total, step):
        count = min(step, total - start)
        msgs = _message_block(start, count, dim)
        yield (msgs @ basis) & 1


def enumerate_codewords(
    matrix: BitMatrix | np.ndarray, max_dim: int = ENUMERATION_CAP
) -> CodewordSet:
    """Materialize all 2**(cols - rank) codewords of the nullspace of H.

    Raises DimensionTooLarge past ``max_dim``; memory is the caller's problem
    below it.
    """
    a = _as_array(matrix)
    blocks = list(iter_codeword_blocks(a, max_dim=max_dim))
    return CodewordSet(length=a.shape[1], words=np.vstack(blocks))


def min_distance(
    matrix: BitMatrix | np.ndarray, max_dim: int = ENUMERATION_CAP
) -> int | float:
    """Minimum nonzero codeword weight, by full enumeration.

    Returns INFINITE_DISTANCE for the zero-dimensional code.
    """
    a = _as_array(matrix)
    dim = a.shape[1] - rank(a)
    if dim == 0:
        return INFINITE_DISTANCE
    best: int | None = None
    first = True
    for block in iter_codeword_blocks(a, max_dim=max_dim):
        weights = block.sum(axis=1, dtype=np.int64)
        if first:
            weights = weights[1:]  # skip the all-zero word
            first = False
        if weights.size:
            w = int(weights.min())
            best = w if best is None else min(best, w)
    assert best is not None
    return best


def solve(a: BitMatrix | np.ndarray, b: Sequence[int] | np.ndarray) -> np.ndarray | None:
    """One solution x of A x = b over GF(2), or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    coeff = _as_array(a)
    rhs = np.asarray(b, dtype=np.uint8).reshape(-1, 1)
    if rhs.shape[0] != coeff.shape[0]:
        raise InvalidParams("right-hand side length does not match row count")
    aug = np.hstack([coeff.copy(), rhs])
    n = coeff.shape[1]
    reduced, pivots = _rref(aug, pivot_cols=n)
    nrank = len(pivots)
    # Inconsistent iff some zero-coefficient row still demands a 1.
    if np.any(reduced[nrank:, n]):
        return None
    x = np.zeros(n, dtype=np.uint8)
    for ri, p in enumerate(pivots):
        x[p] = reduced[ri, n]
    return x


def recovery_parity_word(
    matrix: BitMatrix | np.ndarray, target: int, helpers: Sequence[int]
) -> np.ndarray | None:
    """A row-space word w of H with w[target] = 1 and support within
    helpers + {target}, or None if no such parity check exists.

    ``target`` and ``helpers`` are 0-based column indices. Such a word
    certifies that coordinate ``target`` of every codeword is the XOR of the
    coordinates in w's support minus target.
    """
    a = _as_array(matrix)
    n = a.shape[1]
    if not 0 <= target < n:
        raise InvalidParams("target column out of range")
    allowed = np.zeros(n, dtype=bool)
    allowed[list(helpers)] = True
    allowed[target] = True
    # Fast path: a single row of H already works.
    for i in range(a.shape[0]):
        row = a[i]
        if row[target] and not np.any(row & ~allowed):
            return row.copy()
    # Otherwise solve for a combination u of rows: zero outside the allowed
    # columns, one at the target.
    outside = np.nonzero(~allowed)[0]
    system = np.vstack([a[:, outside].T, a[:, target][None, :]])
    rhs = np.zeros(outside.size + 1, dtype=np.uint8)
    rhs[-1] = 1
    u = solve(system, rhs)
    if u is None:
        return None
    return (u @ a) & 1
