"""Verification and discovery of recovering-set families.

A recovering set for coordinate i is a set R with i not in R such that c_i is
determined by the restriction c_R for every codeword c; for a linear code this
holds exactly when some dual word has a 1 at i and support inside R + {i}.
A family assigns each coordinate t such sets, each of size at most r, with
pairwise intersections of size at most x.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import DimensionTooLarge, FamilyNotFound, InvalidParams
from .gf2 import BitMatrix, iter_codeword_blocks, rank, recovery_parity_word, rref

__all__ = [
    "ROWS_ONLY",
    "DUAL_ENUM",
    "BOUNDED_COMBOS",
    "AUTO",
    "DUAL_ENUM_RANK_CAP",
    "RecoveringFamily",
    "CoordinateCheck",
    "VerificationReport",
    "candidate_sets",
    "verify_family",
    "discover_family",
    "resolve_search_mode",
]

ROWS_ONLY = "rows-only"
DUAL_ENUM = "dual-enum"
BOUNDED_COMBOS = "bounded-combos"
AUTO = "auto"

# Dual enumeration walks 2**rank(H) words; refuse beyond this.
DUAL_ENUM_RANK_CAP = 20

# bounded-combos searches XORs of up to this many rows of H.
_COMBO_DEPTH = 3

# Deep separation checks enumerate 2**dim codewords; skip beyond this.
DEEP_CHECK_DIM_CAP = 20


@dataclass(frozen=True)
class RecoveringFamily:
    """Recovering sets per coordinate, 1-based.

    ``sets_by_coordinate[i - 1]`` lists the sets for coordinate i, in a fixed
    order. Sets never contain their own coordinate and are nonempty.
    """

    n: int
    sets_by_coordinate: tuple[tuple[frozenset[int], ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.sets_by_coordinate) != self.n:
            raise InvalidParams("family must list sets for each of the n coordinates")
        for i, sets in enumerate(self.sets_by_coordinate, start=1):
            for s in sets:
                if not s:
                    raise InvalidParams(f"coordinate {i}: empty recovering set")
                if i in s:
                    raise InvalidParams(f"coordinate {i}: set contains its own coordinate")
                if any(not 1 <= e <= self.n for e in s):
                    raise InvalidParams(f"coordinate {i}: set member out of range")


@dataclass(frozen=True)
class CoordinateCheck:
    """Per-coordinate verification record."""

    coordinate: int
    sets: tuple[frozenset[int], ...]
    max_size: int
    max_intersection: int


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    per_coordinate: tuple[CoordinateCheck, ...]
    failures: tuple[tuple[int, str], ...]
    deep_checked: bool


def _row_masks(h: BitMatrix) -> tuple[int, ...]:
    out = []
    for i in range(h.rows):
        mask = 0
        for j in h.row_support(i):
            mask |= 1 << j
        out.append(mask)
    return tuple(out)


@lru_cache(maxsize=32)
def _dual_word_masks(h: BitMatrix, mode: str) -> tuple[int, ...]:
    """Nonzero dual words of H as column bitmasks, per search mode.

    rows-only: the rows themselves. bounded-combos: XORs of up to 3 rows.
    dual-enum: the entire row space (requires rank <= DUAL_ENUM_RANK_CAP).
    """
    masks = _row_masks(h)
    words: set[int] = set()
    if mode == ROWS_ONLY:
        words.update(m for m in masks if m)
    elif mode == BOUNDED_COMBOS:
        for depth in range(1, _COMBO_DEPTH + 1):
            for combo in combinations(masks, depth):
                word = 0
                for m in combo:
                    word ^= m
                if word:
                    words.add(word)
    elif mode == DUAL_ENUM:
        r = rank(h)
        if r > DUAL_ENUM_RANK_CAP:
            raise DimensionTooLarge(
                f"dual enumeration needs rank <= {DUAL_ENUM_RANK_CAP}, got {r}"
            )
        reduced, pivots = rref(h)
        basis = _row_masks(reduced)[: len(pivots)]
        word = 0
        for g in range(1, 1 << r):
            word ^= basis[(g & -g).bit_length() - 1]
            words.add(word)
        words.discard(0)
    else:
        raise InvalidParams(f"unknown search mode {mode!r}")
    return tuple(sorted(words))


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j + 1)
        mask >>= 1
        j += 1
    return frozenset(out)


def candidate_sets(
    h: BitMatrix, i: int, r: int, mode: str = ROWS_ONLY
) -> tuple[frozenset[int], ...]:
    """Candidate recovering sets for 1-based coordinate i: supports of dual
    words of weight <= r + 1 containing i, minus i itself. Deduplicated and
    sorted lexicographically."""
    if not 1 <= i <= h.cols:
        raise InvalidParams(f"coordinate {i} out of range 1..{h.cols}")
    if r < 1:
        raise InvalidParams("locality must be positive")
    bit = 1 << (i - 1)
    found: set[frozenset[int]] = set()
    for word in _dual_word_masks(h, mode):
        if word & bit and word.bit_count() <= r + 1:
            found.add(_mask_to_set(word & ~bit))
    return tuple(sorted(found, key=sorted))


def resolve_search_mode(h: BitMatrix, mode: str) -> str:
    """Concrete search mode for this matrix; AUTO picks dual-enum when the
    rank cap allows (an exhaustive search), else bounded-combos."""
    if mode != AUTO:
        if mode not in (ROWS_ONLY, DUAL_ENUM, BOUNDED_COMBOS):
            raise InvalidParams(f"unknown search mode {mode!r}")
        return mode
    return DUAL_ENUM if rank(h) <= DUAL_ENUM_RANK_CAP else BOUNDED_COMBOS


def discover_family(
    h: BitMatrix, r: int, t: int, x: int, mode: str = AUTO
) -> RecoveringFamily:
    """Search a recovering-set family with parameters (r, t, x).

    Per coordinate, candidates are searched depth-first in lexicographic
    order, so the result is the lexicographically smallest family the mode
    can see. A candidate may repeat when its self-intersection obeys x.
    Raises FamilyNotFound (with the exhaustiveness of the search) on failure.
    """
    if t < 1 or x < 0:
        raise InvalidParams("availability must be positive and overlap nonnegative")
    resolved = resolve_search_mode(h, mode)
    exhaustive = resolved == DUAL_ENUM
    chosen_all = []
    for i in range(1, h.cols + 1):
        cands = candidate_sets(h, i, r, resolved)
        chosen = _pick_sets(cands, t, x)
        if chosen is None:
            raise FamilyNotFound(coordinate=i, exhaustive=exhaustive)
        chosen_all.append(chosen)
    return RecoveringFamily(n=h.cols, sets_by_coordinate=tuple(chosen_all))


def _pick_sets(
    cands: tuple[frozenset[int], ...], t: int, x: int
) -> tuple[frozenset[int], ...] | None:
    chosen: list[frozenset[int]] = []

    def descend(start: int) -> bool:
        if len(chosen) == t:
            return True
        for idx in range(start, len(cands)):
            s = cands[idx]
            if all(len(s & c) <= x for c in chosen):
                chosen.append(s)
                # Reuse of cands[idx] stays legal only if |s & s| <= x.
                nxt = idx if len(s) <= x else idx + 1
                if descend(nxt):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if descend(0) else None


def verify_family(
    h: BitMatrix,
    family: RecoveringFamily,
    r: int,
    t: int,
    x: int,
    deep: bool = False,
    deep_cap: int = DEEP_CHECK_DIM_CAP,
) -> VerificationReport:
    """Check a family against (r, t, x) over the code of H.

    Structural recoverability demands a dual word with support in R + {i}
    containing i. With ``deep`` and dimension <= deep_cap, additionally
    enumerates the code and checks that no codeword has c_i = 1 with c_R all
    zero, which for a linear code is exactly the statement that codewords
    differing at i also differ on R. Failures are data, not errors.
    """
    if family.n != h.cols:
        raise InvalidParams("family length does not match matrix columns")
    failures: list[tuple[int, str]] = []
    checks: list[CoordinateCheck] = []
    for i, sets in enumerate(family.sets_by_coordinate, start=1):
        if len(sets) != t:
            failures.append((i, f"expected {t} recovering sets, found {len(sets)}"))
        sizes = tuple(len(s) for s in sets)
        for j, size in enumerate(sizes, start=1):
            if size > r:
                failures.append((i, f"set {j} has size {size} > r={r}"))
        max_int = 0
        for a, b in combinations(range(len(sets)), 2):
            inter = len(sets[a] & sets[b])
            max_int = max(max_int, inter)
            if inter > x:
                failures.append(
                    (i, f"sets {a + 1} and {b + 1} intersect in {inter} > x={x}")
                )
        for j, s in enumerate(sets, start=1):
            word = recovery_parity_word(h, i - 1, [e - 1 for e in s])
            if word is None:
                failures.append((i, f"set {j} admits no parity word through {i}"))
        checks.append(
            CoordinateCheck(
                coordinate=i,
                sets=sets,
                max_size=max(sizes, default=0),
                max_intersection=max_int,
            )
        )
    deep_checked = False
    if deep:
        dim = h.cols - rank(h)
        if dim <= deep_cap:
            failures.extend(_separation_failures(h, family, dim))
            deep_checked = True
    ordered = tuple(sorted(failures))
    return VerificationReport(
        ok=not ordered,
        per_coordinate=tuple(checks),
        failures=ordered,
        deep_checked=deep_checked,
    )


def _separation_failures(
    h: BitMatrix, family: RecoveringFamily, dim: int
) -> list[tuple[int, str]]:
    """Coordinates whose sets fail codeword separation, by full enumeration.

    Streams the code once; for every (i, R) flags any codeword with a 1 at i
    and zeros on R. Equivalent to comparing all codeword pairs, since pairs
    violating separation differ by exactly such a codeword.
    """
    targets = []
    for i, sets in enumerate(family.sets_by_coordinate, start=1):
        for j, s in enumerate(sets, start=1):
            targets.append((i, j, np.array(sorted(e - 1 for e in s), dtype=np.intp)))
    bad: set[tuple[int, int]] = set()
    for block in iter_codeword_blocks(h, max_dim=dim):
        for i, j, cols in targets:
            if (i, j) in bad:
                continue
            hits = block[:, i - 1] == 1
            if not hits.any():
                continue
            if np.any(hits & (block[:, cols].max(axis=1) == 0)):
                bad.add((i, j))
    return [
        (i, f"set {j} fails codeword separation") for i, j in sorted(bad)
    ]
