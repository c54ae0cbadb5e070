"""Required-distance matrices and exact searches for parity codes meeting them.

A required-distance matrix D over indices 0..M-1 demands d_H(p_i, p_j) >=
D[i][j] for parity words p_i, p_j.  Two constructions are provided: the full
pairwise matrix over all q^k messages (entry [2t+1 - d_H]^+ wherever the
function values differ) and its image-level reduction built from minimum
cross-class distances.  N_q(D), the shortest word length admitting a code that
meets D, is computed by exact depth-first search at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from time import monotonic

from .errors import BudgetExceededError
from .fields import FieldVec, VectorIndex, hamming_distance
from .functions import FunctionSpec, coset_decomposition, function_distance

PAIRWISE_MATRIX_LIMIT = 4096
"""Largest q^k for which the full message-pairwise matrix is built."""

DEFAULT_MAX_ORDER = 20
"""Largest matrix order accepted by the exact N_q search by default."""


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric non-negative integer matrix of required pairwise distances.

    ``rows`` holds one bytes row per index (entries 0..255); ``labels`` names
    the indices — domain vectors for the message-pairwise matrix, image values
    for the function-distance matrix.
    """

    rows: tuple[bytes, ...]
    labels: tuple

    def __post_init__(self) -> None:
        m = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != m:
                raise ValueError(f"row {i} has length {len(row)}, expected {m}")
            if row[i] != 0:
                raise ValueError(f"diagonal entry ({i},{i}) must be 0")
        for i in range(m):
            for j in range(i + 1, m):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) differ")
        if self.labels and len(self.labels) != m:
            raise ValueError("labels must match the matrix order")

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> bytes:
        return self.rows[i]

    def max_entry(self) -> int:
        return max((max(row) for row in self.rows), default=0)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def matrix_from_lists(entries, labels=None) -> DistanceMatrix:
    """Build a DistanceMatrix from nested sequences of ints (entries 0..255)."""
    rows = []
    for row in entries:
        cells = [int(x) for x in row]
        if any(not 0 <= x <= 255 for x in cells):
            raise ValueError("matrix entries must lie in [0, 255]")
        rows.append(bytes(cells))
    if labels is None:
        labels = tuple(range(len(rows)))
    return DistanceMatrix(rows=tuple(rows), labels=tuple(labels))


def _check_t(f: FunctionSpec, t: int) -> None:
    if t < 1:
        raise ValueError(f"error weight t must be >= 1, got {t}")
    if 2 * t + 1 > 255:
        raise ValueError(f"2t+1 = {2 * t + 1} exceeds the entry range")


def build_drm(f: FunctionSpec, t: int) -> DistanceMatrix:
    """Message-pairwise required-distance matrix of order q^k.

    Entry (i, j) is [2t+1 - d_H(u_i, u_j)]^+ when f(u_i) != f(u_j) and 0
    otherwise, with rows and columns in canonical rank order.
    """
    _check_t(f, t)
    size = f.q**f.k
    if size > PAIRWISE_MATRIX_LIMIT:
        raise ValueError(
            f"q^k = {size} exceeds the pairwise-matrix limit {PAIRWISE_MATRIX_LIMIT}"
        )
    dec = coset_decomposition(f)
    cls = dec.class_of
    need = 2 * t + 1
    rows = [bytearray(size) for _ in range(size)]
    if f.q == 2:
        for i in range(size):
            row_i = rows[i]
            cls_i = cls[i]
            for j in range(i + 1, size):
                if cls[j] == cls_i:
                    continue
                gap = need - (i ^ j).bit_count()
                if gap > 0:
                    row_i[j] = gap
                    rows[j][i] = gap
    else:
        vectors = list(f.index.all_vectors())
        for i in range(size):
            row_i = rows[i]
            cls_i = cls[i]
            v_i = vectors[i]
            for j in range(i + 1, size):
                if cls[j] == cls_i:
                    continue
                gap = need - hamming_distance(v_i, vectors[j])
                if gap > 0:
                    row_i[j] = gap
                    rows[j][i] = gap
    labels = tuple(f.index.all_vectors())
    return DistanceMatrix(rows=tuple(bytes(r) for r in rows), labels=labels)


def build_fdm(f: FunctionSpec, t: int) -> DistanceMatrix:
    """Image-level required-distance matrix of order |Im(f)|.

    Entry (i, j) is [2t+1 - d_f]^+ off the diagonal, where d_f is the minimum
    Hamming distance between the classes of image values i and j; labels are
    the image values in first-appearance order.
    """
    _check_t(f, t)
    dec = coset_decomposition(f)
    m = len(dec)
    need = 2 * t + 1
    rows = [bytearray(m) for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            d = function_distance(f, dec.labels[i], dec.labels[j])
            gap = need - d
            if gap > 0:
                rows[i][j] = gap
                rows[j][i] = gap
    return DistanceMatrix(rows=tuple(bytes(r) for r in rows), labels=dec.labels)


@dataclass(frozen=True)
class ParityCode:
    """An ordered list of parity words over F_q, all of one length."""

    q: int
    r: int
    words: tuple[FieldVec, ...]

    def __post_init__(self) -> None:
        for w in self.words:
            if len(w) != self.r:
                raise ValueError(f"word {w} has length {len(w)}, expected {self.r}")
            if any(not 0 <= s < self.q for s in w):
                raise ValueError(f"word {w} has symbols outside [0, {self.q})")

    def __len__(self) -> int:
        return len(self.words)


def verify_d_code(code: ParityCode, D: DistanceMatrix) -> bool:
    """True iff the code's pairwise distances dominate D under its ordering."""
    if len(code) != D.order:
        raise ValueError(
            f"code has {len(code)} words but the matrix has order {D.order}"
        )
    for i in range(D.order):
        row = D[i]
        for j in range(i + 1, D.order):
            if row[j] and hamming_distance(code.words[i], code.words[j]) < row[j]:
                return False
    return True


@dataclass(frozen=True)
class NqSearchResult:
    """Outcome of the exact N_q search.

    ``found`` distinguishes success from exhausting r_cap (a proved negative
    up to the cap, not a budget failure); on success ``n`` is the smallest
    word length and ``witness`` a code meeting the matrix at that length.
    """

    found: bool
    n: int | None
    witness: ParityCode | None
    r_cap: int


def _search_at_length(
    D: DistanceMatrix, q: int, r: int, deadline: float | None = None
) -> ParityCode | None:
    """First code of length r meeting D in depth-first candidate-rank order,
    with the first word pinned to zero (translation symmetry)."""
    m = D.order
    index = VectorIndex(q, r) if r > 0 else None
    candidates = list(index.all_vectors()) if index else [()]
    chosen: list[FieldVec] = [(0,) * r]
    if m == 1:
        return ParityCode(q=q, r=r, words=tuple(chosen))
    trials = 0

    def extend(level: int) -> bool:
        nonlocal trials
        row = D[level]
        for cand in candidates:
            trials += 1
            if deadline is not None and trials & 4095 == 0 and monotonic() > deadline:
                raise BudgetExceededError(
                    "parity-code search exceeded the time budget"
                )
            ok = True
            for j in range(level):
                if row[j] and hamming_distance(cand, chosen[j]) < row[j]:
                    ok = False
                    break
            if ok:
                chosen.append(cand)
                if level + 1 == m or extend(level + 1):
                    return True
                chosen.pop()
        return False

    if extend(1):
        return ParityCode(q=q, r=r, words=tuple(chosen))
    return None


def n_q_exact(
    D: DistanceMatrix,
    q: int,
    r_cap: int | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
    deadline: float | None = None,
) -> NqSearchResult:
    """Smallest word length admitting a code that meets D, with a witness.

    Scans lengths upward from the largest entry of D (no shorter length can
    satisfy it), so the first success is minimal.  Exhausting r_cap yields a
    ``found=False`` result; matrices larger than ``max_order`` are refused,
    and running past ``deadline`` raises BudgetExceededError.
    """
    if r_cap is None:
        r_cap = 12 if q == 2 else 8
    if D.order > max_order:
        raise BudgetExceededError(
            f"matrix order {D.order} exceeds the search limit {max_order}"
        )
    start = D.max_entry()
    for r in range(start, r_cap + 1):
        witness = _search_at_length(D, q, r, deadline=deadline)
        if witness is not None:
            assert verify_d_code(witness, D)
            return NqSearchResult(found=True, n=r, witness=witness, r_cap=r_cap)
    return NqSearchResult(found=False, n=None, witness=None, r_cap=r_cap)


def binary_plotkin_bound(D: DistanceMatrix) -> Fraction:
    """Averaging lower bound on the binary N_2(D): (4/M^2) * sum of the
    above-diagonal entries for even order M, with M^2 - 1 replacing M^2 when
    M is odd.  The integer form is the ceiling of the returned rational."""
    m = D.order
    if m < 2:
        return Fraction(0)
    total = sum(sum(D[i][i + 1 :]) for i in range(m - 1))
    denom = m * m if m % 2 == 0 else m * m - 1
    return Fraction(4 * total, denom)
