"""Function specifications, coset decompositions, weight statistics, and classes.

A function f: F_q^k -> Im(f) is given either by a full-rank l x k matrix over
F_q (linear mode: values are length-l vectors) or by an explicit table over
all q^k inputs (table mode: values are opaque integer labels).

The image values of f are ordered by *first appearance* while walking the
domain in canonical rank order.  That ordering indexes every function-distance
matrix and every coset-wise structure in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fields import (
    ENUMERATION_LIMIT,
    FieldVec,
    PrimeField,
    VectorIndex,
    hamming_distance,
    hamming_weight,
    matrix_rank,
    vec_sub,
)


@dataclass(frozen=True)
class FunctionSpec:
    """The function under protection.

    Parameters
    ----------
    q : prime field size.
    k : domain length.
    mode : "linear" or "table".
    matrix : linear mode only — l rows of k symbols; must have rank l.
    table : table mode only — q^k integer labels in canonical domain order.
    """

    q: int
    k: int
    mode: str
    matrix: tuple[tuple[int, ...], ...] | None = None
    table: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        PrimeField(self.q)
        if self.k < 1:
            raise ValueError(f"domain length must be positive, got {self.k}")
        if self.mode == "linear":
            if self.matrix is None or self.table is not None:
                raise ValueError("linear mode requires a matrix and no table")
            # An empty matrix (l = 0) is the constant function.
            for row in self.matrix:
                if len(row) != self.k:
                    raise ValueError(
                        f"matrix row length {len(row)} does not match k={self.k}"
                    )
                if any(not 0 <= s < self.q for s in row):
                    raise ValueError(f"matrix entries must lie in [0, {self.q})")
            l = len(self.matrix)
            if l > self.k:
                raise ValueError(f"matrix has more rows ({l}) than columns ({self.k})")
            if matrix_rank(self.q, self.matrix) != l:
                raise ValueError("matrix rows must be linearly independent over F_q")
        elif self.mode == "table":
            if self.table is None or self.matrix is not None:
                raise ValueError("table mode requires a table and no matrix")
            if len(self.table) != self.q**self.k:
                raise ValueError(
                    f"table length {len(self.table)} != q^k = {self.q ** self.k}"
                )
        else:
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def l(self) -> int:
        """Image dimension (linear mode only)."""
        if self.mode != "linear":
            raise ValueError("image dimension is defined for linear mode only")
        assert self.matrix is not None
        return len(self.matrix)

    @property
    def index(self) -> VectorIndex:
        return VectorIndex(self.q, self.k)

    def eval(self, u: FieldVec):
        """Value of the function at ``u``.

        Linear mode returns the length-l vector F @ u; table mode returns the
        stored integer label.
        """
        if len(u) != self.k:
            raise ValueError(f"expected length {self.k}, got {len(u)}")
        if self.mode == "linear":
            assert self.matrix is not None
            return tuple(
                sum(c * s for c, s in zip(row, u)) % self.q for row in self.matrix
            )
        assert self.table is not None
        return self.table[self.index.rank(u)]


def linear_function(q: int, rows, k: int | None = None) -> FunctionSpec:
    """Convenience constructor for a linear FunctionSpec.

    ``k`` is inferred from the first row; it must be given explicitly for the
    constant function (no rows).
    """
    matrix = tuple(tuple(int(s) % q for s in row) for row in rows)
    if matrix:
        k = len(matrix[0])
    elif k is None:
        raise ValueError("k is required when the matrix has no rows")
    return FunctionSpec(q=q, k=k, mode="linear", matrix=matrix)


def table_function(q: int, k: int, labels) -> FunctionSpec:
    """Convenience constructor for a table FunctionSpec."""
    return FunctionSpec(q=q, k=k, mode="table", table=tuple(int(v) for v in labels))


@dataclass(frozen=True)
class CosetDecomposition:
    """Partition of F_q^k into the level sets of f.

    ``labels`` holds the image values in first-appearance order; ``classes[i]``
    holds the member ranks of label i in ascending order; ``class_of[rank]``
    maps a domain rank to its class index.  For linear f the classes are the
    cosets of the kernel and class 0 is the kernel itself.
    """

    q: int
    k: int
    labels: tuple
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def index_of(self, value) -> int:
        """Class index of an image value."""
        try:
            return self._label_index()[value]
        except KeyError:
            raise ValueError(f"value {value!r} is not in the image") from None

    def _label_index(self) -> dict:
        cached = getattr(self, "_label_index_cache", None)
        if cached is None:
            cached = {v: i for i, v in enumerate(self.labels)}
            object.__setattr__(self, "_label_index_cache", cached)
        return cached


@lru_cache(maxsize=128)
def coset_decomposition(f: FunctionSpec) -> CosetDecomposition:
    """Group the domain by function value, classes ordered by first appearance."""
    size = f.q**f.k
    if size > ENUMERATION_LIMIT:
        raise ValueError(f"q^k = {size} exceeds the enumeration limit")
    labels: list = []
    classes: list[list[int]] = []
    seen: dict = {}
    class_of = [0] * size
    for rank, u in enumerate(f.index.all_vectors()):
        value = f.eval(u)
        idx = seen.get(value)
        if idx is None:
            idx = len(labels)
            seen[value] = idx
            labels.append(value)
            classes.append([])
        classes[idx].append(rank)
        class_of[rank] = idx
    return CosetDecomposition(
        q=f.q,
        k=f.k,
        labels=tuple(labels),
        classes=tuple(tuple(c) for c in classes),
        class_of=tuple(class_of),
    )


def image_size(f: FunctionSpec) -> int:
    """Number of distinct function values."""
    return len(coset_decomposition(f))


def _require_linear(f: FunctionSpec, what: str) -> None:
    if f.mode != "linear":
        raise ValueError(f"{what} is defined for linear functions only")


def kernel_weight_distribution(f: FunctionSpec) -> dict[int, int]:
    """Count kernel vectors by Hamming weight (linear mode only)."""
    _require_linear(f, "kernel weight distribution")
    dec = coset_decomposition(f)
    idx = f.index
    counts: dict[int, int] = {}
    for rank in dec.classes[dec.class_of[0]]:
        w = hamming_weight(idx.vector(rank))
        counts[w] = counts.get(w, 0) + 1
    return counts


def kernel_weight_sum(f: FunctionSpec) -> int:
    """Sum of Hamming weights over the kernel (linear mode only)."""
    return sum(w * c for w, c in kernel_weight_distribution(f).items())


def function_distance(f: FunctionSpec, a, b) -> int:
    """Minimum Hamming distance between the level sets of values ``a`` and ``b``.

    For linear f this is the minimum weight of the class of ``a - b``; for
    table mode it is a direct minimum over cross pairs.
    """
    dec = coset_decomposition(f)
    ia, ib = dec.index_of(a), dec.index_of(b)
    if ia == ib:
        return 0
    idx = f.index
    if f.mode == "linear":
        diff = vec_sub(f.q, a, b)
        members = dec.classes[dec.index_of(diff)]
        return min(hamming_weight(idx.vector(r)) for r in members)
    best = f.k
    members_b = [idx.vector(r) for r in dec.classes[ib]]
    for ra in dec.classes[ia]:
        va = idx.vector(ra)
        for vb in members_b:
            d = hamming_distance(va, vb)
            if d < best:
                best = d
                if best == 1:
                    return 1
    return best


def min_weight_representatives(f: FunctionSpec) -> list[FieldVec]:
    """One minimum-weight member per class, in class (label) order.

    Ties are broken toward the lowest canonical rank, which makes the
    selection deterministic.  Linear mode only.
    """
    _require_linear(f, "minimum-weight representative selection")
    dec = coset_decomposition(f)
    idx = f.index
    reps = []
    for members in dec.classes:
        best_rank = min(members, key=lambda r: (hamming_weight(idx.vector(r)), r))
        reps.append(idx.vector(best_rank))
    return reps


def class_min_weights(f: FunctionSpec) -> list[int]:
    """Minimum Hamming weight of each class, in class order (linear mode)."""
    return [hamming_weight(v) for v in min_weight_representatives(f)]


def count_min_weight_cosets(f: FunctionSpec, i: int) -> int:
    """Number of classes whose minimum Hamming weight equals ``i``.

    ``i`` must lie in [1, k].  For i = 1 this counts the classes reachable by
    some weight-1 vector (any non-zero scalar in one coordinate counts).
    """
    _require_linear(f, "class minimum-weight census")
    if not 1 <= i <= f.k:
        raise ValueError(f"weight {i} out of range [1, {f.k}]")
    return sum(1 for w in class_min_weights(f) if w == i)


@dataclass(frozen=True)
class FunctionClass:
    """Structural classification of a linear function.

    ``unit_basis_class``: the matrix has exactly l distinct non-zero columns,
    so minimum-weight class representatives can be chosen as the span of l
    unit vectors (one per distinct column).

    ``unit_distance_class``: k >= q^l - 1 and the matrix has at least
    q^l - 1 distinct non-zero columns, i.e. every non-zero image value appears
    as a column.  Each non-kernel class then contains a weight-1 vector, so
    every pair of distinct classes lies at function distance 1 and the
    function-distance matrix is constant 2t off the diagonal.
    """

    distinct_nonzero_columns: int
    unit_basis_class: bool
    unit_distance_class: bool


def classify(f: FunctionSpec) -> FunctionClass:
    """Classify a linear function by its column census."""
    _require_linear(f, "classification")
    assert f.matrix is not None
    columns = [tuple(row[j] for row in f.matrix) for j in range(f.k)]
    nonzero = {c for c in columns if any(s != 0 for s in c)}
    l = f.l
    return FunctionClass(
        distinct_nonzero_columns=len(nonzero),
        unit_basis_class=(len(nonzero) == l),
        unit_distance_class=(f.k >= f.q**l - 1 and len(nonzero) >= f.q**l - 1),
    )
