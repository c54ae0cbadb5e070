"""Coset-wise encoding: one parity word per function value.

For linear functions whose matrix has exactly l distinct non-zero columns,
unit vectors picked from those columns span a transversal of minimum-weight
coset representatives.  Messages then inherit the parity word of their
coset's representative, so a parity set designed for the q^l representatives
protects the whole space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distance import (
    DistanceMatrix,
    ParityCode,
    build_fdm,
    matrix_from_lists,
    verify_d_code,
)
from .errors import CodeNotFoundError, DecodingFailureError
from .fields import ENUMERATION_LIMIT, VectorIndex, hamming_distance
from .functions import (
    FunctionSpec,
    _require_linear,
    classify,
    coset_decomposition,
)
from .graph import FccEncoder, decode as graph_decode


@dataclass(frozen=True)
class SubspaceSelection:
    """A subspace of minimum-weight coset representatives.

    ``members`` lists the q^l representatives ordered so that member i
    truncates (to the kept coordinates ``unit_positions``) to the vector of
    canonical rank i in F_q^l; ``truncated`` holds those truncations and
    ``class_indices`` the coset class of each member.
    """

    f: FunctionSpec
    unit_positions: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    truncated: tuple[tuple[int, ...], ...]
    class_indices: tuple[int, ...]


def select_subspace_representatives(f: FunctionSpec) -> SubspaceSelection:
    """Choose unit vectors in distinct cosets and return their span.

    Requires the matrix of f to have exactly l distinct non-zero columns.
    For each distinct column value the unit at the last coordinate carrying
    that value is chosen (the unit of smallest canonical rank); their span
    consists of minimum-weight vectors, one per coset of q^l many.
    """
    _require_linear(f, "subspace representative selection")
    census = classify(f)
    if not census.unit_basis_class:
        raise ValueError(
            f"selection needs exactly l={f.l} distinct non-zero columns; "
            f"found {census.distinct_nonzero_columns}"
        )
    q, k, l = f.q, f.k, f.l
    assert f.matrix is not None
    chosen: dict[tuple[int, ...], int] = {}
    for pos in range(k):
        column = tuple(row[pos] for row in f.matrix)
        if any(column):
            chosen[column] = pos  # later positions overwrite: keep the last
    positions = tuple(sorted(chosen.values()))
    coeff_index = VectorIndex(q, l)
    members = []
    truncated = []
    for rank in range(q**l):
        coeffs = coeff_index.vector(rank)
        vec = [0] * k
        for c, pos in zip(coeffs, positions):
            vec[pos] = c
        members.append(tuple(vec))
        truncated.append(coeffs)
    dec = coset_decomposition(f)
    msg_index = VectorIndex(q, k)
    class_indices = tuple(dec.class_of[msg_index.rank(m)] for m in members)
    if len(set(class_indices)) != q**l:
        raise AssertionError("span members do not cover all cosets")
    return SubspaceSelection(
        f=f,
        unit_positions=positions,
        members=tuple(members),
        truncated=tuple(truncated),
        class_indices=class_indices,
    )


def cosetwise_requirements(f: FunctionSpec, t: int) -> DistanceMatrix:
    """Function-distance requirements reindexed by the representatives'
    truncation ranks, so row i constrains the parity word of representative i.
    """
    sel = select_subspace_representatives(f)
    fdm = build_fdm(f, t)
    return matrix_from_lists(
        [
            [fdm[ci][cj] for cj in sel.class_indices]
            for ci in sel.class_indices
        ],
        labels=sel.truncated,
    )


def build_cosetwise_encoder(
    f: FunctionSpec, t: int, parity_source: ParityCode
) -> FccEncoder:
    """Encoder assigning parity_source's word i to every message in the coset
    of representative i (representatives in truncation-rank order).

    The words are first checked against the function-distance requirements;
    a violating parity set is rejected with CodeNotFoundError.
    """
    sel = select_subspace_representatives(f)
    q, k, l = f.q, f.k, f.l
    if parity_source.q != q:
        raise ValueError("parity code and function disagree on the field size")
    if len(parity_source) != q**l:
        raise ValueError(
            f"need {q ** l} parity words (one per function value), "
            f"got {len(parity_source)}"
        )
    required = cosetwise_requirements(f, t)
    if not verify_d_code(parity_source, required):
        raise CodeNotFoundError(
            "parity words violate the function-distance requirements"
        )
    parity_by_class = {
        ci: parity_source.words[i] for i, ci in enumerate(sel.class_indices)
    }
    dec = coset_decomposition(f)
    parity = tuple(
        parity_by_class[dec.class_of[rank]] for rank in range(q**k)
    )
    return FccEncoder(f=f, t=t, r=parity_source.r, parity=parity)


def reduced_problem(f: FunctionSpec, t: int) -> DistanceMatrix:
    """Distance requirements left after coset-wise reduction: a q^l-by-q^l
    matrix with 2t everywhere off the diagonal.

    Valid when k >= q^l - 1 and every non-zero value of F_q^l appears as a
    column of f's matrix: every non-kernel coset then contains a unit vector,
    so all cross-coset function distances equal 1.
    """
    _require_linear(f, "reduced distance requirements")
    if t < 1:
        raise ValueError("t must be >= 1")
    census = classify(f)
    if not census.unit_distance_class:
        raise ValueError(
            "reduction needs k >= q^l - 1 and all non-zero values present "
            "among the matrix columns"
        )
    q, l = f.q, f.l
    size = q**l
    if q**f.k <= ENUMERATION_LIMIT:
        labels = coset_decomposition(f).labels
    else:
        label_index = VectorIndex(q, l)
        labels = tuple(label_index.vector(i) for i in range(size))
    entries = [
        [0 if i == j else 2 * t for j in range(size)] for i in range(size)
    ]
    return matrix_from_lists(entries, labels=labels)


def cosetwise_decode(E: FccEncoder, y: tuple[int, ...]):
    """Function value of the nearest codeword, enumerated coset by coset.

    Same contract as the generic decoder; the per-coset sweep reuses one
    parity-distance computation for all messages sharing a parity word.
    """
    q, k, r = E.f.q, E.f.k, E.r
    if len(y) != k + r:
        raise ValueError(f"received word must have length {k + r}")
    if any(not 0 <= d < q for d in y):
        raise ValueError(f"received word {y} has symbols outside F_{q}")
    head, tail = tuple(y[:k]), tuple(y[k:])
    dec = coset_decomposition(E.f)
    if any(
        E.parity[rank] != E.parity[ranks[0]]
        for ranks in dec.classes
        for rank in ranks
    ):
        # Not a coset-wise encoder; fall back to the generic decoder.
        return graph_decode(E, y)
    msg_index = VectorIndex(q, k)
    best_d = None
    best_label = None
    for label, ranks in zip(dec.labels, dec.classes):
        tail_d = hamming_distance(E.parity[ranks[0]], tail)
        if best_d is not None and tail_d >= best_d:
            continue
        for rank in ranks:
            d = tail_d + hamming_distance(msg_index.vector(rank), head)
            if best_d is None or d < best_d:
                best_d = d
                best_label = label
    if best_d is None or best_d > E.t:
        raise DecodingFailureError(
            f"no codeword within distance {E.t} of the received word"
        )
    return best_label
