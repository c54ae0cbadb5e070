"""Prime-field scalars and vectors, Hamming metrics, and the canonical vector order.

Every matrix, graph, and file in this package indexes length-n vectors over
F_q by their canonical rank: the integer whose base-q digits (most significant
first) are the vector's symbols.  ``VectorIndex`` realises that bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

#: Hard cap on how many vectors enumerate_vectors will materialise.
ENUMERATION_LIMIT = 2**24

FieldVec = tuple[int, ...]


def is_prime(n: int) -> bool:
    """Return True when ``n`` is a prime integer."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic modulo a prime ``q``.

    Composite moduli are rejected: all results in this package are stated for
    prime fields only.
    """

    q: int

    def __post_init__(self) -> None:
        if not is_prime(self.q):
            raise ValueError(f"field size must be prime, got {self.q}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        """Multiplicative inverse of a non-zero element."""
        if a % self.q == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return pow(a, self.q - 2, self.q)

    def elements(self) -> range:
        return range(self.q)


@dataclass(frozen=True)
class VectorIndex:
    """Bijection between ranks ``0..q^n - 1`` and length-``n`` vectors over F_q.

    Rank ``i`` corresponds to the n-digit base-q representation of ``i`` with
    the most significant digit first, so rank 0 is the zero vector and, e.g.,
    rank 5 at (q=2, n=4) is 0101.
    """

    q: int
    n: int

    def __post_init__(self) -> None:
        if not is_prime(self.q):
            raise ValueError(f"field size must be prime, got {self.q}")
        if self.n < 0:
            raise ValueError(f"vector length must be non-negative, got {self.n}")

    def __len__(self) -> int:
        return self.q**self.n

    def rank(self, v: FieldVec) -> int:
        """Canonical rank of vector ``v``."""
        if len(v) != self.n:
            raise ValueError(f"expected length {self.n}, got {len(v)}")
        r = 0
        for s in v:
            if not 0 <= s < self.q:
                raise ValueError(f"symbol {s} out of range for F_{self.q}")
            r = r * self.q + s
        return r

    def vector(self, rank: int) -> FieldVec:
        """Vector whose canonical rank is ``rank``."""
        if not 0 <= rank < len(self):
            raise ValueError(f"rank {rank} out of range [0, {len(self)})")
        digits = [0] * self.n
        for i in range(self.n - 1, -1, -1):
            rank, digits[i] = divmod(rank, self.q)
        return tuple(digits)

    def all_vectors(self):
        """Iterate every vector in canonical (lexicographic) order."""
        return product(range(self.q), repeat=self.n)


def hamming_weight(x: FieldVec) -> int:
    """Number of non-zero symbols in ``x``."""
    return sum(1 for s in x if s != 0)


def hamming_distance(x: FieldVec, y: FieldVec) -> int:
    """Number of coordinates where ``x`` and ``y`` disagree."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(1 for a, b in zip(x, y) if a != b)


def vec_add(q: int, x: FieldVec, y: FieldVec) -> FieldVec:
    """Symbol-wise sum of ``x`` and ``y`` mod q."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return tuple((a + b) % q for a, b in zip(x, y))


def vec_sub(q: int, x: FieldVec, y: FieldVec) -> FieldVec:
    """Symbol-wise difference of ``x`` and ``y`` mod q."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return tuple((a - b) % q for a, b in zip(x, y))


def vec_scale(q: int, c: int, x: FieldVec) -> FieldVec:
    """Scalar multiple ``c * x`` mod q."""
    return tuple((c * s) % q for s in x)


def enumerate_vectors(q: int, n: int) -> list[FieldVec]:
    """All vectors of length ``n`` over F_q in canonical order.

    Refuses to materialise more than ``ENUMERATION_LIMIT`` vectors.
    """
    idx = VectorIndex(q, n)
    if len(idx) > ENUMERATION_LIMIT:
        raise ValueError(
            f"q^n = {q}^{n} exceeds the enumeration limit {ENUMERATION_LIMIT}"
        )
    return list(idx.all_vectors())


def hamming_ball_size(q: int, n: int, m: int) -> int:
    """Exact number of vectors within Hamming distance ``m`` of a fixed center.

    Equals sum over i <= min(m, n) of C(n, i) * (q-1)^i; exact integer
    arithmetic.  A radius of n or more counts the whole space.
    """
    if m < 0:
        raise ValueError(f"radius must be non-negative, got {m}")
    return sum(comb(n, i) * (q - 1) ** i for i in range(min(m, n) + 1))


def matrix_rank(q: int, rows: list[FieldVec] | tuple[FieldVec, ...]) -> int:
    """Rank over F_q of the matrix with the given rows (Gaussian elimination)."""
    field = PrimeField(q)
    work = [list(r) for r in rows]
    if not work:
        return 0
    cols = len(work[0])
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][c] % q != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = field.inv(work[rank][c])
        work[rank] = [(s * inv) % q for s in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][c] % q != 0:
                factor = work[r][c]
                work[r] = [(a - factor * b) % q for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank
