"""Linear codes over GF(p^m) and their Hermitian geometry.

A :class:`LinearCode` is stored by its canonical generator: the non-zero
rows of the RREF of any generator matrix. Two codes are equal exactly
when they are the same subspace.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

import numpy as np

from mpcodes.config import get_settings
from mpcodes.errors import DimensionMismatchError, EnumerationCapError, OutOfRangeError, SpecMismatchError
from mpcodes.field import FieldSpec
from mpcodes.matrix import (
    ExactMatrix,
    conj_transpose,
    conjugate,
    identity,
    kernel,
    multiply,
    nonzero_rows,
    rank,
    rref,
    vstack,
    zeros,
)
from mpcodes.models import CodeProperty
from mpcodes.observability import get_logger, log_metric

logger = get_logger(__name__)

# Messages encoded per vectorized batch in min_distance
_BATCH = 1 << 14


@dataclass(frozen=True)
class LinearCode:
    """A [n, t] linear code given by its canonical generator."""

    spec: FieldSpec
    length: int
    generator: ExactMatrix

    def __post_init__(self) -> None:
        if self.generator.spec != self.spec:
            raise SpecMismatchError("generator lives over another field")
        if self.generator.cols != self.length:
            raise DimensionMismatchError(
                f"generator has {self.generator.cols} columns, code length is {self.length}"
            )

    @property
    def dimension(self) -> int:
        return self.generator.rows

    @property
    def is_zero(self) -> bool:
        return self.dimension == 0

    def __repr__(self) -> str:
        return f"LinearCode({self.spec}, n={self.length}, generator={self.generator.to_ints()})"


class MinDistance(NamedTuple):
    """Minimum distance; the zero code reports ``length + 1``."""

    value: int
    zero_code: bool = False


def from_generator(g: ExactMatrix) -> LinearCode:
    """The code spanned by the rows of ``g`` (rows may be dependent)."""
    return LinearCode(g.spec, g.cols, nonzero_rows(rref(g)))


def zero_code(spec: FieldSpec, n: int) -> LinearCode:
    return LinearCode(spec, n, zeros(spec, 0, n))


def full_space(spec: FieldSpec, n: int) -> LinearCode:
    return LinearCode(spec, n, identity(spec, n))


def _check_same(c1: LinearCode, c2: LinearCode) -> None:
    if c1.spec != c2.spec:
        raise SpecMismatchError(f"{c1.spec} and {c2.spec} differ")
    if c1.length != c2.length:
        raise DimensionMismatchError(f"lengths {c1.length} and {c2.length} differ")


@lru_cache(maxsize=4096)
def euclidean_dual(c: LinearCode) -> LinearCode:
    return LinearCode(c.spec, c.length, kernel(c.generator))


@lru_cache(maxsize=4096)
def hermitian_dual(c: LinearCode) -> LinearCode:
    """{x : sum_i x_i y_i^q = 0 for every y in C}."""
    return LinearCode(c.spec, c.length, kernel(conjugate(c.generator)))


def sum_code(c1: LinearCode, c2: LinearCode) -> LinearCode:
    _check_same(c1, c2)
    return from_generator(vstack(c1.spec, c1.length, [c1.generator, c2.generator]))


def intersect(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """C1 ∩ C2, as the dual of the sum of the duals."""
    _check_same(c1, c2)
    return euclidean_dual(sum_code(euclidean_dual(c1), euclidean_dual(c2)))


@lru_cache(maxsize=16384)
def dim_meet_hermitian_dual(c1: LinearCode, c2: LinearCode) -> int:
    """dim(C1 ∩ C2^⊥H) = dim(C1) - rank(G1 G2†)."""
    _check_same(c1, c2)
    gram = multiply(c1.generator, conj_transpose(c2.generator))
    return c1.dimension - rank(gram)


def hermitian_hull(c: LinearCode) -> LinearCode:
    return intersect(c, hermitian_dual(c))


def hull_dimension(c: LinearCode) -> int:
    """dim Hull_H(C) = t - rank(G G†)."""
    return dim_meet_hermitian_dual(c, c)


@lru_cache(maxsize=16384)
def contains(c1: LinearCode, c2: LinearCode) -> bool:
    """True when C2 ⊆ C1."""
    _check_same(c1, c2)
    if c2.dimension > c1.dimension:
        return False
    stacked = vstack(c1.spec, c1.length, [c1.generator, c2.generator])
    return rank(stacked) == c1.dimension


@lru_cache(maxsize=4096)
def classify_single(c: LinearCode) -> frozenset[CodeProperty]:
    """Hermitian flags of one code, from the definitions."""
    dual = hermitian_dual(c)
    hull = hull_dimension(c)
    flags = set()
    if contains(c, dual):
        flags.add(CodeProperty.HDC)
    if contains(dual, c):
        flags.add(CodeProperty.HSO)
    if hull == dual.dimension - 1:
        flags.add(CodeProperty.AHDC)
    if hull == c.dimension - 1:
        flags.add(CodeProperty.AHSO)
    if hull == 0:
        flags.add(CodeProperty.HLCD)
    if c == dual:
        flags.add(CodeProperty.HSD)
    return frozenset(flags)


def message_block(spec: FieldSpec, width: int, start: int, stop: int) -> np.ndarray:
    """Base-|F| digit vectors of the integers in [start, stop), most significant first."""
    indices = np.arange(start, stop, dtype=np.int64)
    places = spec.order ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] // places[None, :]) % spec.order


def min_distance(c: LinearCode, cap: int | None = None) -> MinDistance:
    """Minimum Hamming weight over the non-zero codewords.

    Raises:
        EnumerationCapError: When |F|^t exceeds the cap.
    """
    if c.is_zero:
        return MinDistance(c.length + 1, zero_code=True)
    cap = get_settings().distance_cap if cap is None else cap
    total = c.spec.order**c.dimension
    if total > cap:
        raise EnumerationCapError(total, cap, "codewords")

    best = c.length
    g = c.generator.array
    visited = 0
    for start in range(1, total, _BATCH):
        stop = min(start + _BATCH, total)
        messages = c.spec.gf(message_block(c.spec, c.dimension, start, stop))
        words = messages @ g
        weights = np.count_nonzero(np.asarray(words), axis=1)
        best = min(best, int(weights.min()))
        visited += stop - start
        if best == 1:
            break
    if visited > _BATCH:
        log_metric("codewords_enumerated", visited, "count", field_order=c.spec.order)
    return MinDistance(best)


def is_mds(c: LinearCode, cap: int | None = None) -> bool:
    """True when d = n - t + 1."""
    if c.is_zero:
        return False
    return min_distance(c, cap).value == c.length - c.dimension + 1


def _rref_fillings(spec: FieldSpec, n: int, t: int) -> Iterator[LinearCode]:
    for pivots in itertools.combinations(range(n), t):
        pivot_set = set(pivots)
        free = [(r, j) for r, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivot_set]
        for values in itertools.product(range(spec.order), repeat=len(free)):
            data = np.zeros((t, n), dtype=np.int64)
            for r, p in enumerate(pivots):
                data[r, p] = 1
            for (r, j), v in zip(free, values):
                data[r, j] = v
            yield LinearCode(spec, n, ExactMatrix(spec, spec.gf(data)))


def all_codes(spec: FieldSpec, n: int, dimension: int | None = None) -> Iterator[LinearCode]:
    """Every subspace of F^n (or every one of a given dimension), once each.

    Each subspace has exactly one RREF generator, so walking pivot sets and
    free entries visits it exactly once.
    """
    if n < 0 or (dimension is not None and not 0 <= dimension <= n):
        raise OutOfRangeError(f"no codes of dimension {dimension} and length {n}")
    dims = range(n + 1) if dimension is None else [dimension]
    for t in dims:
        if t == 0:
            yield zero_code(spec, n)
            continue
        yield from _rref_fillings(spec, n, t)


def random_code(spec: FieldSpec, n: int, t: int, rng: np.random.Generator) -> LinearCode:
    """A uniformly random generator of full rank t, canonicalized."""
    if not 0 <= t <= n:
        raise OutOfRangeError(f"no [{n}, {t}] code")
    if t == 0:
        return zero_code(spec, n)
    while True:
        g = ExactMatrix(spec, spec.gf.Random((t, n), seed=rng))
        if rank(g) == t:
            return from_generator(g)
