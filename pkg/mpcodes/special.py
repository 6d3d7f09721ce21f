"""Structure of defining matrices.

Monomial decomposition ``M = D·P_tau``, Gram matrices and their
involution structure, the non-singular-by-columns (NSC) test, row-prefix
distances and involution enumeration.

Permutations are 1-based: ``P_tau`` has entry (i, tau(i)) equal to 1.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

import numpy as np

from mpcodes.codes import from_generator, min_distance
from mpcodes.errors import (
    DimensionMismatchError,
    NotInvolutionError,
    NotMonomialError,
    OutOfRangeError,
    SpecMismatchError,
)
from mpcodes.field import FieldElement, FieldSpec, conjugate
from mpcodes.matrix import ExactMatrix, conj_transpose, determinant, multiply, transpose

MAX_INVOLUTION_K = 12

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..k}, stored by its images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise OutOfRangeError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_cycles(cls, k: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(1, k + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for a in cycle:
                if not 1 <= a <= k or a in seen:
                    raise OutOfRangeError(f"bad cycle {tuple(cycle)} for k={k}")
                seen.add(a)
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, k: int) -> "Permutation":
        """Parse cycle notation such as ``(1 2)(3 4)`` or ``id``."""
        text = text.strip()
        if text in ("id", ""):
            return cls.identity(k)
        if _CYCLE_RE.sub("", text).strip():
            raise OutOfRangeError(f"cannot parse permutation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            try:
                cycles.append([int(a) for a in body.replace(",", " ").split()])
            except ValueError as exc:
                raise OutOfRangeError(f"cannot parse permutation {text!r}") from exc
        return cls.from_cycles(k, cycles)

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other."""
        if self.k != other.k:
            raise DimensionMismatchError(f"cannot compose sizes {self.k} and {other.k}")
        return Permutation(tuple(self(other(i)) for i in range(1, self.k + 1)))

    def inverse(self) -> "Permutation":
        images = [0] * self.k
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(tuple(images))

    @property
    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, self.k + 1))

    @property
    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, self.k + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest entry."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.k + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def matrix(self, spec: FieldSpec) -> ExactMatrix:
        data = np.zeros((self.k, self.k), dtype=np.int64)
        for i in range(1, self.k + 1):
            data[i - 1, self(i) - 1] = 1
        return ExactMatrix(spec, spec.gf(data))

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "id"
        return "".join("(" + " ".join(str(a) for a in c) + ")" for c in cycles)


@dataclass(frozen=True)
class MonomialDecomposition:
    """M = diag(mu) · P_tau."""

    diag: tuple[FieldElement, ...]
    perm: Permutation

    def __post_init__(self) -> None:
        if len(self.diag) != self.perm.k:
            raise DimensionMismatchError("diagonal and permutation sizes differ")
        if any(d.is_zero for d in self.diag):
            raise OutOfRangeError("monomial diagonal entries must be non-zero")
        if len({d.spec for d in self.diag}) > 1:
            raise SpecMismatchError("diagonal entries live over different fields")

    @property
    def k(self) -> int:
        return self.perm.k

    def mu(self, i: int) -> FieldElement:
        """Diagonal entry mu_i (1-based)."""
        return self.diag[i - 1]

    def reconstruct(self) -> ExactMatrix:
        spec = self.diag[0].spec
        data = np.zeros((self.k, self.k), dtype=np.int64)
        for i in range(1, self.k + 1):
            data[i - 1, self.perm(i) - 1] = self.mu(i).value
        return ExactMatrix(spec, spec.gf(data))


@dataclass(frozen=True)
class InvolutionCheck:
    """Outcome of checking tau² = id and the paired diagonal relation.

    On failure ``index`` is the first offending 1-based index.
    """

    ok: bool
    index: int | None = None
    reason: Literal["tau_squared", "diagonal_relation"] | None = None


def monomial_decompose(m: ExactMatrix) -> MonomialDecomposition:
    """Factor M = D·P_tau.

    Raises:
        DimensionMismatchError: M is not square.
        NotMonomialError: Some row or column has other than one non-zero entry.
    """
    if not m.is_square:
        raise DimensionMismatchError(f"monomial test needs a square matrix, got {m.shape}")
    if m.rows == 0:
        raise DimensionMismatchError("monomial test needs a non-empty matrix")
    data = np.asarray(m.array, dtype=np.int64)
    nonzero = data != 0
    row_counts = nonzero.sum(axis=1)
    col_counts = nonzero.sum(axis=0)
    for i, c in enumerate(row_counts, start=1):
        if c != 1:
            raise NotMonomialError(f"row {i} has {int(c)} non-zero entries")
    for j, c in enumerate(col_counts, start=1):
        if c != 1:
            raise NotMonomialError(f"column {j} has {int(c)} non-zero entries")
    cols = nonzero.argmax(axis=1)
    images = tuple(int(c) + 1 for c in cols)
    diag = tuple(FieldElement(m.spec, int(data[i, c])) for i, c in enumerate(cols))
    return MonomialDecomposition(diag, Permutation(images))


def is_monomial(m: ExactMatrix) -> bool:
    try:
        monomial_decompose(m)
    except (NotMonomialError, DimensionMismatchError):
        return False
    return True


def gram_hermitian(a: ExactMatrix) -> ExactMatrix:
    """A·A†."""
    return multiply(a, conj_transpose(a))


def gram_euclidean(a: ExactMatrix) -> ExactMatrix:
    """A·Aᵀ."""
    return multiply(a, transpose(a))


def check_involution_structure(
    d: MonomialDecomposition,
    mode: Literal["transpose", "conj_transpose"],
) -> InvolutionCheck:
    """Check the structure every Gram matrix of monomial form has.

    tau must be an involution, and mu_tau(i) must equal mu_i (transpose)
    or mu_i^q (conj_transpose).
    """
    for i in range(1, d.k + 1):
        if d.perm(d.perm(i)) != i:
            return InvolutionCheck(False, i, "tau_squared")
    for i in range(1, d.k + 1):
        expected = conjugate(d.mu(i)) if mode == "conj_transpose" else d.mu(i)
        if d.mu(d.perm(i)) != expected:
            return InvolutionCheck(False, i, "diagonal_relation")
    return InvolutionCheck(True)


def is_nsc(a: ExactMatrix) -> bool:
    """True when every square submatrix on the first j rows is non-singular.

    For each j in 1..k and every choice of j columns, the j x j minor
    taken from the top j rows must be non-zero.
    """
    if a.rows > a.cols:
        raise DimensionMismatchError(f"NSC needs rows <= cols, got {a.shape}")
    for j in range(1, a.rows + 1):
        top = range(j)
        for cols in itertools.combinations(range(a.cols), j):
            if determinant(a.submatrix(top, cols)).is_zero:
                return False
    return True


def row_prefix_distance(a: ExactMatrix, i: int, cap: int | None = None) -> int:
    """D_i(A): minimum distance of the code spanned by the first i rows."""
    if not 1 <= i <= a.rows:
        raise OutOfRangeError(f"row prefix {i} outside 1..{a.rows}")
    return min_distance(from_generator(a.top_rows(i)), cap).value


def _check_k(k: int) -> None:
    if not 1 <= k <= MAX_INVOLUTION_K:
        raise OutOfRangeError(f"k={k} outside 1..{MAX_INVOLUTION_K}")


def _involutions(images: list[int], free: int) -> Iterator[tuple[int, ...]]:
    k = len(images)
    while free < k and images[free]:
        free += 1
    if free == k:
        yield tuple(images)
        return
    i = free + 1
    images[free] = i
    yield from _involutions(images, free + 1)
    for j in range(i + 1, k + 1):
        if images[j - 1]:
            continue
        images[free], images[j - 1] = j, i
        yield from _involutions(images, free + 1)
        images[j - 1] = 0
    images[free] = 0


def enumerate_involutions(k: int) -> list[Permutation]:
    """All tau with tau² = id on {1..k}, identity first, in lexicographic order of images."""
    _check_k(k)
    return [Permutation(images) for images in _involutions([0] * k, 0)]


def involution_count(k: int, include_identity: bool = True) -> int:
    """Number of involutions, by counting choices of s disjoint 2-cycles."""
    if k < 1:
        raise OutOfRangeError(f"k={k} must be positive")
    start = 0 if include_identity else 1
    return sum(
        math.factorial(k) // (math.factorial(k - 2 * s) * math.factorial(s) * 2**s)
        for s in range(start, k // 2 + 1)
    )


def fixed_set(tau: Permutation) -> list[int]:
    if not tau.is_involution:
        raise NotInvolutionError(f"{tau} is not an involution")
    return [i for i in range(1, tau.k + 1) if tau(i) == i]


def two_cycles(tau: Permutation) -> list[tuple[int, int]]:
    """Pairs (i, tau(i)) with i < tau(i), ascending."""
    if not tau.is_involution:
        raise NotInvolutionError(f"{tau} is not an involution")
    return [(i, tau(i)) for i in range(1, tau.k + 1) if i < tau(i)]

