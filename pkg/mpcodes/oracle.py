"""Brute-force ground truth by explicit enumeration.

Everything here works from codeword and vector lists built with
elementwise field operations only: no matrix products, ranks or
kernels. Agreement with :mod:`mpcodes.codes` and :mod:`mpcodes.mp` is
therefore evidence rather than a restatement.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from mpcodes.codes import LinearCode
from mpcodes.config import get_settings
from mpcodes.errors import EnumerationCapError, InternalInconsistencyError
from mpcodes.field import FieldSpec
from mpcodes.models import CodeProperty
from mpcodes.observability import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class CodewordSet:
    """All |F|^t codewords of a code, in message order (first message digit most significant)."""

    spec: FieldSpec
    length: int
    words: Any

    def __len__(self) -> int:
        return int(self.words.shape[0])

    def keys(self) -> set[bytes]:
        """Hashable view of the words."""
        rows = np.asarray(self.words, dtype=np.int64)
        return {r.tobytes() for r in rows}


def _cap(cap: Optional[int]) -> int:
    return get_settings().oracle_cap if cap is None else cap


def _all_vectors(spec: FieldSpec, width: int, cap: int, what: str) -> Any:
    total = spec.order**width
    if total > cap:
        raise EnumerationCapError(total, cap, what)
    digits = list(itertools.product(range(spec.order), repeat=width))
    return spec.gf(np.array(digits, dtype=np.int64).reshape(total, width))


def enumerate_codewords(c: LinearCode, cap: Optional[int] = None) -> CodewordSet:
    """Every F-linear combination of the generator rows."""
    messages = _all_vectors(c.spec, c.dimension, _cap(cap), "codewords")
    g = c.generator.array
    words = c.spec.gf.Zeros((len(messages), c.length))
    for r in range(c.dimension):
        words = words + messages[:, r : r + 1] * g[r : r + 1, :]
    return CodewordSet(c.spec, c.length, words)


def _orthogonal_mask(vectors: Any, c: LinearCode) -> np.ndarray:
    """Rows of ``vectors`` Hermitian-orthogonal to every generator row of ``c``."""
    q = c.spec.q
    mask = np.ones(vectors.shape[0], dtype=bool)
    for r in range(c.dimension):
        y = c.generator.array[r] ** q
        inner = c.spec.gf.Zeros(vectors.shape[0])
        for j in range(c.length):
            inner = inner + vectors[:, j] * y[j]
        mask &= np.asarray(inner) == 0
    return mask


def _log_order(spec: FieldSpec, count: int) -> int:
    d = 0
    size = 1
    while size < count:
        size *= spec.order
        d += 1
    if size != count:
        raise InternalInconsistencyError(f"{count} vectors is not a power of {spec.order}")
    return d


def _dual_words(c: LinearCode, cap: Optional[int]) -> Any:
    space = _all_vectors(c.spec, c.length, _cap(cap), "vectors")
    return space[_orthogonal_mask(space, c)]


def brute_hermitian_dual_dim(c: LinearCode, cap: Optional[int] = None) -> int:
    """log_|F| of the number of vectors orthogonal to all of C."""
    return _log_order(c.spec, int(_dual_words(c, cap).shape[0]))


def brute_hull_dim(c: LinearCode, cap: Optional[int] = None) -> int:
    words = enumerate_codewords(c, cap).words
    return _log_order(c.spec, int(np.count_nonzero(_orthogonal_mask(words, c))))


def brute_classify(c: LinearCode, cap: Optional[int] = None) -> frozenset[CodeProperty]:
    """Flags from explicit word sets: subset tests and intersection sizes."""
    code_words = enumerate_codewords(c, cap).keys()
    dual = _dual_words(c, cap)
    dual_words = {r.tobytes() for r in np.asarray(dual, dtype=np.int64)}
    hull = _log_order(c.spec, len(code_words & dual_words))
    dual_dim = _log_order(c.spec, len(dual_words))
    dim = _log_order(c.spec, len(code_words))

    flags = set()
    if dual_words <= code_words:
        flags.add(CodeProperty.HDC)
    if code_words <= dual_words:
        flags.add(CodeProperty.HSO)
    if hull == dual_dim - 1:
        flags.add(CodeProperty.AHDC)
    if hull == dim - 1:
        flags.add(CodeProperty.AHSO)
    if hull == 0:
        flags.add(CodeProperty.HLCD)
    if code_words == dual_words:
        flags.add(CodeProperty.HSD)
    logger.debug("oracle_classified", n=c.length, dimension=dim, hull=hull, flags=sorted(flags))
    return frozenset(flags)


def brute_min_distance(c: LinearCode, cap: Optional[int] = None) -> int:
    """Minimum weight over the explicit word list; ``n + 1`` for the zero code."""
    words = np.asarray(enumerate_codewords(c, cap).words)
    weights = np.count_nonzero(words, axis=1)
    nonzero = weights[weights > 0]
    if nonzero.size == 0:
        return c.length + 1
    return int(nonzero.min())


def oracle_feasible(c: LinearCode, cap: Optional[int] = None) -> bool:
    """True when every oracle scan of ``c`` fits under the cap."""
    return c.spec.order**c.length <= _cap(cap)
