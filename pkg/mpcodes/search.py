"""Bounded search for matrix-product codes with prescribed Hermitian flags.

A search walks every defining matrix in a pool whose Gram matrix is
monomial, pairs it with every k-tuple of constituents from a code pool,
and keeps the combinations whose classification contains the target
flags. Pools are either given explicitly, enumerated exhaustively or
sampled from a seeded generator, so a configuration and seed fully
determine the hit list.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from mpcodes.codes import LinearCode, all_codes, random_code
from mpcodes.config import get_settings
from mpcodes.errors import EnumerationCapError, InternalInconsistencyError, NotMonomialError, OutOfRangeError
from mpcodes.field import FieldSpec
from mpcodes.formats import format_code, format_matrix
from mpcodes.matrix import ExactMatrix
from mpcodes.models import CodeProperty, sorted_flags
from mpcodes.mp import MAX_MANNER_K, MPCodeSpec, build, classify, distance_bound, enumerate_manners
from mpcodes.observability import get_logger, log_scan_completed, log_scan_started
from mpcodes.oracle import brute_classify, brute_min_distance, oracle_feasible
from mpcodes.special import (
    MonomialDecomposition,
    check_involution_structure,
    gram_euclidean,
    gram_hermitian,
    is_nsc,
    monomial_decompose,
)

logger = get_logger(__name__)

# Matrices per vectorized Gram batch
_CHUNK = 1 << 14


@dataclass(frozen=True)
class DefiningMatrix:
    """A defining matrix together with the factorization of its Gram matrix."""

    matrix: ExactMatrix
    decomposition: MonomialDecomposition

    @property
    def tau(self) -> str:
        return str(self.decomposition.perm)


class SearchConfig(BaseModel):
    """Everything that determines a search run."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    spec: FieldSpec
    n: int = Field(..., ge=1, description="Constituent length")
    k: int = Field(..., ge=1, le=4, description="Number of constituents")
    targets: frozenset[CodeProperty] = Field(
        frozenset({CodeProperty.HDC}), description="Flags every hit must carry"
    )
    matrix_source: Literal["explicit", "exhaustive", "sampled"] = "exhaustive"
    matrices: tuple[ExactMatrix, ...] = ()
    code_source: Literal["explicit", "all", "random"] = "all"
    codes: tuple[LinearCode, ...] = ()
    sample_size: int = Field(64, ge=1, description="Pool size for sampled sources")
    seed: int = Field(0, ge=0)
    limit: Optional[int] = Field(None, ge=1, description="Stop after this many hits")
    verify: bool = Field(True, description="Replay hits through the oracle when feasible")
    oracle_cap: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def validate_sources(self) -> "SearchConfig":
        if self.matrix_source == "explicit" and not self.matrices:
            raise ValueError("explicit matrix source needs at least one matrix")
        if self.code_source == "explicit" and not self.codes:
            raise ValueError("explicit code source needs at least one code")
        for m in self.matrices:
            if m.spec != self.spec or m.shape != (self.k, self.k):
                raise ValueError(f"matrix {m.to_ints()} is not a {self.k}x{self.k} matrix over {self.spec}")
        for c in self.codes:
            if c.spec != self.spec or c.length != self.n:
                raise ValueError(f"pool code is not a length-{self.n} code over {self.spec}")
        return self


@dataclass(frozen=True)
class SearchHit:
    """One MP code found by a search."""

    matrix: ExactMatrix
    constituents: tuple[LinearCode, ...]
    tau: str
    flags: frozenset[CodeProperty]
    length: int
    dimension: int
    bound: Optional[int]
    bound_method: Optional[str]
    nsc: bool
    verified: bool

    @property
    def parameters(self) -> str:
        bound = "?" if self.bound is None else str(self.bound)
        return f"[{self.length}, {self.dimension}, ≥{bound}]"

    def to_line(self) -> str:
        """Single machine-format line."""
        matrix = ";".join(",".join(str(v) for v in row) for row in self.matrix.to_ints())
        codes = "|".join(
            ";".join(",".join(str(v) for v in row) for row in c.generator.to_ints()) or "0"
            for c in self.constituents
        )
        flags = ",".join(str(f) for f in sorted_flags(self.flags))
        return (
            f"matrix={matrix} codes={codes} tau={self.tau.replace(' ', '_')} flags={flags} "
            f"n={self.length} dim={self.dimension} "
            f"bound={'none' if self.bound is None else self.bound} "
            f"nsc={str(self.nsc).lower()} verified={str(self.verified).lower()}"
        )


def _digits(order: int, width: int, start: int, stop: int) -> np.ndarray:
    indices = np.arange(start, stop, dtype=np.int64)
    places = order ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] // places[None, :]) % order


def _monomial_mask(gram: np.ndarray) -> np.ndarray:
    nonzero = gram != 0
    rows_ok = (nonzero.sum(axis=2) == 1).all(axis=1)
    cols_ok = (nonzero.sum(axis=1) == 1).all(axis=1)
    return rows_ok & cols_ok


def _batch_gram(batch, q: Optional[int]):
    """Gram matrices of a (B, k, k) stack, built from elementwise products.

    With ``q`` the second factor is conjugated (Hermitian Gram).
    """
    other = batch if q is None else batch**q
    k = batch.shape[1]
    gram = batch[:, :, None, 0] * other[:, None, :, 0]
    for col in range(1, k):
        gram = gram + batch[:, :, None, col] * other[:, None, :, col]
    return gram


def _defining(matrix: ExactMatrix, gram_kind: str) -> DefiningMatrix:
    if gram_kind == "hermitian":
        gram, mode = gram_hermitian(matrix), "conj_transpose"
    else:
        gram, mode = gram_euclidean(matrix), "transpose"
    decomposition = monomial_decompose(gram)
    check = check_involution_structure(decomposition, mode)  # type: ignore[arg-type]
    if not check.ok:
        raise InternalInconsistencyError(
            f"Gram matrix of {matrix.to_ints()} breaks the involution law at {check.index}"
        )
    return DefiningMatrix(matrix, decomposition)


def find_monomial_matrices(
    spec: FieldSpec,
    k: int,
    limit: Optional[int] = None,
    mode: Literal["exhaustive", "sampled"] = "exhaustive",
    sample_size: int = 4096,
    seed: int = 0,
    gram_kind: Literal["hermitian", "euclidean"] = "hermitian",
    cap: Optional[int] = None,
) -> list[DefiningMatrix]:
    """k x k matrices whose Gram matrix is monomial, in lexicographic entry order.

    Exhaustive mode visits all |F|^(k²) matrices in vectorized chunks;
    sampled mode draws ``sample_size`` seeded random matrices and keeps
    the distinct monomial ones.

    Raises:
        EnumerationCapError: Exhaustive mode would exceed the matrix scan cap.
    """
    if k < 1:
        raise OutOfRangeError(f"k={k} must be positive")
    q = spec.q if gram_kind == "hermitian" else None
    started = time.time()
    gf = spec.gf
    found: list[DefiningMatrix] = []

    if mode == "exhaustive":
        cap = get_settings().matrix_scan_cap if cap is None else cap
        total = spec.order ** (k * k)
        if total > cap:
            raise EnumerationCapError(total, cap, "matrices")
        log_scan_started("matrices", spec.order, total, k=k, mode=mode)
        visited = 0
        for start in range(0, total, _CHUNK):
            stop = min(start + _CHUNK, total)
            batch = gf(_digits(spec.order, k * k, start, stop).reshape(-1, k, k))
            mask = _monomial_mask(np.asarray(_batch_gram(batch, q)))
            visited = stop
            for index in np.flatnonzero(mask):
                found.append(_defining(ExactMatrix(spec, batch[index].copy()), gram_kind))
                if limit is not None and len(found) >= limit:
                    break
            if limit is not None and len(found) >= limit:
                break
    else:
        log_scan_started("matrices", spec.order, sample_size, k=k, mode=mode)
        rng = np.random.default_rng(seed)
        batch = gf.Random((sample_size, k, k), seed=rng)
        mask = _monomial_mask(np.asarray(_batch_gram(batch, q)))
        unique = {ExactMatrix(spec, batch[i].copy()) for i in np.flatnonzero(mask)}
        ordered = sorted(unique, key=lambda m: m.to_ints())
        found = [_defining(m, gram_kind) for m in ordered[:limit]]
        visited = sample_size

    log_scan_completed("matrices", visited, len(found), time.time() - started, k=k, mode=mode)
    return found


def code_pool(config: SearchConfig) -> list[LinearCode]:
    """Constituent pool, sorted by serialization."""
    if config.code_source == "explicit":
        codes = set(config.codes)
    elif config.code_source == "all":
        cap = get_settings().code_scan_cap
        codes = set()
        for c in all_codes(config.spec, config.n):
            codes.add(c)
            if len(codes) > cap:
                raise EnumerationCapError(len(codes), cap, "pool codes")
    else:
        rng = np.random.default_rng(config.seed)
        codes = set()
        for _ in range(config.sample_size):
            t = int(rng.integers(0, config.n + 1))
            codes.add(random_code(config.spec, config.n, t, rng))
    return sorted(codes, key=format_code)


def matrix_pool(config: SearchConfig) -> list[DefiningMatrix]:
    if config.matrix_source == "explicit":
        pool = []
        for m in sorted(set(config.matrices), key=format_matrix):
            try:
                pool.append(_defining(m, "hermitian"))
            except NotMonomialError as exc:
                logger.info("pool_matrix_skipped", matrix=m.to_ints(), reason=str(exc))
        return pool
    found = find_monomial_matrices(
        config.spec,
        config.k,
        mode=config.matrix_source,
        sample_size=config.sample_size,
        seed=config.seed,
    )
    return sorted(found, key=lambda d: format_matrix(d.matrix))


def _replay(spec: MPCodeSpec, flags: frozenset[CodeProperty], bound: Optional[int], cap: Optional[int]) -> bool:
    """Check a hit against the oracle; False when out of reach."""
    code = build(spec)
    if not oracle_feasible(code, cap):
        return False
    brute = brute_classify(code, cap)
    if not flags <= brute:
        raise InternalInconsistencyError(
            f"oracle flags {sorted(brute)} miss {sorted(flags - brute)} for {spec.defining.to_ints()}"
        )
    if bound is not None and brute_min_distance(code, cap) < bound:
        raise InternalInconsistencyError(f"distance below the bound {bound} for {spec.defining.to_ints()}")
    return True


def search_hdc(config: SearchConfig) -> list[SearchHit]:
    """All (matrix, constituent tuple) combinations carrying the target flags.

    Hits come out in pool order: matrices by serialization, then tuples in
    lexicographic order of their constituents' serializations.
    """
    started = time.time()
    matrices = matrix_pool(config)
    codes = code_pool(config)
    log_scan_started(
        "search",
        config.spec.order,
        len(matrices) * len(codes) ** config.k,
        targets=[str(t) for t in sorted_flags(config.targets)],
    )

    hits: list[SearchHit] = []
    visited = 0
    for dm in matrices:
        nsc = is_nsc(dm.matrix)
        for combo in itertools.product(codes, repeat=config.k):
            visited += 1
            spec = MPCodeSpec(dm.matrix, tuple(combo))
            report = classify(spec)
            if not config.targets <= report.flags:
                continue
            try:
                bound = distance_bound(spec)
            except EnumerationCapError:
                bound = None
            verified = config.verify and _replay(
                spec, report.flags, None if bound is None else bound.value, config.oracle_cap
            )
            hit = SearchHit(
                matrix=dm.matrix,
                constituents=tuple(combo),
                tau=report.tau,
                flags=report.flags,
                length=spec.length,
                dimension=report.mp_dim,
                bound=None if bound is None else bound.value,
                bound_method=None if bound is None else bound.method,
                nsc=nsc,
                verified=verified,
            )
            logger.debug("search_hit", tau=hit.tau, parameters=hit.parameters)
            hits.append(hit)
            if config.limit is not None and len(hits) >= config.limit:
                log_scan_completed("search", visited, len(hits), time.time() - started, truncated=True)
                return hits

    log_scan_completed("search", visited, len(hits), time.time() - started)
    return hits


def regenerate_table1(k: int, target: CodeProperty = CodeProperty.HDC) -> str:
    """Manners for ``target`` laid out as a class / tau / conditions table."""
    if not 2 <= k <= MAX_MANNER_K:
        raise OutOfRangeError(f"k={k} outside 2..{MAX_MANNER_K}")
    manners = enumerate_manners(k, target)
    header = ("k", "Class", "τ", "Constituent conditions")
    rows = [
        (str(k) if i == 0 else "", f"Class {m.class_number}", f"τ={m.tau}", ", ".join(m.requirements))
        for i, m in enumerate(manners)
    ]
    widths = [max(len(r[c]) for r in [header, *rows]) for c in range(3)]

    def line(cells: Sequence[str]) -> str:
        return " | ".join(cell.ljust(w) for cell, w in zip(cells[:3], widths)) + " | " + cells[3]

    title = f"Manners to derive a {target} MP code C_(A,k) for k={k}"
    rule = "-+-".join("-" * w for w in widths) + "-+-" + "-" * len(header[3])
    return "\n".join([title, line(header), rule, *(line(r) for r in rows)]) + "\n"

