"""Matrix-product codes and their Hermitian hulls.

Given a k x t defining matrix A over GF(q²) and constituent codes
C_1, ..., C_k of length n, the MP code is the set of words
``[c_1, ..., c_k]·A`` read as length-tn vectors, block j being
``sum_i a_ij c_i``.

When A·A† = D·P_tau is monomial, every Hermitian question about the MP
code reduces to the pairs (C_i, C_tau(i)): the hull dimension is
``sum_i dim(C_i ∩ C_tau(i)^⊥H)`` and the five flags HDC, AHDC, HSO, AHSO,
HLCD follow from per-index containments and dimension deficits. Nothing
here materializes the tn-length code except :func:`build`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from mpcodes.codes import (
    LinearCode,
    classify_single,
    contains,
    dim_meet_hermitian_dual,
    from_generator,
    hermitian_dual,
    hull_dimension,
    min_distance,
)
from mpcodes.errors import (
    DimensionMismatchError,
    EnumerationCapError,
    InapplicableError,
    InternalInconsistencyError,
    OutOfRangeError,
    SpecMismatchError,
)
from mpcodes.field import FieldSpec
from mpcodes.matrix import ExactMatrix, kronecker, rank, vstack
from mpcodes.models import (
    CodeProperty,
    ConstituentEvidence,
    DistanceBound,
    Manner,
    MP_FLAGS,
    Obstruction,
    QuantumParameters,
)
from mpcodes.observability import get_logger
from mpcodes.special import (
    MonomialDecomposition,
    Permutation,
    check_involution_structure,
    enumerate_involutions,
    fixed_set,
    gram_hermitian,
    involution_count,
    is_nsc,
    monomial_decompose,
    row_prefix_distance,
    two_cycles,
)

logger = get_logger(__name__)

MAX_MANNER_K = 8


@dataclass(frozen=True)
class MPCodeSpec:
    """Defining matrix plus constituents; ``k = A.rows <= A.cols = t``."""

    defining: ExactMatrix
    constituents: tuple[LinearCode, ...]

    def __post_init__(self) -> None:
        a = self.defining
        if a.rows == 0 or a.rows > a.cols:
            raise DimensionMismatchError(f"defining matrix must have 1 <= k <= t, got {a.shape}")
        if len(self.constituents) != a.rows:
            raise DimensionMismatchError(
                f"{a.rows} rows in the defining matrix but {len(self.constituents)} constituents"
            )
        lengths = {c.length for c in self.constituents}
        if len(lengths) != 1:
            raise DimensionMismatchError(f"constituents have lengths {sorted(lengths)}")
        if any(c.spec != a.spec for c in self.constituents):
            raise SpecMismatchError("constituents and defining matrix live over different fields")

    @classmethod
    def of(cls, defining: ExactMatrix, constituents: Sequence[LinearCode]) -> "MPCodeSpec":
        return cls(defining, tuple(constituents))

    @property
    def spec(self) -> FieldSpec:
        return self.defining.spec

    @property
    def k(self) -> int:
        return self.defining.rows

    @property
    def t(self) -> int:
        return self.defining.cols

    @property
    def n(self) -> int:
        return self.constituents[0].length

    @property
    def length(self) -> int:
        return self.t * self.n

    @property
    def dimensions(self) -> list[int]:
        return [c.dimension for c in self.constituents]

    def constituent(self, i: int) -> LinearCode:
        """C_i, 1-based."""
        return self.constituents[i - 1]


class ClassificationReport(BaseModel):
    """Outcome of classifying one MP code.

    Residuals are the left-hand sides of the AHDC and AHSO conditions;
    the property holds exactly when its residual is 1.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    method: Literal["residual", "explicit", "identity"]
    monomial: Optional[MonomialDecomposition] = None
    tau: str = Field(..., description="Involution in cycle notation")
    length: int = Field(..., ge=1, description="t·n")
    hull_dim: int = Field(..., ge=0)
    mp_dim: int = Field(..., ge=0)
    mp_dual_dim: int = Field(..., ge=0)
    flags: frozenset[CodeProperty]
    evidence: list[ConstituentEvidence] = Field(default_factory=list)
    obstructions: list[Obstruction] = Field(default_factory=list)
    ahdc_residual: int
    ahso_residual: int
    ahdc_witness: Optional[int] = Field(None, description="The unique j making the code AHDC")
    ahso_witness: Optional[int] = Field(None, description="The unique j making the code AHSO")

    @model_validator(mode="after")
    def check_consistency(self) -> "ClassificationReport":
        flags = self.flags
        problems = []
        if self.mp_dim + self.mp_dual_dim != self.length:
            problems.append("dimension and dual dimension do not add up to the length")
        if self.hull_dim > min(self.mp_dim, self.mp_dual_dim):
            problems.append("hull larger than the code or its dual")
        if CodeProperty.HDC in flags and CodeProperty.AHDC in flags:
            problems.append("HDC and AHDC together")
        if CodeProperty.HSO in flags and CodeProperty.AHSO in flags:
            problems.append("HSO and AHSO together")
        if CodeProperty.HDC in flags and CodeProperty.HSO in flags and self.mp_dim != self.mp_dual_dim:
            problems.append("HDC and HSO without self-dual dimensions")
        for o in self.obstructions:
            if o.target in flags:
                problems.append(f"{o.target} set although ruled out by {o.rule}")
        if problems:
            raise InternalInconsistencyError("; ".join(problems))
        return self

    def has(self, flag: CodeProperty) -> bool:
        return flag in self.flags


def build(spec: MPCodeSpec) -> LinearCode:
    """The MP code, generated by the rows a_i ⊗ G_i."""
    blocks = [
        kronecker(spec.defining.row(i - 1), spec.constituent(i).generator)
        for i in range(1, spec.k + 1)
    ]
    return from_generator(vstack(spec.spec, spec.length, blocks))


def gram_decomposition(spec: MPCodeSpec) -> MonomialDecomposition:
    """Factor A·A† = D·P_tau.

    Raises:
        NotMonomialError: A·A† is not monomial; the formulas do not apply.
    """
    decomposition = monomial_decompose(gram_hermitian(spec.defining))
    check = check_involution_structure(decomposition, "conj_transpose")
    if not check.ok:
        raise InternalInconsistencyError(
            f"Gram matrix breaks the involution law at index {check.index} ({check.reason})"
        )
    return decomposition


def hull_dim_formula(spec: MPCodeSpec) -> int:
    tau = gram_decomposition(spec).perm
    hull_dim = sum(
        dim_meet_hermitian_dual(spec.constituent(i), spec.constituent(tau(i)))
        for i in range(1, spec.k + 1)
    )
    logger.debug("hull_formula_evaluated", hull_dim=hull_dim, tau=str(tau), k=spec.k, n=spec.n)
    return hull_dim


def _evidence(spec: MPCodeSpec, tau: Permutation) -> list[ConstituentEvidence]:
    out = []
    for i in range(1, spec.k + 1):
        c = spec.constituent(i)
        partner_dual = hermitian_dual(spec.constituent(tau(i)))
        out.append(
            ConstituentEvidence(
                index=i,
                partner=tau(i),
                dimension=c.dimension,
                partner_dual_dimension=partner_dual.dimension,
                meet_dimension=dim_meet_hermitian_dual(c, spec.constituent(tau(i))),
                dual_contained=contains(c, partner_dual),
                self_orthogonal=contains(partner_dual, c),
            )
        )
    return out


def _unique_one(deficits: Sequence[int]) -> Optional[int]:
    """1-based position of the single 1 in an otherwise all-zero list."""
    if sorted(deficits) != [0] * (len(deficits) - 1) + [1]:
        return None
    return list(deficits).index(1) + 1


def classify(spec: MPCodeSpec) -> ClassificationReport:
    """All five flags from per-index data.

    HDC when every C_tau(i)^⊥H ⊆ C_i (and A is square); HSO when every
    C_i ⊆ C_tau(i)^⊥H; HLCD when every meet is trivial; AHDC and AHSO when
    the summed dimension deficits equal exactly 1.

    Raises:
        NotMonomialError: A·A† is not monomial.
    """
    decomposition = gram_decomposition(spec)
    tau = decomposition.perm
    evidence = _evidence(spec, tau)

    dual_deficits = [e.partner_dual_dimension - e.meet_dimension for e in evidence]
    orth_deficits = [e.dimension - e.meet_dimension for e in evidence]
    ahdc_residual = (spec.t - spec.k) * spec.n + sum(dual_deficits)
    ahso_residual = sum(orth_deficits)

    flags = set()
    if spec.defining.is_square and all(e.dual_contained for e in evidence):
        flags.add(CodeProperty.HDC)
    if all(e.self_orthogonal for e in evidence):
        flags.add(CodeProperty.HSO)
    if ahdc_residual == 1:
        flags.add(CodeProperty.AHDC)
    if ahso_residual == 1:
        flags.add(CodeProperty.AHSO)
    if all(e.meet_dimension == 0 for e in evidence):
        flags.add(CodeProperty.HLCD)

    mp_dim = sum(spec.dimensions)
    fixed = set(fixed_set(tau))
    obstructions = nonexistence_screen(
        spec.k,
        spec.n,
        tau,
        spec.dimensions,
        [e.meet_dimension if e.index in fixed else None for e in evidence],
        cols=spec.t,
    )
    return ClassificationReport(
        method="residual",
        monomial=decomposition,
        tau=str(tau),
        length=spec.length,
        hull_dim=sum(e.meet_dimension for e in evidence),
        mp_dim=mp_dim,
        mp_dual_dim=spec.length - mp_dim,
        flags=frozenset(flags),
        evidence=evidence,
        obstructions=obstructions,
        ahdc_residual=ahdc_residual,
        ahso_residual=ahso_residual,
        ahdc_witness=_unique_one(dual_deficits) if CodeProperty.AHDC in flags else None,
        ahso_witness=_unique_one(orth_deficits) if CodeProperty.AHSO in flags else None,
    )


def classify_explicit(spec: MPCodeSpec) -> ClassificationReport:
    """The same flags, computed from the 2-cycles of tau and its fixed set.

    Each 2-cycle (i, j) contributes twice the deficits of C_i against
    C_j^⊥H; each fixed point contributes the single-code hull deficits
    of C_i. For tau = id this is the per-constituent classification.

    Raises:
        NotMonomialError: A·A† is not monomial.
        InternalInconsistencyError: The split and unsplit sums disagree.
    """
    decomposition = gram_decomposition(spec)
    tau = decomposition.perm
    pairs = two_cycles(tau)
    fixed = fixed_set(tau)
    n, t = spec.n, spec.t
    dims = spec.dimensions
    c = spec.constituent

    # h_ij = dim(C_i ∩ C_j^⊥H); the pair relation gives h_ji for free
    meets: dict[tuple[int, int], int] = {}
    for i, j in pairs:
        h_ij = dim_meet_hermitian_dual(c(i), c(j))
        h_ji = dim_meet_hermitian_dual(c(j), c(i))
        if h_ji != h_ij + dims[j - 1] - dims[i - 1]:
            raise InternalInconsistencyError(
                f"meet dimensions of pair ({i} {j}) break h_ji = h_ij + t_j - t_i"
            )
        meets[(i, j)] = h_ij
        meets[(j, i)] = h_ji
    hulls = {i: hull_dimension(c(i)) for i in fixed}
    single = {i: classify_single(c(i)) for i in fixed}

    square_gap = (t - spec.k) * n
    pair_dual = sum(n - dims[j - 1] - meets[(i, j)] for i, j in pairs)
    fixed_dual = [n - dims[i - 1] - hulls[i] for i in fixed]
    ahdc_residual = 2 * pair_dual + sum(fixed_dual) + square_gap
    unsplit = (
        sum((n - dims[j - 1] - meets[(i, j)]) + (n - dims[i - 1] - meets[(j, i)]) for i, j in pairs)
        + sum(fixed_dual)
        + square_gap
    )
    if unsplit != ahdc_residual:
        raise InternalInconsistencyError(f"AHDC residual {ahdc_residual} != unsplit sum {unsplit}")

    pair_orth = sum(dims[i - 1] - meets[(i, j)] for i, j in pairs)
    fixed_orth = [dims[i - 1] - hulls[i] for i in fixed]
    ahso_residual = 2 * pair_orth + sum(fixed_orth)

    flags = set()
    pair_hdc = all(contains(c(i), hermitian_dual(c(j))) for i, j in pairs)
    if spec.defining.is_square and pair_hdc and all(CodeProperty.HDC in single[i] for i in fixed):
        flags.add(CodeProperty.HDC)
    pair_hso = all(contains(hermitian_dual(c(j)), c(i)) for i, j in pairs)
    if pair_hso and all(CodeProperty.HSO in single[i] for i in fixed):
        flags.add(CodeProperty.HSO)
    if ahdc_residual == 1:
        flags.add(CodeProperty.AHDC)
    if ahso_residual == 1:
        flags.add(CodeProperty.AHSO)
    pair_lcd = all(meets[(i, j)] == 0 and meets[(j, i)] == 0 for i, j in pairs)
    if pair_lcd and all(CodeProperty.HLCD in single[i] for i in fixed):
        flags.add(CodeProperty.HLCD)

    ahdc_witness = _split_witness(pair_dual, fixed, fixed_dual)
    ahso_witness = _split_witness(pair_orth, fixed, fixed_orth)
    if spec.defining.is_square and (ahdc_witness is not None) != (CodeProperty.AHDC in flags):
        raise InternalInconsistencyError("AHDC split condition disagrees with its residual")
    if (ahso_witness is not None) != (CodeProperty.AHSO in flags):
        raise InternalInconsistencyError("AHSO split condition disagrees with its residual")

    mp_dim = sum(dims)
    return ClassificationReport(
        method="identity" if tau.is_identity else "explicit",
        monomial=decomposition,
        tau=str(tau),
        length=spec.length,
        hull_dim=sum(meets.values()) + sum(hulls.values()),
        mp_dim=mp_dim,
        mp_dual_dim=spec.length - mp_dim,
        flags=frozenset(flags),
        evidence=_evidence(spec, tau),
        obstructions=nonexistence_screen(
            spec.k, n, tau, dims, [hulls.get(i) for i in range(1, spec.k + 1)], cols=t
        ),
        ahdc_residual=ahdc_residual,
        ahso_residual=ahso_residual,
        ahdc_witness=ahdc_witness if CodeProperty.AHDC in flags else None,
        ahso_witness=ahso_witness if CodeProperty.AHSO in flags else None,
    )


def _split_witness(pair_total: int, fixed: list[int], fixed_deficits: list[int]) -> Optional[int]:
    """The j in F when pairs contribute nothing and exactly one fixed point is off by 1."""
    if pair_total != 0:
        return None
    position = _unique_one(fixed_deficits)
    return None if position is None else fixed[position - 1]


def _pair_data(spec: MPCodeSpec) -> tuple[list[tuple[int, int]], list[int], dict[tuple[int, int], int], dict[int, int]]:
    tau = gram_decomposition(spec).perm
    pairs = two_cycles(tau)
    fixed = fixed_set(tau)
    c = spec.constituent
    meets = {(i, j): dim_meet_hermitian_dual(c(i), c(j)) for i, j in pairs}
    hulls = {i: hull_dimension(c(i)) for i in fixed}
    return pairs, fixed, meets, hulls


def ahdc_alt_check(spec: MPCodeSpec) -> bool:
    """AHDC via dimensions and meets only: the weighted sum equals t·n - 1."""
    pairs, fixed, meets, hulls = _pair_data(spec)
    dims = spec.dimensions
    total = 2 * sum(dims[j - 1] + meets[(i, j)] for i, j in pairs) + sum(
        dims[i - 1] + hulls[i] for i in fixed
    )
    return total == spec.t * spec.n - 1


def ahso_alt_check(spec: MPCodeSpec) -> bool:
    """AHSO via dual dimensions and meets: the weighted sum equals k·n - 1."""
    pairs, fixed, meets, hulls = _pair_data(spec)
    n, dims = spec.n, spec.dimensions
    total = 2 * sum(n - dims[i - 1] + meets[(i, j)] for i, j in pairs) + sum(
        n - dims[i - 1] + hulls[i] for i in fixed
    )
    return total == spec.k * n - 1


def nonexistence_screen(
    k: int,
    n: int,
    tau: Permutation,
    dimensions: Sequence[int],
    hull_dimensions: Sequence[Optional[int]],
    cols: Optional[int] = None,
) -> list[Obstruction]:
    """Parity cases that rule out AHDC or AHSO before building anything.

    AHDC needs ``2·(pair terms) + sum_F (t_i + hull_i) = t·n - 1``; when the
    fixed-point sum has the wrong parity no choice of pairs can fix it.
    AHSO is the same with ``(n - t_i + hull_i)`` and ``k·n - 1``. Only the
    entries of ``hull_dimensions`` at fixed points are read.
    """
    if len(dimensions) != k or len(hull_dimensions) != k:
        raise DimensionMismatchError(f"expected {k} dimensions and hull dimensions")
    t = k if cols is None else cols
    fixed = fixed_set(tau)
    for i in fixed:
        if hull_dimensions[i - 1] is None:
            raise DimensionMismatchError(f"hull dimension of fixed point {i} is missing")
    hull = {i: int(hull_dimensions[i - 1]) for i in fixed}  # type: ignore[arg-type]

    out = []
    ahdc_sum = sum(dimensions[i - 1] + hull[i] for i in fixed)
    if (t * n - 1 - ahdc_sum) % 2:
        all_hso = bool(fixed) and all(hull[i] == dimensions[i - 1] for i in fixed)
        out.append(
            Obstruction(
                target=CodeProperty.AHDC,
                rule=_screen_rule(fixed, all_hso, "self_orthogonal_fixed_points"),
                detail=f"t*n-1={t * n - 1}, fixed-point sum={ahdc_sum}",
            )
        )
    ahso_sum = sum(n - dimensions[i - 1] + hull[i] for i in fixed)
    if (k * n - 1 - ahso_sum) % 2:
        all_hdc = bool(fixed) and all(hull[i] == n - dimensions[i - 1] for i in fixed)
        out.append(
            Obstruction(
                target=CodeProperty.AHSO,
                rule=_screen_rule(fixed, all_hdc, "dual_containing_fixed_points"),
                detail=f"k*n-1={k * n - 1}, fixed-point sum={ahso_sum}",
            )
        )
    return out


def _screen_rule(fixed: list[int], uniform: bool, uniform_rule: str) -> str:
    if not fixed:
        return "no_fixed_points"
    if uniform:
        return uniform_rule
    return "fixed_point_parity"


def screen_spec(spec: MPCodeSpec) -> list[Obstruction]:
    """nonexistence_screen fed from the constituents of ``spec``."""
    tau = gram_decomposition(spec).perm
    fixed = set(fixed_set(tau))
    hulls = [hull_dimension(spec.constituent(i)) if i in fixed else None for i in range(1, spec.k + 1)]
    return nonexistence_screen(spec.k, spec.n, tau, spec.dimensions, hulls, cols=spec.t)


def distance_bound(
    spec: MPCodeSpec,
    distances: Optional[Sequence[int]] = None,
    cap: Optional[int] = None,
) -> DistanceBound:
    """Lower bound on the minimum distance of the MP code.

    The prefix bound is ``min_i D_i(A)·d_i``; for NSC matrices the
    bound ``min_i (t-i+1)·d_i`` is also reported and used. Both need the
    rows of A to be linearly independent.

    Raises:
        InapplicableError: A has rank below k.
        EnumerationCapError: A constituent distance was not supplied and
            cannot be enumerated, or A is not NSC and a D_i is out of reach.
    """
    a_rank = rank(spec.defining)
    if a_rank < spec.k:
        raise InapplicableError(f"defining matrix has rank {a_rank} < k={spec.k}; no distance bound")
    if distances is None:
        distances = [min_distance(c, cap).value for c in spec.constituents]
    elif len(distances) != spec.k:
        raise DimensionMismatchError(f"expected {spec.k} distances, got {len(distances)}")
    d = list(distances)
    k, t = spec.k, spec.t

    nsc_bound = None
    if is_nsc(spec.defining):
        nsc_bound = min((t - i + 1) * d[i - 1] for i in range(1, k + 1))

    try:
        prefix_bound: Optional[int] = min(
            row_prefix_distance(spec.defining, i, cap) * d[i - 1] for i in range(1, k + 1)
        )
    except EnumerationCapError:
        if nsc_bound is None:
            raise
        prefix_bound = None

    if nsc_bound is not None:
        return DistanceBound(
            value=nsc_bound, method="nsc", prefix_bound=prefix_bound, nsc_bound=nsc_bound,
            constituent_distances=d,
        )
    assert prefix_bound is not None
    return DistanceBound(
        value=prefix_bound, method="prefix", prefix_bound=prefix_bound, constituent_distances=d
    )


# =============================================================================
# Manners
# =============================================================================


def _fixed_clause(fixed: list[int], template: str) -> list[str]:
    if not fixed:
        return []
    if len(fixed) == 1:
        return [template.format(i=fixed[0])]
    return [template.format(i="i") + ", i=" + ",".join(str(i) for i in fixed)]


_PAIR_TEMPLATES = {
    CodeProperty.HDC: "C_{i}^⊥H ⊆ C_{j}",
    CodeProperty.AHDC: "C_{i}^⊥H ⊆ C_{j}",
    CodeProperty.HSO: "C_{i} ⊆ C_{j}^⊥H",
    CodeProperty.AHSO: "C_{i} ⊆ C_{j}^⊥H",
    CodeProperty.HLCD: "C_{i} ∩ C_{j}^⊥H = {{0}}, C_{j} ∩ C_{i}^⊥H = {{0}}",
}

_FIXED_TEMPLATES = {
    CodeProperty.HDC: "C_{i}^⊥H ⊆ C_{i}",
    CodeProperty.AHDC: "C_{i}^⊥H ⊆ C_{i}",
    CodeProperty.HSO: "C_{i} ⊆ C_{i}^⊥H",
    CodeProperty.AHSO: "C_{i} ⊆ C_{i}^⊥H",
    CodeProperty.HLCD: "C_{i} ∩ C_{i}^⊥H = {{0}}",
}


def _sorted_involutions(k: int) -> list[Permutation]:
    # identity first, then by number of 2-cycles, then by the cycles themselves
    return sorted(enumerate_involutions(k), key=lambda p: (len(two_cycles(p)), two_cycles(p)))


def enumerate_manners(k: int, target: CodeProperty) -> list[Manner]:
    """Every way the target property can arise, grouped by involution.

    For AHDC and AHSO each fixed point j yields its own manner: C_j is
    almost dual-containing (self-orthogonal) and every other constituent
    condition holds exactly.
    """
    if not 1 <= k <= MAX_MANNER_K:
        raise OutOfRangeError(f"k={k} outside 1..{MAX_MANNER_K}")
    if target not in MP_FLAGS:
        raise OutOfRangeError(f"no manners for {target}")

    manners: list[Manner] = []
    for tau in _sorted_involutions(k):
        pairs = two_cycles(tau)
        fixed = fixed_set(tau)
        pair_clauses = [_PAIR_TEMPLATES[target].format(i=i, j=j) for i, j in pairs]
        if target in (CodeProperty.AHDC, CodeProperty.AHSO):
            for j in fixed:
                others = [i for i in fixed if i != j]
                requirements = pair_clauses + [f"C_{j} is {target}"]
                requirements += _fixed_clause(others, _FIXED_TEMPLATES[target])
                manners.append(
                    Manner(
                        class_number=len(manners) + 1,
                        target=target,
                        tau=str(tau),
                        requirements=requirements,
                    )
                )
            continue
        manners.append(
            Manner(
                class_number=len(manners) + 1,
                target=target,
                tau=str(tau),
                requirements=pair_clauses + _fixed_clause(fixed, _FIXED_TEMPLATES[target]),
            )
        )
    return manners


def manner_count(k: int, target: CodeProperty) -> int:
    """Closed-form number of manners.

    One per involution for HDC, HSO and HLCD; one per (involution, fixed
    point) for AHDC and AHSO.
    """
    if k < 1:
        raise OutOfRangeError(f"k={k} must be positive")
    if target in (CodeProperty.AHDC, CodeProperty.AHSO):
        return sum((k - 2 * s) * _involutions_with(k, s) for s in range(k // 2 + 1))
    return involution_count(k, include_identity=True)


def _involutions_with(k: int, s: int) -> int:
    return math.factorial(k) // (math.factorial(k - 2 * s) * math.factorial(s) * 2**s)


def quantum_params(c: LinearCode, cap: Optional[int] = None) -> QuantumParameters:
    """Stabilizer code parameters from a Hermitian dual-containing code.

    Raises:
        InapplicableError: ``c`` is not Hermitian dual-containing.
    """
    if CodeProperty.HDC not in classify_single(c):
        raise InapplicableError("code is not Hermitian dual-containing")
    return QuantumParameters(
        n=c.length,
        k=2 * c.dimension - c.length,
        d_lower=min_distance(c, cap).value,
        q=c.spec.q,
    )
