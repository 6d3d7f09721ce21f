"""Cross-check suite: formulas against brute force on a seeded corpus.

Each property is a function taking the shared :class:`SuiteContext` and
returning a :class:`~mpcodes.models.PropertyOutcome`. A property that
finds a disagreement writes the offending input to
``<out_dir>/<property>.txt`` in the usual text format.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import cached_property
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from mpcodes.codes import (
    LinearCode,
    all_codes,
    dim_meet_hermitian_dual,
    hermitian_dual,
    hermitian_hull,
    hull_dimension,
    intersect,
    min_distance,
    random_code,
)
from mpcodes.config import get_settings
from mpcodes.errors import MPCodesError, OutOfRangeError
from mpcodes.field import FieldSpec
from mpcodes.formats import dump, format_code, format_mp_spec
from mpcodes.models import MP_FLAGS, CodeProperty, PropertyOutcome
from mpcodes.mp import (
    MPCodeSpec,
    ahdc_alt_check,
    ahso_alt_check,
    build,
    classify,
    classify_explicit,
    distance_bound,
    enumerate_manners,
    hull_dim_formula,
    manner_count,
    screen_spec,
)
from mpcodes.observability import get_logger, log_property_result
from mpcodes.oracle import brute_classify, brute_hermitian_dual_dim, brute_hull_dim, oracle_feasible
from mpcodes.search import DefiningMatrix, find_monomial_matrices
from mpcodes.special import enumerate_involutions, involution_count

logger = get_logger(__name__)

# Largest built code (|F|^(tn) vectors) admitted to the full-space corpus
_CORPUS_SCAN = 2**14
# Largest codeword list (|F|^dim) admitted to the hull corpus
_CODEWORD_SCAN = 2**16
_MAX_HULL_N = 5


@dataclass
class SuiteResult:
    """Result of a verify run.

    Attributes:
        outcomes: One outcome per property, in run order
        duration_seconds: Total execution time
        started_at: Suite start timestamp
        completed_at: Suite completion timestamp
    """

    outcomes: list[PropertyOutcome]
    duration_seconds: float
    started_at: datetime
    completed_at: datetime

    @property
    def success(self) -> bool:
        """True if every property passed."""
        return all(o.passed for o in self.outcomes)

    @property
    def failed(self) -> list[PropertyOutcome]:
        return [o for o in self.outcomes if not o.passed]


@dataclass
class SuiteContext:
    seed: int
    trials: int
    out_dir: Optional[Path] = None
    oracle_cap: Optional[int] = None
    _pools: dict[tuple[int, int], list[DefiningMatrix]] = field(default_factory=dict)

    @cached_property
    def gf4(self) -> FieldSpec:
        return FieldSpec.from_order(4)

    @cached_property
    def gf9(self) -> FieldSpec:
        return FieldSpec.from_order(9)

    def rng(self, salt: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, salt])

    def matrix_pool(self, spec: FieldSpec, k: int) -> list[DefiningMatrix]:
        key = (spec.order, k)
        if key not in self._pools:
            exhaustive = spec.order ** (k * k) <= get_settings().matrix_scan_cap
            self._pools[key] = find_monomial_matrices(
                spec, k, mode="exhaustive" if exhaustive else "sampled", seed=self.seed
            )
        return self._pools[key]

    @cached_property
    def corpus(self) -> list[MPCodeSpec]:
        """Random monomial-Gram MP specs small enough for full-space oracle scans."""
        rng = self.rng(0)
        shapes = [(self.gf4, 2), (self.gf4, 3), (self.gf9, 2), (self.gf9, 3)]
        # sampled pools can come back empty
        shapes = [(spec, k) for spec, k in shapes if self.matrix_pool(spec, k)]
        out = []
        for trial in range(self.trials):
            spec, k = shapes[trial % len(shapes)]
            max_n = 1
            while spec.order ** (k * (max_n + 1)) <= _CORPUS_SCAN:
                max_n += 1
            n = int(rng.integers(1, max_n + 1))
            pool = self.matrix_pool(spec, k)
            defining = pool[int(rng.integers(0, len(pool)))].matrix
            codes = [random_code(spec, n, int(rng.integers(0, n + 1)), rng) for _ in range(k)]
            out.append(MPCodeSpec.of(defining, codes))
        return out

    @cached_property
    def hull_corpus(self) -> list[MPCodeSpec]:
        """Random monomial-Gram MP specs with n up to 5 and few enough codewords to list."""
        rng = self.rng(4)
        shapes = [(self.gf4, 2), (self.gf4, 3), (self.gf9, 2), (self.gf9, 3)]
        shapes = [(spec, k) for spec, k in shapes if self.matrix_pool(spec, k)]
        out = []
        for trial in range(self.trials):
            spec, k = shapes[trial % len(shapes)]
            n = int(rng.integers(1, _MAX_HULL_N + 1))
            budget = 0
            while spec.order ** (budget + 1) <= _CODEWORD_SCAN:
                budget += 1
            dims = []
            for _ in range(k):
                t = int(rng.integers(0, min(n, budget) + 1))
                budget -= t
                dims.append(t)
            pool = self.matrix_pool(spec, k)
            defining = pool[int(rng.integers(0, len(pool)))].matrix
            codes = [random_code(spec, n, int(t), rng) for t in rng.permutation(dims)]
            out.append(MPCodeSpec.of(defining, codes))
        return out

    def random_codes(self, salt: int, max_n: int) -> list[LinearCode]:
        rng = self.rng(salt)
        out = []
        for trial in range(self.trials):
            spec = self.gf4 if trial % 2 == 0 else self.gf9
            n = int(rng.integers(1, max_n + 1))
            out.append(random_code(spec, n, int(rng.integers(0, n + 1)), rng))
        return out

    def record(self, name: str, text: str) -> Optional[str]:
        if self.out_dir is None:
            return None
        return str(dump(text, self.out_dir / f"{name}.txt"))


def _fail(ctx: SuiteContext, name: str, trials: int, detail: str, text: str) -> PropertyOutcome:
    path = ctx.record(name, text)
    return PropertyOutcome(name=name, passed=False, trials=trials, detail=detail, counterexample_path=path)


# =============================================================================
# Properties
# =============================================================================


def check_involution_counts(ctx: SuiteContext) -> PropertyOutcome:
    name = "involution_counts"
    for k in range(1, 10):
        listed = len(enumerate_involutions(k))
        if listed != involution_count(k):
            return _fail(ctx, name, k, f"k={k}: {listed} listed, formula {involution_count(k)}", f"k={k}\n")
    for k in range(1, 8):
        brute = sum(
            1 for p in itertools.permutations(range(k)) if all(p[p[i]] == i for i in range(k))
        )
        if brute != involution_count(k):
            return _fail(ctx, name, k, f"k={k}: brute force {brute}", f"k={k}\n")
    if [involution_count(k) for k in (2, 3, 4)] != [2, 4, 10]:
        return _fail(ctx, name, 3, "class counts for k=2,3,4 are not 2, 4, 10", "k=2,3,4\n")
    return PropertyOutcome(name=name, passed=True, trials=9)


def check_meet_identity(ctx: SuiteContext) -> PropertyOutcome:
    name = "meet_identity"
    rng = ctx.rng(2)
    trials = 0
    for c1 in ctx.random_codes(1, 6):
        c2 = random_code(c1.spec, c1.length, int(rng.integers(0, c1.length + 1)), rng)
        trials += 1
        expected = intersect(c1, hermitian_dual(c2)).dimension
        if dim_meet_hermitian_dual(c1, c2) != expected:
            return _fail(
                ctx, name, trials, f"meet {dim_meet_hermitian_dual(c1, c2)} != {expected}",
                format_code(c1) + format_code(c2),
            )
    return PropertyOutcome(name=name, passed=True, trials=trials)


def check_gram_hull_identity(ctx: SuiteContext) -> PropertyOutcome:
    name = "gram_hull_identity"
    codes = ctx.random_codes(3, 6)
    for trial, c in enumerate(codes, start=1):
        hull = hull_dimension(c)
        if hull != hermitian_hull(c).dimension:
            return _fail(ctx, name, trial, "t - rank(GG†) differs from the hull", format_code(c))
        if oracle_feasible(c, ctx.oracle_cap):
            if brute_hull_dim(c, ctx.oracle_cap) != hull:
                return _fail(ctx, name, trial, "brute-force hull differs", format_code(c))
            if brute_hermitian_dual_dim(c, ctx.oracle_cap) + c.dimension != c.length:
                return _fail(ctx, name, trial, "dual and code dimensions do not add to n", format_code(c))
    return PropertyOutcome(name=name, passed=True, trials=len(codes))


def check_gram_structure(ctx: SuiteContext) -> PropertyOutcome:
    """Every monomial Gram matrix found has the involution structure.

    find_monomial_matrices checks each hit and raises on a violation.
    """
    name = "gram_structure"
    scanned = 0
    cases = [(ctx.gf4, 2), (ctx.gf4, 3), (ctx.gf9, 2)]
    for spec, k in cases:
        for kind in ("hermitian", "euclidean"):
            try:
                find_monomial_matrices(spec, k, gram_kind=kind)  # type: ignore[arg-type]
            except MPCodesError as exc:
                return _fail(ctx, name, scanned, f"{spec} k={k} {kind}: {exc}", f"{spec} k={k} {kind}\n")
            scanned += spec.order ** (k * k)
    return PropertyOutcome(name=name, passed=True, trials=scanned)


def check_hull_formula(ctx: SuiteContext) -> PropertyOutcome:
    name = "hull_formula"
    for trial, spec in enumerate(ctx.hull_corpus, start=1):
        formula = hull_dim_formula(spec)
        brute = brute_hull_dim(build(spec), ctx.oracle_cap)
        if formula != brute:
            return _fail(ctx, name, trial, f"formula {formula} != oracle {brute}", format_mp_spec(spec))
    return PropertyOutcome(name=name, passed=True, trials=len(ctx.hull_corpus))


def check_classifier_equivalence(ctx: SuiteContext) -> PropertyOutcome:
    name = "classifier_equivalence"
    for trial, spec in enumerate(ctx.corpus, start=1):
        report = classify(spec)
        explicit = classify_explicit(spec)
        brute = brute_classify(build(spec), ctx.oracle_cap) & frozenset(MP_FLAGS)
        problems = []
        if report.flags != explicit.flags:
            problems.append(f"explicit {sorted(explicit.flags)}")
        if report.flags != brute:
            problems.append(f"oracle {sorted(brute)}")
        if report.hull_dim != explicit.hull_dim:
            problems.append("hull dimensions differ")
        if ahdc_alt_check(spec) != (CodeProperty.AHDC in report.flags):
            problems.append("AHDC dimension identity disagrees")
        if ahso_alt_check(spec) != (CodeProperty.AHSO in report.flags):
            problems.append("AHSO dimension identity disagrees")
        if problems:
            detail = f"flags {sorted(report.flags)} vs " + "; ".join(problems)
            return _fail(ctx, name, trial, detail, format_mp_spec(spec))
    return PropertyOutcome(name=name, passed=True, trials=len(ctx.corpus))


def check_parity_screen(ctx: SuiteContext) -> PropertyOutcome:
    """All monomial 2x2 matrices over GF(4) with all pairs of length-2 codes."""
    name = "parity_screen"
    codes = list(all_codes(ctx.gf4, 2))
    trials = 0
    for dm in ctx.matrix_pool(ctx.gf4, 2):
        for c1, c2 in itertools.product(codes, repeat=2):
            spec = MPCodeSpec.of(dm.matrix, [c1, c2])
            trials += 1
            try:
                report = classify(spec)
            except MPCodesError as exc:
                return _fail(ctx, name, trials, str(exc), format_mp_spec(spec))
            ruled_out = {o.target for o in screen_spec(spec)}
            almost = report.flags & {CodeProperty.AHDC, CodeProperty.AHSO}
            if ruled_out & report.flags or (almost and dm.tau != "id"):
                return _fail(ctx, name, trials, f"flags {sorted(almost)} with tau={dm.tau}", format_mp_spec(spec))
    return PropertyOutcome(name=name, passed=True, trials=trials)


def check_distance_soundness(ctx: SuiteContext) -> PropertyOutcome:
    name = "distance_soundness"
    for trial, spec in enumerate(ctx.hull_corpus, start=1):
        code = build(spec)
        if code.is_zero:
            continue
        bound = distance_bound(spec)
        actual = min_distance(code).value
        if actual < bound.value:
            return _fail(ctx, name, trial, f"distance {actual} < bound {bound.value}", format_mp_spec(spec))
        if bound.nsc_bound is not None and bound.prefix_bound is not None and bound.nsc_bound > bound.prefix_bound:
            return _fail(ctx, name, trial, "NSC bound exceeds the prefix bound", format_mp_spec(spec))
    return PropertyOutcome(name=name, passed=True, trials=len(ctx.hull_corpus))


def check_table_classes(ctx: SuiteContext) -> PropertyOutcome:
    name = "table_classes"
    counts = [len(enumerate_manners(k, CodeProperty.HDC)) for k in (2, 3, 4)]
    if counts != [2, 4, 10]:
        return _fail(ctx, name, 3, f"class counts {counts}", "k=2,3,4\n")
    last = enumerate_manners(4, CodeProperty.HDC)[-1]
    if last.tau != "(1 4)(2 3)":
        return _fail(ctx, name, 3, f"last class for k=4 has tau={last.tau}", "k=4\n")
    second = enumerate_manners(3, CodeProperty.HDC)[1]
    if second.requirements != ["C_1^⊥H ⊆ C_2", "C_3^⊥H ⊆ C_3"]:
        return _fail(ctx, name, 3, f"k=3 class 2 reads {second.requirements}", "k=3\n")
    return PropertyOutcome(name=name, passed=True, trials=3)


def check_manner_counts(ctx: SuiteContext) -> PropertyOutcome:
    name = "manner_counts"
    trials = 0
    for target in MP_FLAGS:
        for k in range(1, 7):
            trials += 1
            listed = len(enumerate_manners(k, target))
            if listed != manner_count(k, target):
                return _fail(ctx, name, trials, f"{target} k={k}: {listed} listed", f"{target} k={k}\n")
    return PropertyOutcome(name=name, passed=True, trials=trials)


PROPERTIES: dict[str, Callable[[SuiteContext], PropertyOutcome]] = {
    "involution_counts": check_involution_counts,
    "meet_identity": check_meet_identity,
    "gram_hull_identity": check_gram_hull_identity,
    "gram_structure": check_gram_structure,
    "hull_formula": check_hull_formula,
    "classifier_equivalence": check_classifier_equivalence,
    "parity_screen": check_parity_screen,
    "distance_soundness": check_distance_soundness,
    "table_classes": check_table_classes,
    "manner_counts": check_manner_counts,
}


def run_suite(
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    out_dir: Optional[str | Path] = None,
    properties: Optional[list[str]] = None,
    oracle_cap: Optional[int] = None,
) -> SuiteResult:
    """Run the selected properties (all by default) in declaration order.

    An unexpected error inside a property marks that property failed and
    the suite moves on.
    """
    settings = get_settings()
    names = list(PROPERTIES) if not properties else properties
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        raise OutOfRangeError(f"unknown properties: {', '.join(unknown)}")

    ctx = SuiteContext(
        seed=settings.seed if seed is None else seed,
        trials=settings.verify_trials if trials is None else trials,
        out_dir=None if out_dir is None else Path(out_dir),
        oracle_cap=oracle_cap,
    )
    started_at = datetime.now(timezone.utc)
    logger.info("verify_suite_started", seed=ctx.seed, trials=ctx.trials, properties=len(names))

    outcomes = []
    for name in [n for n in PROPERTIES if n in names]:
        began = time.time()
        try:
            outcome = PROPERTIES[name](ctx)
        except Exception as e:
            logger.error("property_crashed", property=name, error=str(e))
            outcome = PropertyOutcome(name=name, passed=False, detail=f"{type(e).__name__}: {e}")
        log_property_result(name, outcome.passed, outcome.trials, time.time() - began)
        outcomes.append(outcome)

    completed_at = datetime.now(timezone.utc)
    result = SuiteResult(
        outcomes=outcomes,
        duration_seconds=(completed_at - started_at).total_seconds(),
        started_at=started_at,
        completed_at=completed_at,
    )
    logger.info(
        "verify_suite_completed",
        passed=len(outcomes) - len(result.failed),
        failed=len(result.failed),
        duration_seconds=round(result.duration_seconds, 3),
    )
    return result
