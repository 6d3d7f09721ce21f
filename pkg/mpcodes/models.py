"""Pydantic models for classification results and search records.

Models that only carry plain values live here; records that hold
matrices or codes are defined next to the operation producing them.
"""

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class CodeProperty(str, Enum):
    """Hermitian properties a code can have."""

    HDC = "HDC"
    AHDC = "AHDC"
    HSO = "HSO"
    AHSO = "AHSO"
    HLCD = "HLCD"
    HSD = "HSD"

    def __str__(self) -> str:
        return self.value


# Flags reported for matrix-product codes, in output order
MP_FLAGS: tuple[CodeProperty, ...] = (
    CodeProperty.HDC,
    CodeProperty.AHDC,
    CodeProperty.HSO,
    CodeProperty.AHSO,
    CodeProperty.HLCD,
)


def sorted_flags(flags: frozenset[CodeProperty]) -> list[CodeProperty]:
    order = list(CodeProperty)
    return sorted(flags, key=order.index)


class ConstituentEvidence(BaseModel):
    """Per-index data backing a classification.

    ``partner`` is tau(i); all indices are 1-based.
    """

    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=1, description="Constituent index i")
    partner: int = Field(..., ge=1, description="tau(i)")
    dimension: int = Field(..., ge=0, description="dim C_i")
    partner_dual_dimension: int = Field(..., ge=0, description="dim C_tau(i)^⊥H")
    meet_dimension: int = Field(..., ge=0, description="dim(C_i ∩ C_tau(i)^⊥H)")
    dual_contained: bool = Field(..., description="C_tau(i)^⊥H ⊆ C_i")
    self_orthogonal: bool = Field(..., description="C_i ⊆ C_tau(i)^⊥H")


class Obstruction(BaseModel):
    """A property ruled out by a parity argument alone."""

    model_config = ConfigDict(frozen=True)

    target: CodeProperty
    rule: Literal[
        "no_fixed_points",
        "self_orthogonal_fixed_points",
        "dual_containing_fixed_points",
        "fixed_point_parity",
    ]
    detail: str = ""


class DistanceBound(BaseModel):
    """Lower bound on the minimum distance of an MP code."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=0, description="Certified lower bound")
    method: Literal["prefix", "nsc"] = Field(..., description="Rule giving the value")
    prefix_bound: Optional[int] = Field(None, description="min_i D_i(A) d_i when computed")
    nsc_bound: Optional[int] = Field(None, description="min_i (t-i+1) d_i when A is NSC")
    constituent_distances: list[int] = Field(default_factory=list)


class QuantumParameters(BaseModel):
    """Parameters of the stabilizer code obtained from a Hermitian dual-containing code."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    k: int = Field(..., ge=0, description="2t - n")
    d_lower: int = Field(..., ge=1, description="Lower bound on the minimum distance")
    q: int = Field(..., ge=2, description="Quantum alphabet size")
    provenance: Literal["hermitian_construction"] = "hermitian_construction"

    def __str__(self) -> str:
        return f"[[{self.n}, {self.k}, ≥{self.d_lower}]]_{self.q}"


class Manner(BaseModel):
    """One way a target property can arise, for a fixed involution."""

    model_config = ConfigDict(frozen=True)

    class_number: int = Field(..., ge=1)
    target: CodeProperty
    tau: str = Field(..., description="Involution in cycle notation")
    requirements: list[str] = Field(..., description="Conditions on the constituents")


class PropertyOutcome(BaseModel):
    """Result of one verify-suite property."""

    name: str
    passed: bool
    trials: int = Field(0, ge=0)
    detail: str = ""
    counterexample_path: Optional[str] = None
