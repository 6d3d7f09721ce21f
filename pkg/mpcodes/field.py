"""Exact arithmetic in GF(p^m).

An element is stored by its canonical integer encoding: the polynomial
``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` modulo the field modulus is the
integer ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``. Arithmetic is delegated
to a :mod:`galois` field class built from the same modulus, whose integer
representation uses the same encoding.

Hermitian operations need ``m`` even; then ``q = p^(m/2)`` and the
conjugate of ``x`` is ``x^q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence

import galois
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from mpcodes.errors import (
    FieldZeroDivisionError,
    InvalidFieldError,
    NotHermitianCapableError,
    OutOfRangeError,
    SpecMismatchError,
)

MAX_FIELD_ORDER = 2**16


@lru_cache(maxsize=None)
def _galois_field(p: int, m: int, modulus: tuple[int, ...]) -> type[galois.FieldArray]:
    if m == 1:
        # GF(p)[x]/(x + c) is GF(p) itself
        return galois.GF(p)
    poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
    return galois.GF(p**m, irreducible_poly=poly)


class FieldSpec(BaseModel):
    """Description of GF(p^m) by characteristic, degree and modulus.

    ``modulus`` lists the coefficients of a monic irreducible polynomial of
    degree ``m``, lowest degree first.
    """

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=2, description="Field characteristic (prime)")
    m: int = Field(..., ge=1, description="Extension degree over GF(p)")
    modulus: tuple[int, ...] = Field(
        ..., description="Monic irreducible modulus, low-to-high coefficients"
    )

    @field_validator("p")
    @classmethod
    def validate_prime(cls, v: int) -> int:
        if not galois.is_prime(v):
            raise ValueError(f"characteristic {v} is not prime")
        return v

    @model_validator(mode="after")
    def validate_modulus(self) -> "FieldSpec":
        if self.p**self.m > MAX_FIELD_ORDER:
            raise ValueError(f"field order {self.p}^{self.m} exceeds {MAX_FIELD_ORDER}")
        if len(self.modulus) != self.m + 1:
            raise ValueError(f"modulus must have {self.m + 1} coefficients")
        if any(c < 0 or c >= self.p for c in self.modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {self.p})")
        if self.modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        poly = galois.Poly(list(reversed(self.modulus)), field=galois.GF(self.p))
        if not poly.is_irreducible():
            raise ValueError(f"modulus {poly} is reducible over GF({self.p})")
        return self

    @classmethod
    def create(cls, p: int, m: int, modulus: Sequence[int] | None = None) -> "FieldSpec":
        """Build a spec, raising InvalidFieldError instead of ValidationError.

        When ``modulus`` is omitted the default modulus is used.
        """
        try:
            if modulus is None:
                return cls.default(p, m)
            return cls(p=p, m=m, modulus=tuple(modulus))
        except ValidationError as exc:
            raise InvalidFieldError(_first_error(exc)) from exc

    @classmethod
    def default(cls, p: int, m: int) -> "FieldSpec":
        """GF(p^m) with the lexicographically smallest monic irreducible modulus."""
        if m < 1 or not galois.is_prime(p):
            raise InvalidFieldError(f"no field GF({p}^{m})")
        if p**m > MAX_FIELD_ORDER:
            raise InvalidFieldError(f"field order {p}^{m} exceeds {MAX_FIELD_ORDER}")
        if m == 1:
            modulus: tuple[int, ...] = (0, 1)
        else:
            poly = galois.irreducible_poly(p, m, method="min")
            modulus = tuple(int(c) for c in poly.coeffs[::-1])
        return cls(p=p, m=m, modulus=modulus)

    @classmethod
    def from_order(cls, order: int) -> "FieldSpec":
        """GF(order) with the default modulus."""
        if order < 2 or not galois.is_prime_power(order):
            raise InvalidFieldError(f"{order} is not a prime power")
        primes, exponents = galois.factors(order)
        return cls.default(int(primes[0]), int(exponents[0]))

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def is_hermitian_capable(self) -> bool:
        return self.m % 2 == 0

    @property
    def q(self) -> int:
        """Square root of the field order; only defined for even ``m``."""
        if not self.is_hermitian_capable:
            raise NotHermitianCapableError(
                f"GF({self.p}^{self.m}) has odd degree, no Hermitian form"
            )
        return self.p ** (self.m // 2)

    @property
    def gf(self) -> type[galois.FieldArray]:
        """The galois field class carrying this modulus."""
        return _galois_field(self.p, self.m, self.modulus)

    def __str__(self) -> str:
        return f"GF({self.order})"


def _first_error(exc: ValidationError) -> str:
    errors = exc.errors()
    if not errors:
        return str(exc)
    return str(errors[0].get("msg", exc))


@dataclass(frozen=True)
class FieldElement:
    """One element of a field, by canonical integer encoding."""

    spec: FieldSpec
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.spec.order:
            raise OutOfRangeError(f"{self.value} is not an element of {self.spec}")

    @classmethod
    def from_coeffs(cls, spec: FieldSpec, coeffs: Sequence[int]) -> "FieldElement":
        """Element with polynomial coefficients ``coeffs`` (lowest degree first)."""
        if len(coeffs) > spec.m or any(c < 0 or c >= spec.p for c in coeffs):
            raise OutOfRangeError(f"{list(coeffs)} are not coefficients over {spec}")
        return cls(spec, sum(c * spec.p**i for i, c in enumerate(coeffs)))

    @property
    def coeffs(self) -> tuple[int, ...]:
        digits = []
        v = self.value
        for _ in range(self.spec.m):
            v, d = divmod(v, self.spec.p)
            digits.append(d)
        return tuple(digits)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def as_galois(self) -> Any:
        """This element as a 0-d galois array."""
        return self.spec.gf(self.value)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return add(self, -other)

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.spec, int(-self.as_galois()))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, other)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, inv(other))

    def __pow__(self, exponent: int) -> "FieldElement":
        return power(self, exponent)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def _check_same(x: FieldElement, y: FieldElement) -> None:
    if x.spec != y.spec:
        raise SpecMismatchError(f"{x.spec} and {y.spec} differ")


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    _check_same(x, y)
    return FieldElement(x.spec, int(x.as_galois() + y.as_galois()))


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    _check_same(x, y)
    return FieldElement(x.spec, int(x.as_galois() * y.as_galois()))


def inv(x: FieldElement) -> FieldElement:
    """Multiplicative inverse."""
    if x.is_zero:
        raise FieldZeroDivisionError(f"zero has no inverse in {x.spec}")
    return FieldElement(x.spec, int(x.as_galois() ** -1))


def power(x: FieldElement, exponent: int) -> FieldElement:
    """``x`` raised to a non-negative integer power, with ``0^0 = 1``."""
    if exponent < 0:
        raise OutOfRangeError(f"negative exponent {exponent}")
    if exponent == 0:
        return one(x.spec)
    return FieldElement(x.spec, int(x.as_galois() ** exponent))


def conjugate(x: FieldElement) -> FieldElement:
    """The involutive automorphism ``x -> x^q``."""
    return power(x, x.spec.q)


def zero(spec: FieldSpec) -> FieldElement:
    return FieldElement(spec, 0)


def one(spec: FieldSpec) -> FieldElement:
    return FieldElement(spec, 1)


def elements(spec: FieldSpec) -> list[FieldElement]:
    """All elements in ascending encoding order."""
    return [FieldElement(spec, v) for v in range(spec.order)]
