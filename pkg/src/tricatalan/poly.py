"""Dense univariate polynomials with exact integer coefficients.

The whole package counts things, so coefficients are plain Python ints
(exact, unbounded).  A polynomial is stored as a tuple of coefficients in
ascending powers with no trailing zeros; the zero polynomial stores the
empty tuple.  Values are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Poly:
    """Polynomial c0 + c1*x + c2*x^2 + ... with coeffs[k] the coefficient of x^k."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int] | Iterable[int]) -> Poly:
        return cls(tuple(coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if k < 0:
            raise ValueError("power must be nonnegative")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for k, c in enumerate(b):
            summed[k] += c
        return Poly(tuple(summed))

    def mul_x(self) -> Poly:
        """Multiply by x (shift every coefficient up one power)."""
        if not self.coeffs:
            return self
        return Poly((0,) + self.coeffs)

    def eval_at_one(self) -> int:
        """Sum of coefficients, i.e. the total count behind the polynomial."""
        return sum(self.coeffs)

    def to_json(self) -> list[int]:
        """Ascending coefficient list, e.g. [2, 3, 2] for 2 + 3x + 2x^2."""
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{k}" if c == 1 else f"{c}*x^{k}")
        return " + ".join(terms)
