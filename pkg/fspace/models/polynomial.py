"""
Exact integer-coefficient polynomials in one variable.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Union

Operand = Union["IntPolynomial", int]


def _trim(coefficients: Iterable[int]) -> tuple[int, ...]:
    coeffs = [int(c) for c in coefficients]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) or (0,)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    ``coefficients[k]`` is the coefficient of λ^k (degree-ascending). Trailing
    zeros are dropped; the zero polynomial is ``(0,)`` with degree 0.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def variable(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """λ − root."""
        return cls((-root, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1]

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def __call__(self, x: int) -> int:
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    @staticmethod
    def _coerce(other: Operand) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other: Operand) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        size = max(len(self.coefficients), len(rhs.coefficients))
        a = self.coefficients + (0,) * (size - len(self.coefficients))
        b = rhs.coefficients + (0,) * (size - len(rhs.coefficients))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Operand) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Operand) -> "IntPolynomial":
        return (-self) + other

    def __mul__(self, other: Operand) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        product = [0] * (len(self.coefficients) + len(rhs.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(rhs.coefficients):
                product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def render(self, variable: str = "λ") -> str:
        """Text form ``c_n*λ^n + ... + c_0``, zero terms omitted."""
        terms = []
        for degree in range(self.degree, -1, -1):
            c = self.coefficients[degree]
            if c == 0:
                continue
            if degree == 0:
                body = f"{abs(c)}"
            elif degree == 1:
                body = f"{abs(c)}*{variable}"
            else:
                body = f"{abs(c)}*{variable}^{degree}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.render()

    def to_list(self) -> list[int]:
        return list(self.coefficients)
