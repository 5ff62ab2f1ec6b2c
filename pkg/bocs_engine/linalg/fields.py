from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime
from sympy.polys.domains import GF, QQ

from bocs_engine.errors import ParseError


@lru_cache(maxsize=None)
def _prime_domain(p: int):
    return GF(p)


@dataclass(frozen=True)
class Field:
    """The ground field of one computation.

    Symbolic data (path coefficients, differentials) always carries rational
    coefficients. A ``Field`` converts them on the way into a matrix, so a prime
    field is only ever used for the numbers of a single computation.

    Attributes:
        characteristic: 0 for the rationals, otherwise a prime p.
    """

    characteristic: int = 0

    def __post_init__(self) -> None:
        # Check that a valid characteristic has been requested
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise ValueError(
                f"Characteristic {self.characteristic} is neither 0 nor a prime"
            )

    @property
    def domain(self):
        if self.characteristic == 0:
            return QQ
        return _prime_domain(self.characteristic)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __call__(self, value):
        """Convert an integer or rational coefficient into this field."""
        q = QQ.convert(value)
        if self.characteristic == 0:
            return q
        return self.domain.convert_from(q, QQ)

    def is_zero(self, value) -> bool:
        return self.domain.is_zero(value)

    def inverse(self, value):
        if self.is_zero(value):
            raise ZeroDivisionError("zero has no inverse")
        return self.domain.quo(self.domain.one, value)

    def elements(self) -> list:
        """All elements of a prime field, in the order 0, 1, ..., p - 1."""
        if self.characteristic == 0:
            raise ValueError("The rationals cannot be enumerated")
        return [self.domain(i) for i in range(self.characteristic)]

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


RATIONALS = Field(0)


def scalar(value):
    """Return ``value`` as an exact rational coefficient."""
    return QQ.convert(value)


def parse_scalar(text: str, line: int = 0, column: int = 0):
    """Parse ``"3"``, ``"-2"`` or ``"3/4"`` into a rational coefficient."""
    try:
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                raise ValueError
            return QQ(int(num), int(den))
        return QQ(int(text))
    except ValueError:
        raise ParseError(f"'{text}' is not a rational number", line, column)


def format_scalar(value) -> str:
    """Render a rational coefficient as ``"3"`` or ``"3/4"``."""
    q = QQ.convert(value)
    num, den = QQ.numer(q), QQ.denom(q)
    return f"{num}" if den == 1 else f"{num}/{den}"
