from __future__ import annotations

from typing import Iterator, Mapping

from sympy.polys.domains import QQ

from bocs_engine.linalg.fields import format_scalar

Path = tuple[str, ...]


class PathElement:
    """A linear combination of paths sharing one source and one target.

    Paths are tuples of arrow names written right-to-left, so in the product
    ``x * y`` the paths of ``y`` are applied first. The empty tuple stands for the
    trivial path at ``source == target``. Coefficients are exact rationals.
    """

    __slots__ = ("_terms", "source", "target")

    def __init__(self, terms: Mapping[Path, object], source: str, target: str):
        cleaned = {}
        for path, coeff in terms.items():
            coeff = QQ.convert(coeff)
            if coeff:
                cleaned[tuple(path)] = coeff
        self._terms = cleaned
        self.source = source
        self.target = target

    # ------------------------------ Constructors ------------------------------ #

    @classmethod
    def zero(cls, source: str, target: str):
        return cls({}, source, target)

    @classmethod
    def trivial(cls, vertex: str):
        return cls({(): 1}, vertex, vertex)

    @classmethod
    def path(cls, path: Path, source: str, target: str, coeff=1):
        return cls({tuple(path): coeff}, source, target)

    def _new(self, terms: Mapping[Path, object], source: str, target: str):
        return type(self)(terms, source, target)

    # ------------------------------ Inspection ------------------------------ #

    @property
    def terms(self) -> dict[Path, object]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Path, object]]:
        return iter(sorted(self._terms.items()))

    def paths(self) -> list[Path]:
        return sorted(self._terms)

    def coefficient(self, path: Path):
        return self._terms.get(tuple(path), QQ.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def max_length(self) -> int:
        return max((len(p) for p in self._terms), default=0)

    def arrows(self) -> set[str]:
        return {name for path in self._terms for name in path}

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------ Arithmetic ------------------------------ #

    def _check_parallel(self, other: PathElement) -> None:
        if self.is_zero() or other.is_zero():
            return
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError(
                f"Cannot add elements {self.source}->{self.target} and "
                f"{other.source}->{other.target}"
            )

    def __add__(self, other: PathElement):
        self._check_parallel(other)
        source, target = (other.source, other.target) if self.is_zero() else (self.source, self.target)
        terms = dict(self._terms)
        for path, coeff in other._terms.items():
            terms[path] = terms.get(path, QQ.zero) + coeff
        return self._new(terms, source, target)

    def __neg__(self):
        return self._new({p: -c for p, c in self._terms.items()}, self.source, self.target)

    def __sub__(self, other: PathElement):
        return self + (-other)

    def scale(self, coeff):
        coeff = QQ.convert(coeff)
        return self._new({p: coeff * c for p, c in self._terms.items()}, self.source, self.target)

    def __mul__(self, other: PathElement):
        """``self`` after ``other``; zero when the endpoints do not meet."""
        if self.source != other.target:
            return self._new({}, other.source, self.target)
        terms: dict[Path, object] = {}
        for p, c in self._terms.items():
            for q, d in other._terms.items():
                key = p + q
                terms[key] = terms.get(key, QQ.zero) + c * d
        return self._new(terms, other.source, self.target)

    # ------------------------------ Comparison ------------------------------ #

    def __eq__(self, other) -> bool:
        if not isinstance(other, PathElement):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (self.source, self.target, self._terms) == (
            other.source,
            other.target,
            other._terms,
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, frozenset(self._terms.items())))

    # ------------------------------ Display ------------------------------ #

    def format(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for path, coeff in self.items():
            word = "*".join(path) if path else f"e_{self.source}"
            sign = "-" if coeff < 0 else "+"
            size = abs(coeff)
            body = word if size == 1 else f"{format_scalar(size)}*{word}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format()!r}, {self.source}->{self.target})"
