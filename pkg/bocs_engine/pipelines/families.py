"""Parametrised families of bocses with known invariants."""

from __future__ import annotations

from dataclasses import dataclass

from bocs_engine.dbq import (
    DASHED,
    BiArrow,
    BiQuiver,
    CompatibleIdeal,
    DifferentialBiquiver,
    MixedElement,
)
from bocs_engine.pathalg import Arrow, AlgebraPresentation, PathElement, Quiver


def _numbered(prefix: str, count: int) -> list[str]:
    if count == 1:
        return [prefix]
    return [f"{prefix}{k}" for k in range(1, count + 1)]


# ------------------------------ Two simple modules ------------------------------ #


@dataclass
class TwoSimple:
    """The bocs with s solid and t dashed arrows ``1 -> 2`` and zero differential.

    Attributes:
        solid: Number s of solid arrows.
        dashed: Number t of dashed arrows.
        dbq: The bocs.
        expected_dim: Dimension ``2 + s + t + s*t`` of its right algebra.
        expected_type: ``finite`` for s <= 1, ``tame`` for s = 2, ``wild`` otherwise.
    """

    solid: int
    dashed: int
    dbq: DifferentialBiquiver
    expected_dim: int
    expected_type: str


def two_simple(s: int, t: int) -> TwoSimple:
    """Quasi-hereditary algebras with two simples up to Morita equivalence, as bocses.

    ``two_simple(1, 1)`` is the bocs of the principal block of the Schur algebra of sl2.
    """
    # Check that valid counts have been requested
    if s < 0 or t < 0:
        raise ValueError(f"Arrow counts must be non-negative, got s={s}, t={t}")

    arrows = [BiArrow(name, "1", "2") for name in _numbered("a", s)]
    arrows += [BiArrow(name, "1", "2", DASHED) for name in _numbered("phi", t)]
    dbq = DifferentialBiquiver(BiQuiver(["1", "2"], arrows), {}, CompatibleIdeal(), f"twosimple({s},{t})")
    kind = "finite" if s <= 1 else "tame" if s == 2 else "wild"
    return TwoSimple(s, t, dbq, 2 + s + t + s * t, kind)


# ------------------------------ Schur algebras of finite type ------------------------------ #


@dataclass
class SchurFamily:
    """The basic algebra of a representation-finite Schur block and its bocs.

    Attributes:
        n: Number of simple modules.
        presentation: The algebra on ``1 <-> 2 <-> ... <-> n``, of dimension 4(n-1)+1.
        dbq: The bocs with solid arrows a_i: i -> i+1, b_i: i -> i+2 and dashed
            phi_i: i --> i+1.
        expected_borel_dim: n(n+1)/2, the dimension of the solid algebra.
        expected_right_dim: n(n+1)(2n+1)/6, the dimension of the right algebra.
    """

    n: int
    presentation: AlgebraPresentation
    dbq: DifferentialBiquiver
    expected_borel_dim: int
    expected_right_dim: int

    @property
    def expected_algebra_dim(self) -> int:
        return 4 * (self.n - 1) + 1


def _schur_presentation(n: int) -> AlgebraPresentation:
    vertices = [str(v) for v in range(1, n + 1)]
    arrows = []
    for i in range(1, n):
        arrows.append(Arrow(f"alpha{i}", str(i), str(i + 1)))
        arrows.append(Arrow(f"beta{i}", str(i + 1), str(i)))
    quiver = Quiver(vertices, arrows)

    def p(*word: str, coeff=1) -> PathElement:
        return PathElement.path(word, quiver.arrow(word[-1]).source, quiver.arrow(word[0]).target, coeff)

    relations = []
    for i in range(2, n):
        relations.append(p(f"alpha{i - 1}", f"beta{i - 1}") - p(f"beta{i}", f"alpha{i}"))
        relations.append(p(f"alpha{i}", f"alpha{i - 1}"))
        relations.append(p(f"beta{i - 1}", f"beta{i}"))
    relations.append(p(f"alpha{n - 1}", f"beta{n - 1}"))
    return AlgebraPresentation(quiver, relations, f"A{n}")


def _schur_bocs(n: int) -> DifferentialBiquiver:
    vertices = [str(v) for v in range(1, n + 1)]
    arrows = [BiArrow(f"a{i}", str(i), str(i + 1)) for i in range(1, n)]
    arrows += [BiArrow(f"b{i}", str(i), str(i + 2)) for i in range(1, n - 1)]
    arrows += [BiArrow(f"phi{i}", str(i), str(i + 1), DASHED) for i in range(1, n)]
    quiver = BiQuiver(vertices, arrows)

    def w(*word: str, coeff=1) -> MixedElement:
        return MixedElement.path(word, quiver.arrow(word[-1]).source, quiver.arrow(word[0]).target, coeff)

    differential = {
        f"b{i}": w(f"phi{i + 1}", f"a{i}") - w(f"a{i + 1}", f"phi{i}") for i in range(1, n - 1)
    }
    relations = [w(f"a{i + 1}", f"a{i}") for i in range(1, n - 1)]
    relations += [w(f"a{i + 2}", f"b{i}") + w(f"b{i + 1}", f"a{i}") for i in range(1, n - 2)]
    return DifferentialBiquiver(quiver, differential, CompatibleIdeal(relations), f"schur_A{n}")


def schur_an(n: int) -> SchurFamily:
    """The representation-finite Schur block with n simples."""
    # Check that a valid size has been requested
    if n < 2:
        raise ValueError(f"The family starts at n=2, got n={n}")
    return SchurFamily(
        n,
        _schur_presentation(n),
        _schur_bocs(n),
        n * (n + 1) // 2,
        n * (n + 1) * (2 * n + 1) // 6,
    )
