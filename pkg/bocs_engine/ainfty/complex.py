"""The dg category of maps between projective resolutions.

An element of degree k from family s to family t has one component
``P^s_n -> P^t_(n-k)`` for every n where both terms exist. The differential is
``d(f) = f o D - (-1)^k D o f`` and composition is composition of components.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from bocs_engine.findim import ModuleMap, Resolution, hom_space
from bocs_engine.linalg.matrices import coordinates


@dataclass
class HomComplexElement:
    """A homogeneous map between two resolutions of a family.

    Attributes:
        source: Index of the source resolution.
        target: Index of the target resolution.
        degree: The shift k of resolution degree.
        components: ``n -> f_n: P^source_n -> P^target_(n-k)``. Missing components are zero.
    """

    source: int
    target: int
    degree: int
    components: dict[int, ModuleMap] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components.values())


class HomComplex:
    """Hom spaces, differential and composition for a family of resolutions.

    Args:
        resolutions: Minimal resolutions over one algebra, e.g. of the standard modules.
        labels: A name for each resolution, used in logs and exports.
    """

    def __init__(self, resolutions: list[Resolution], labels: list[str] | None = None):
        if resolutions:
            algebra = resolutions[0].module.algebra
            # Check that a valid family has been passed
            if any(r.module.algebra is not algebra for r in resolutions):
                raise ValueError("All resolutions must be over the same algebra")
        self.resolutions = resolutions
        self.labels = labels or [r.module.name for r in resolutions]
        self._bases: dict[tuple[int, int, int], list[HomComplexElement]] = {}

    # ------------------------------ Shape ------------------------------ #

    def length(self, family: int) -> int:
        return len(self.resolutions[family].projectives)

    def indices(self, source: int, target: int, degree: int) -> list[int]:
        """The n with both P^source_n and P^target_(n-degree) present."""
        return [
            n
            for n in range(self.length(source))
            if 0 <= n - degree < self.length(target)
        ]

    def degrees(self, source: int, target: int) -> range:
        return range(-self.length(target) + 1, self.length(source))

    def _term(self, family: int, n: int):
        return self.resolutions[family].projectives[n]

    # ------------------------------ Linear structure ------------------------------ #

    def zero(self, source: int, target: int, degree: int) -> HomComplexElement:
        return HomComplexElement(
            source,
            target,
            degree,
            {
                n: ModuleMap(self._term(source, n), self._term(target, n - degree))
                for n in self.indices(source, target, degree)
            },
        )

    def basis(self, source: int, target: int, degree: int) -> list[HomComplexElement]:
        """A basis of the degree-``degree`` space, component by component."""
        key = (source, target, degree)
        if key not in self._bases:
            elements = []
            for n in self.indices(source, target, degree):
                for f in hom_space(self._term(source, n), self._term(target, n - degree)):
                    element = self.zero(source, target, degree)
                    element.components[n] = f
                    elements.append(element)
            self._bases[key] = elements
        return self._bases[key]

    def dimension(self, source: int, target: int, degree: int) -> int:
        return len(self.basis(source, target, degree))

    def flatten(self, element: HomComplexElement) -> list:
        return [
            x
            for n in self.indices(element.source, element.target, element.degree)
            for x in element.components[n].flatten()
        ]

    def coordinates(self, element: HomComplexElement) -> list:
        basis = self.basis(element.source, element.target, element.degree)
        domain = self._domain()
        return coordinates([self.flatten(b) for b in basis], self.flatten(element), domain)

    def combine(self, source: int, target: int, degree: int, coeffs: list) -> HomComplexElement:
        """The combination of basis elements with coefficients ``coeffs``."""
        result = self.zero(source, target, degree)
        for coeff, b in zip(coeffs, self.basis(source, target, degree)):
            if coeff:
                result = self.add(result, self.scale(b, coeff))
        return result

    def add(self, f: HomComplexElement, g: HomComplexElement) -> HomComplexElement:
        if (f.source, f.target, f.degree) != (g.source, g.target, g.degree):
            raise ValueError("Only elements of the same Hom space can be added")
        components = {n: _add_maps(fn, g.components[n]) for n, fn in f.components.items()}
        return HomComplexElement(f.source, f.target, f.degree, components)

    def scale(self, f: HomComplexElement, coeff) -> HomComplexElement:
        components = {n: _scale_map(fn, coeff) for n, fn in f.components.items()}
        return HomComplexElement(f.source, f.target, f.degree, components)

    def _domain(self):
        return self.resolutions[0].module.field.domain

    # ------------------------------ dg structure ------------------------------ #

    def compose(self, g: HomComplexElement, f: HomComplexElement) -> HomComplexElement:
        """``g o f``, of degree ``|g| + |f|``; zero when the families do not meet."""
        degree = g.degree + f.degree
        result = self.zero(f.source, g.target, degree)
        if f.target != g.source:
            return result
        for n in self.indices(f.source, g.target, degree):
            middle = n - f.degree
            if n in f.components and middle in g.components:
                result.components[n] = f.components[n].then(g.components[middle])
        return result

    def differential(self, f: HomComplexElement) -> HomComplexElement:
        """``d(f) = f o D - (-1)^|f| D o f``."""
        k = f.degree
        sign = -1 if k % 2 == 0 else 1
        source, target = self.resolutions[f.source], self.resolutions[f.target]
        result = self.zero(f.source, f.target, k + 1)
        for m in self.indices(f.source, f.target, k + 1):
            component = result.components[m]
            d_source = source.differential(m)
            if d_source is not None and (m - 1) in f.components:
                component = _add_maps(component, d_source.then(f.components[m - 1]))
            d_target = target.differential(m - k)
            if d_target is not None and m in f.components:
                term = f.components[m].then(d_target)
                component = _add_maps(component, _scale_map(term, sign))
            result.components[m] = component
        return result


def _scale_map(f: ModuleMap, coeff) -> ModuleMap:
    c = f.source.field(coeff)
    return ModuleMap(f.source, f.target, {v: m * c for v, m in f.components.items()})


def _add_maps(f: ModuleMap, g: ModuleMap) -> ModuleMap:
    return ModuleMap(f.source, f.target, {v: f.components[v] + g.components[v] for v in f.components})


def build_hom_complex(resolutions: list[Resolution], labels: list[str] | None = None) -> HomComplex:
    """The graded Hom complex of ``resolutions`` with its differential and composition."""
    return HomComplex(resolutions, labels)
