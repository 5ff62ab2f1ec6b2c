"""Transfer of the composition on a Hom complex to its cohomology.

A splitting writes every degree of the complex as ``B + H + L``: boundaries, chosen
cocycle representatives of cohomology, and a complement of the cocycles. The
homotopy ``G`` sends a boundary back to its chosen preimage in ``L`` and kills ``H``
and ``L``. The higher products are ``m_n = p lambda_n`` with

    lambda_2 = m_2
    lambda_n = - sum_{k+l=n} (-1)^(k + (l-1)(|a_1|+...+|a_k|)) m_2(G lambda_k, G lambda_l)

and the convention ``G lambda_1 = -id``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from bocs_engine.ainfty.complex import HomComplex, HomComplexElement
from bocs_engine.linalg.matrices import (
    coordinates,
    entries,
    from_entries,
    independent_indices,
    kernel_basis,
)
from bocs_engine.logger import logger

Key = tuple[int, int, int]


@dataclass
class Splitting:
    """The decomposition of one Hom space ``V = B + H + L``, as coordinate vectors.

    Attributes:
        boundaries: A basis of B, the images of basis vectors of the previous degree.
        preimages: For each boundary, the index of the basis vector it is the image of.
        harmonic: A basis of H, a complement of B in the cocycles.
        complement: Indices of basis vectors spanning L, a complement of the cocycles.
    """

    boundaries: list[list] = field(default_factory=list)
    preimages: list[int] = field(default_factory=list)
    harmonic: list[list] = field(default_factory=list)
    complement: list[int] = field(default_factory=list)


@dataclass
class SplitData:
    """Splittings of every Hom space of a complex, keyed by ``(source, target, degree)``."""

    complex: HomComplex
    spaces: dict[Key, Splitting] = field(default_factory=dict)

    def split(self, source: int, target: int, degree: int) -> Splitting:
        return self.spaces.get((source, target, degree), Splitting())

    def cohomology_dim(self, source: int, target: int, degree: int) -> int:
        return len(self.split(source, target, degree).harmonic)

    def harmonic(self, source: int, target: int, degree: int) -> list[HomComplexElement]:
        return [
            self.complex.combine(source, target, degree, vec)
            for vec in self.split(source, target, degree).harmonic
        ]

    def _decompose(self, x: HomComplexElement) -> tuple[list, list]:
        """Coefficients of ``x`` on the bases of B and H."""
        split = self.split(x.source, x.target, x.degree)
        size = self.complex.dimension(x.source, x.target, x.degree)
        domain = self.complex._domain()
        standard = [
            [domain.one if k == j else domain.zero for k in range(size)] for j in split.complement
        ]
        basis = split.boundaries + split.harmonic + standard
        coeffs = coordinates(basis, self.complex.coordinates(x), domain)
        nb, nh = len(split.boundaries), len(split.harmonic)
        return coeffs[:nb], coeffs[nb : nb + nh]

    def project(self, x: HomComplexElement) -> list:
        """p(x): the coordinates of ``x`` on the chosen basis of H."""
        return self._decompose(x)[1]

    def homotopy(self, x: HomComplexElement) -> HomComplexElement:
        """G(x), of degree ``|x| - 1``."""
        boundary, _ = self._decompose(x)
        split = self.split(x.source, x.target, x.degree)
        result = self.complex.zero(x.source, x.target, x.degree - 1)
        lower = self.complex.basis(x.source, x.target, x.degree - 1)
        for coeff, index in zip(boundary, split.preimages):
            if coeff:
                result = self.complex.add(result, self.complex.scale(lower[index], coeff))
        return result


def _differential_images(complex: HomComplex, source: int, target: int, degree: int) -> list[list]:
    """Coordinates of d(e_j) for the basis vectors e_j of one Hom space."""
    return [
        complex.coordinates(complex.differential(b))
        for b in complex.basis(source, target, degree)
    ]


def choose_splitting(complex: HomComplex) -> SplitData:
    """Split every Hom space of ``complex`` deterministically.

    Boundaries are taken greedily from the images of the basis of the previous degree.
    Cohomology representatives are taken first from products of representatives of
    lower positive degrees, then from the kernel basis in row-reduced order.
    """
    domain = complex._domain()
    data = SplitData(complex)
    families = range(len(complex.resolutions))
    pairs = [(s, t) for s in families for t in families]
    all_degrees = sorted({k for s, t in pairs for k in complex.degrees(s, t)})

    for degree in all_degrees:
        for s, t in pairs:
            if degree not in complex.degrees(s, t):
                continue
            size = complex.dimension(s, t, degree)
            split = Splitting()

            incoming = _differential_images(complex, s, t, degree - 1)
            chosen = independent_indices(incoming, domain)
            split.boundaries = [incoming[j] for j in chosen]
            split.preimages = chosen

            outgoing = _differential_images(complex, s, t, degree)
            upper = complex.dimension(s, t, degree + 1)
            split.complement = independent_indices(outgoing, domain) if upper else []

            if upper and outgoing:
                d = from_entries(
                    [[vec[r] for vec in outgoing] for r in range(upper)], (upper, size), domain
                )
                cocycles = [[row[0] for row in entries(v)] for v in kernel_basis(d)]
            else:
                cocycles = [
                    [domain.one if k == j else domain.zero for k in range(size)] for j in range(size)
                ]

            candidates = _products(data, s, t, degree) + cocycles
            split.harmonic = [
                candidates[j]
                for j in independent_indices(candidates, domain, start=split.boundaries)
            ]
            data.spaces[(s, t, degree)] = split

    logger.debug(
        "Cohomology dimensions: "
        + ", ".join(
            f"{complex.labels[s]}->{complex.labels[t]}[{k}]={len(sp.harmonic)}"
            for (s, t, k), sp in data.spaces.items()
            if sp.harmonic
        )
    )
    return data


def _products(data: SplitData, source: int, target: int, degree: int) -> list[list]:
    """Coordinates of products of representatives of lower positive degrees."""
    complex = data.complex
    products = []
    for middle in range(len(complex.resolutions)):
        for inner in range(1, degree):
            outer = degree - inner
            for g in data.harmonic(middle, target, outer):
                for f in data.harmonic(source, middle, inner):
                    products.append(complex.coordinates(complex.compose(g, f)))
    return products


# ------------------------------ Higher products ------------------------------ #


def merkulov_lambda(data: SplitData, inputs: list[HomComplexElement]) -> HomComplexElement:
    """lambda_n(a_1, ..., a_n) for a composable string, ``a_n`` applied first.

    A string whose neighbours do not meet gives zero.
    """
    complex = data.complex
    n = len(inputs)
    if n < 2:
        raise ValueError("lambda_n needs at least two inputs")
    total_degree = sum(a.degree for a in inputs) + 2 - n
    result = complex.zero(inputs[-1].source, inputs[0].target, total_degree)
    if any(left.source != right.target for left, right in zip(inputs, inputs[1:])):
        return result
    if n == 2:
        return complex.compose(inputs[0], inputs[1])

    for k in range(1, n):
        l = n - k
        leading = sum(a.degree for a in inputs[:k])
        sign = -1 if (k + (l - 1) * leading) % 2 == 0 else 1
        term = complex.compose(_g_lambda(data, inputs[:k]), _g_lambda(data, inputs[k:]))
        result = complex.add(result, complex.scale(term, sign))
    return result


def _g_lambda(data: SplitData, inputs: list[HomComplexElement]) -> HomComplexElement:
    if len(inputs) == 1:
        return data.complex.scale(inputs[0], -1)
    return data.homotopy(merkulov_lambda(data, inputs))


@dataclass
class AInftyProducts:
    """The transferred products on the cohomology of a Hom complex.

    Inputs and outputs are coordinate vectors on the chosen representatives of H.
    """

    data: SplitData

    @classmethod
    def from_complex(cls, complex: HomComplex) -> AInftyProducts:
        return cls(choose_splitting(complex))

    def element(self, source: int, target: int, degree: int, coeffs: list) -> HomComplexElement:
        reps = self.data.harmonic(source, target, degree)
        result = self.data.complex.zero(source, target, degree)
        for coeff, rep in zip(coeffs, reps):
            if coeff:
                result = self.data.complex.add(result, self.data.complex.scale(rep, coeff))
        return result

    def m(self, inputs: list[HomComplexElement]) -> list:
        """m_n(a_1, ..., a_n) = p lambda_n(a_1, ..., a_n) on the basis of H."""
        return self.data.project(merkulov_lambda(self.data, inputs))

    def m2_constants(self, degree: int = 1) -> dict[tuple, list]:
        """Structure constants of m_2 on pairs of representatives of ``degree``.

        Keys are ``(outer source, outer target, outer index, inner source, inner index)``
        for the product ``outer o inner``.
        """
        complex = self.data.complex
        families = range(len(complex.resolutions))
        constants = {}
        for s in families:
            for m in families:
                for t in families:
                    for a, f in enumerate(self.data.harmonic(s, m, degree)):
                        for b, g in enumerate(self.data.harmonic(m, t, degree)):
                            value = self.m([g, f])
                            if any(value):
                                constants[(m, t, b, s, a)] = value
        return constants
