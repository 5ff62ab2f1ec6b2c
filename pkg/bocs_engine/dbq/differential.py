"""Differential biquivers: a biquiver, a degree-one differential and a compatible ideal."""

from __future__ import annotations

from dataclasses import dataclass, field

from bocs_engine.dbq.biquiver import BiQuiver
from bocs_engine.dbq.mixed import MixedElement
from bocs_engine.errors import InconsistentSystemError
from bocs_engine.linalg import RATIONALS, solve
from bocs_engine.linalg.matrices import column, from_entries
from bocs_engine.logger import logger
from bocs_engine.pathalg import AlgebraPresentation, PathElement

# Rounds of widening the word set when searching for an ideal decomposition
MEMBERSHIP_ROUNDS = 3


@dataclass
class CompatibleIdeal:
    """Ordered generators r_1, ..., r_t of an ideal of the solid path algebra.

    Compatibility asks that d(r_i) lies in the two-sided ideal of the tensor algebra
    generated by r_1, ..., r_(i-1).
    """

    generators: list[MixedElement] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


@dataclass
class ValidationReport:
    """Problems found by ``validate``. An empty list of violations means valid.

    Attributes:
        violations: Human readable descriptions of each failed check.
        directed: Whether every arrow goes forward in the vertex order.
        compatible: Whether d of every relation generator lies in the ideal of the earlier
            ones. A failure is also a violation.
    """

    violations: list[str] = field(default_factory=list)
    directed: bool = True
    compatible: bool = True

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


@dataclass
class DifferentialBiquiver:
    """A biquiver with a differential on its arrows and relations on its solid arrows.

    Attributes:
        biquiver: Vertices and solid/dashed arrows.
        differential: ``d(x)`` for each arrow name. Missing arrows have zero differential.
        ideal: Relation generators in solid arrows only.
        name: A label for logs and exports.
    """

    biquiver: BiQuiver
    differential: dict[str, MixedElement] = field(default_factory=dict)
    ideal: CompatibleIdeal = field(default_factory=CompatibleIdeal)
    name: str = "bocs"

    def __post_init__(self) -> None:
        for name in self.differential:
            # Check that a valid arrow has been given a differential
            if not self.biquiver.has_arrow(name):
                raise ValueError(f"Differential given for unknown arrow '{name}'")
        self.differential = {
            k: v for k, v in self.differential.items() if not v.is_zero()
        }
        for generator in self.ideal:
            unknown = generator.arrows() - {a.name for a in self.biquiver.solid_arrows}
            if unknown:
                raise ValueError(
                    f"Relation '{generator}' uses arrows that are not solid: {sorted(unknown)}"
                )

    # ------------------------------ Access ------------------------------ #

    @property
    def vertices(self) -> list[str]:
        return self.biquiver.vertices

    def d(self, name: str) -> MixedElement:
        arrow = self.biquiver.arrow(name)
        return self.differential.get(name, MixedElement.zero(arrow.source, arrow.target))

    def counts(self) -> tuple[int, int]:
        return self.biquiver.counts()

    def solid_algebra(self) -> AlgebraPresentation:
        """The solid arrows modulo the relation generators."""
        return AlgebraPresentation(
            self.biquiver.solid_quiver(),
            [PathElement(g.terms, g.source, g.target) for g in self.ideal],
            f"{self.name} (solid part)",
        )

    def leibniz_extend(self, x: MixedElement) -> MixedElement:
        return leibniz_extend(self, x)

    def in_ideal(self, x: MixedElement, generators: list[MixedElement] | None = None) -> bool:
        return ideal_member(self.biquiver, x, self.ideal.generators if generators is None else generators)

    def is_zero_mod_ideal(self, x: MixedElement) -> bool:
        return x.is_zero() or (len(self.ideal) > 0 and self.in_ideal(x))

    def __str__(self) -> str:
        lines = [f"bocs {self.name}", "vertices " + " ".join(self.vertices)]
        lines += [str(a) for a in self.biquiver.arrows]
        lines += [f"d {k} = {v}" for k, v in sorted(self.differential.items())]
        lines += [f"relation {g}" for g in self.ideal]
        return "\n".join(lines)


def leibniz_extend(dbq: DifferentialBiquiver, x: MixedElement) -> MixedElement:
    """Apply the differential to ``x`` by the graded Leibniz rule.

    d(x_1 ... x_m) = sum_i (-1)^(|x_1| + ... + |x_(i-1)|) x_1 ... d(x_i) ... x_m
    """
    quiver = dbq.biquiver
    result = MixedElement.zero(x.source, x.target)
    for word, coeff in x.items():
        passed = 0
        for i, name in enumerate(word):
            dx = dbq.d(name)
            if not dx.is_zero():
                sign = -1 if passed % 2 else 1
                left, right = word[:i], word[i + 1 :]
                terms = {left + w + right: c * coeff * sign for w, c in dx.items()}
                result = result + MixedElement(terms, x.source, x.target)
            passed += quiver.degree(name)
    return result


# ------------------------------ Ideal membership ------------------------------ #


def _multipliers(
    biquiver: BiQuiver,
    x: MixedElement,
    generators: list[MixedElement],
    words: set[tuple[str, ...]],
) -> list[MixedElement]:
    """Products u * r * v with u a prefix and v a suffix of a known word."""
    prefixes = {w[:i] for w in words for i in range(len(w) + 1)}
    suffixes = {w[i:] for w in words for i in range(len(w) + 1)}
    target_degree = x.degree(biquiver)
    products = {}
    for k, r in enumerate(generators):
        for u in prefixes:
            if u and biquiver.arrow(u[-1]).source != r.target:
                continue
            if not u and r.target != x.target:
                continue
            if u and biquiver.arrow(u[0]).target != x.target:
                continue
            for v in suffixes:
                if v and biquiver.arrow(v[0]).target != r.source:
                    continue
                if not v and r.source != x.source:
                    continue
                if v and biquiver.arrow(v[-1]).source != x.source:
                    continue
                if biquiver.word_degree(u) + biquiver.word_degree(v) != target_degree:
                    continue
                terms = {u + w + v: c for w, c in r.items()}
                products[(u, k, v)] = MixedElement(terms, x.source, x.target)
    return list(products.values())


def ideal_member(
    biquiver: BiQuiver, x: MixedElement, generators: list[MixedElement]
) -> bool:
    """Whether ``x`` is a combination of products u * r * v of generators with words.

    The products are drawn from prefixes and suffixes of the words of ``x``, widened a
    few times by the words of the products found. A True answer is certain; False
    means no decomposition exists among the products tried.
    """
    if x.is_zero():
        return True
    if not generators or x.degree(biquiver) is None:
        return False

    longest = x.max_length()
    words = set(x.paths())
    products: list[MixedElement] = []
    for _ in range(MEMBERSHIP_ROUNDS):
        products = _multipliers(biquiver, x, generators, words)
        grown = words | {w for p in products for w in p.paths() if len(w) <= longest}
        if grown == words:
            break
        words = grown

    if not products:
        return False
    basis = sorted({w for p in products for w in p.paths()} | set(x.paths()))
    position = {w: k for k, w in enumerate(basis)}
    domain = RATIONALS.domain
    rows = [[domain.zero] * len(products) for _ in basis]
    for j, p in enumerate(products):
        for w, c in p.items():
            rows[position[w]][j] = domain.convert(c)
    rhs = [domain.zero] * len(basis)
    for w, c in x.items():
        rhs[position[w]] = domain.convert(c)
    try:
        solve(from_entries(rows, (len(basis), len(products)), domain), column(rhs, domain))
    except InconsistentSystemError:
        return False
    return True


# ------------------------------ Validation ------------------------------ #


def validate(dbq: DifferentialBiquiver) -> ValidationReport:
    """Check composability, degrees, d^2 = 0, directedness and compatibility."""
    quiver = dbq.biquiver
    report = ValidationReport(directed=quiver.is_directed())

    for name, dx in dbq.differential.items():
        arrow = quiver.arrow(name)
        if (dx.source, dx.target) != (arrow.source, arrow.target):
            report.violations.append(
                f"d({name}) runs {dx.source}->{dx.target}, but {name} runs "
                f"{arrow.source}->{arrow.target}"
            )
            continue
        for word in dx.paths():
            unknown = [x for x in word if not quiver.has_arrow(x)]
            if unknown:
                report.violations.append(f"d({name}) uses unknown arrows {unknown}")
                break
            if word and quiver.path_endpoints(word) != (arrow.source, arrow.target):
                report.violations.append(
                    f"d({name}) contains the word {'*'.join(word)}, which is not a path "
                    f"{arrow.source}->{arrow.target}"
                )
                break
            if quiver.word_degree(word) != arrow.degree + 1:
                report.violations.append(
                    f"d({name}) contains {'*'.join(word)} of degree "
                    f"{quiver.word_degree(word)}, expected {arrow.degree + 1}"
                )
                break
    if report.violations:
        return report

    for arrow in quiver.arrows:
        dd = leibniz_extend(dbq, dbq.d(arrow.name))
        if dd.is_zero():
            continue
        if len(dbq.ideal) and dbq.in_ideal(dd):
            continue
        report.violations.append(f"d^2({arrow.name}) = {dd} is not zero")

    for k, generator in enumerate(dbq.ideal.generators):
        dr = leibniz_extend(dbq, generator)
        if dr.is_zero():
            continue
        earlier = dbq.ideal.generators[:k]
        if not ideal_member(quiver, dr, earlier):
            report.compatible = False
            report.violations.append(
                f"d({generator}) = {dr} is not in the ideal of the earlier relations"
            )
    logger.debug(f"Validated {dbq.name}: {len(report.violations)} violations")
    return report
