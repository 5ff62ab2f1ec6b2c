from bocs_engine.dbq.biquiver import DASHED, SOLID, BiArrow, BiQuiver
from bocs_engine.dbq.differential import (
    CompatibleIdeal,
    DifferentialBiquiver,
    ValidationReport,
    ideal_member,
    leibniz_extend,
    validate,
)
from bocs_engine.dbq.gauge import gauge_equivalent, gauge_signs, rescale
from bocs_engine.dbq.mixed import MixedElement, as_mixed, letter
from bocs_engine.dbq.oracle import (
    OracleResult,
    enumerate_indecomposables,
    is_indecomposable,
    isomorphic,
    regular_bocs,
)
from bocs_engine.dbq.representations import (
    DbqMorphism,
    DbqRep,
    compose,
    identity_morphism,
    inverse_morphism,
    is_isomorphism,
    is_morphism,
    morphism_space,
    right_algebra_dim,
)

__all__ = [
    "BiArrow",
    "BiQuiver",
    "CompatibleIdeal",
    "DASHED",
    "DbqMorphism",
    "DbqRep",
    "DifferentialBiquiver",
    "MixedElement",
    "OracleResult",
    "SOLID",
    "ValidationReport",
    "as_mixed",
    "compose",
    "enumerate_indecomposables",
    "gauge_equivalent",
    "gauge_signs",
    "ideal_member",
    "identity_morphism",
    "inverse_morphism",
    "is_indecomposable",
    "is_isomorphism",
    "is_morphism",
    "isomorphic",
    "leibniz_extend",
    "letter",
    "morphism_space",
    "regular_bocs",
    "rescale",
    "right_algebra_dim",
    "validate",
]
