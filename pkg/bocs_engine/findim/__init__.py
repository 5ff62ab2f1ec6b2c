from bocs_engine.findim.modules import (
    FDModule,
    ModuleMap,
    direct_sum,
    hom_space,
    image,
    kernel,
    quotient,
    simple_module,
    submodule,
    top_and_radical,
    zero_module,
)
from bocs_engine.findim.resolutions import Resolution, ext_dim, ext_table, minimal_resolution
from bocs_engine.findim.standard import (
    HeredityCheck,
    HeredityStep,
    delta_multiplicities,
    is_quasi_hereditary,
    map_from_projective,
    projective,
    reorder,
    standard_module,
)

__all__ = [
    "FDModule",
    "HeredityCheck",
    "HeredityStep",
    "ModuleMap",
    "Resolution",
    "delta_multiplicities",
    "direct_sum",
    "ext_dim",
    "ext_table",
    "hom_space",
    "image",
    "is_quasi_hereditary",
    "kernel",
    "map_from_projective",
    "minimal_resolution",
    "projective",
    "quotient",
    "reorder",
    "simple_module",
    "standard_module",
    "submodule",
    "top_and_radical",
    "zero_module",
]
