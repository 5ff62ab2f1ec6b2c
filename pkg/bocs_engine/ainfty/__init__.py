from bocs_engine.ainfty.complex import HomComplex, HomComplexElement, build_hom_complex
from bocs_engine.ainfty.keller import (
    CountReport,
    standard_complex,
    standard_products,
    verify_bocs_counts,
)
from bocs_engine.ainfty.transfer import (
    AInftyProducts,
    SplitData,
    Splitting,
    choose_splitting,
    merkulov_lambda,
)

__all__ = [
    "AInftyProducts",
    "CountReport",
    "HomComplex",
    "HomComplexElement",
    "SplitData",
    "Splitting",
    "build_hom_complex",
    "choose_splitting",
    "merkulov_lambda",
    "standard_complex",
    "standard_products",
    "verify_bocs_counts",
]
