"""weylcent engine exports."""

from .adapters import JsonAdapter, RenderAdapter, RenderResult, TextAdapter
from .centralizer_solver import (
    CentralizerBasis,
    EchelonBasis,
    FractionWitness,
    LemmaReport,
    LemmaSuiteReport,
    centralizer_basis,
    fraction_witness,
    lemma_check,
    pairwise_commute,
    verify_lemma,
    za_span,
)
from .config import ConfigLoader, WeylSettings
from .errors import WeylError
from .exact_arith import GF, QQ, FpElem, Prime, fp_inv, primes_from, rational_mod_p
from .modp_certifier import (
    CertificateReport,
    ClearedPair,
    GoodPrimeFilter,
    Verdict,
    certify_zero_commutator,
    clear_denominators,
    compute_u,
    majorant_bound,
    theorem_pipeline,
)
from .models import ElementResult, OutputMode
from .op_parser import format_element, parse
from .runtime import WeylRuntime, get_runtime, reset_runtime
from .weyl_core import (
    NEG_INFINITY,
    CenterDecomposition,
    MonomialKey,
    WeylElement,
    commutator,
    decompose_over_center,
    is_central,
    leading_form,
    monomial_mul,
    mul,
    reduce_mod_p,
    total_degree,
)

__all__ = [
    # Coefficients
    "QQ",
    "GF",
    "Prime",
    "FpElem",
    "fp_inv",
    "rational_mod_p",
    "primes_from",
    # Algebra
    "MonomialKey",
    "WeylElement",
    "CenterDecomposition",
    "NEG_INFINITY",
    "monomial_mul",
    "mul",
    "commutator",
    "total_degree",
    "leading_form",
    "reduce_mod_p",
    "is_central",
    "decompose_over_center",
    # Parser
    "parse",
    "format_element",
    # Centralizers
    "CentralizerBasis",
    "EchelonBasis",
    "FractionWitness",
    "LemmaReport",
    "LemmaSuiteReport",
    "centralizer_basis",
    "pairwise_commute",
    "za_span",
    "fraction_witness",
    "verify_lemma",
    "lemma_check",
    # Certificates
    "Verdict",
    "ClearedPair",
    "GoodPrimeFilter",
    "CertificateReport",
    "clear_denominators",
    "compute_u",
    "majorant_bound",
    "certify_zero_commutator",
    "theorem_pipeline",
    # Runtime
    "ConfigLoader",
    "WeylSettings",
    "WeylRuntime",
    "get_runtime",
    "reset_runtime",
    "ElementResult",
    "OutputMode",
    "WeylError",
    # Adapters
    "RenderAdapter",
    "RenderResult",
    "TextAdapter",
    "JsonAdapter",
]
