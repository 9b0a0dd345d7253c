"""Exact computation of link-concordance obstructions for the links ``L(K)``."""

from __future__ import annotations

from .ccomplex import CComplex, build_LK_ccomplex, hopf_ccomplex, torres_check, two_variable_alexander
from .certify import (
    Certificate,
    Conclusion,
    certify_family,
    certify_not_hopf,
    check_LK_alexander,
    replay,
    sqp_certificate,
    validate_certificate,
)
from .floer import d_lens, d_one_over_n_surgery, tau, v0_alternating
from .kirby import (
    FramedChain,
    RationalSurgery,
    blow_down,
    blow_down_LK,
    double_branched_cover_genus1,
    slam_dunk_reduce,
)
from .knots import (
    GenDouble,
    KnotExpr,
    Mirror,
    RawSeifert,
    Reverse,
    Sum,
    Torus,
    Unknot,
    WhiteheadPos,
    alexander_polynomial,
    determinant,
    invariants,
    seifert_matrix,
    signature,
    torsion_coefficients,
)
from .laurent import LaurentPoly1, LaurentPoly2, parse_laurent
from .matrix import IntMatrix
from .parser import KnotSyntaxError, parse_knot_expression

__version__ = "0.1.0"

__all__ = [
    "CComplex",
    "build_LK_ccomplex",
    "hopf_ccomplex",
    "torres_check",
    "two_variable_alexander",
    "Certificate",
    "Conclusion",
    "certify_family",
    "certify_not_hopf",
    "check_LK_alexander",
    "replay",
    "sqp_certificate",
    "validate_certificate",
    "d_lens",
    "d_one_over_n_surgery",
    "tau",
    "v0_alternating",
    "FramedChain",
    "RationalSurgery",
    "blow_down",
    "blow_down_LK",
    "double_branched_cover_genus1",
    "slam_dunk_reduce",
    "GenDouble",
    "KnotExpr",
    "Mirror",
    "RawSeifert",
    "Reverse",
    "Sum",
    "Torus",
    "Unknot",
    "WhiteheadPos",
    "alexander_polynomial",
    "determinant",
    "invariants",
    "seifert_matrix",
    "signature",
    "torsion_coefficients",
    "LaurentPoly1",
    "LaurentPoly2",
    "parse_laurent",
    "IntMatrix",
    "KnotSyntaxError",
    "parse_knot_expression",
]
