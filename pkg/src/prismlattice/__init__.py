"""Exact lattice tools for C-type lattices, changemaker complements and their classification."""
from .alexander import alexander_polynomial, alexander_report, torsion_coefficients, torsion_from_polynomial
from .census import examine, exhaustive_search, modified_basis, predicted_pairs
from .changemaker import complement_gram, enumerate_changemakers, is_changemaker, standard_basis
from .contfrac import montesinos_coeffs, neg_eval, neg_expand, pos_eval, pos_expand
from .ctype import build_ctype, is_ctype, recover_pq
from .families import classify, verify_row, verify_tables
from .isometry import are_isometric, verify_isometry
from .lattice import GramLattice, is_breakable, is_irreducible, vectors_of_norm_at_most

__all__ = [
    "alexander_polynomial",
    "alexander_report",
    "torsion_coefficients",
    "torsion_from_polynomial",
    "examine",
    "exhaustive_search",
    "modified_basis",
    "predicted_pairs",
    "complement_gram",
    "enumerate_changemakers",
    "is_changemaker",
    "standard_basis",
    "montesinos_coeffs",
    "neg_eval",
    "neg_expand",
    "pos_eval",
    "pos_expand",
    "build_ctype",
    "is_ctype",
    "recover_pq",
    "classify",
    "verify_row",
    "verify_tables",
    "are_isometric",
    "verify_isometry",
    "GramLattice",
    "is_breakable",
    "is_irreducible",
    "vectors_of_norm_at_most",
]

__version__ = "0.1.0"
