"""Signature-based Groebner basis algorithms (GVWHS, F5G, F5B, F5GEN) over GF(p)."""
from .engine import GBResult, run
from .field import FieldElement, PrimeField
from .oracle import buchberger, normal_form, reduce_basis, verify_gb
from .poly import MonomialOrder, Polynomial, PolyRing, interreduce
from .problem import gen_benchmark, parse_problem
from .sigmodule import ModuleOrder, Signature

__all__ = [
    "FieldElement", "GBResult", "ModuleOrder", "MonomialOrder", "PolyRing", "Polynomial",
    "PrimeField", "Signature", "buchberger", "gen_benchmark", "interreduce", "normal_form",
    "parse_problem", "reduce_basis", "run", "verify_gb",
]
