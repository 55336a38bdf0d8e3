"""Exact computation of crossed G-algebras from twisted Frobenius algebra bundles."""

from .builders import shipped, shipped_instances
from .bundle import TwistedBundle, ValidationError
from .characters import two_character, verify_modular, verify_two_class
from .crossed import build_crossed, separability_unit, verify_weak_crossed
from .field import RATIONALS, Field
from .frobenius import AlgebraData
from .groups import FiniteGroup, from_cayley_table
from .hochschild import build_hh0
from .instance import ParseError, load_instance, parse_instance, save_instance, serialize_instance
from .suite import run_full_suite

__all__ = [
    "AlgebraData",
    "Field",
    "FiniteGroup",
    "ParseError",
    "RATIONALS",
    "TwistedBundle",
    "ValidationError",
    "build_crossed",
    "build_hh0",
    "from_cayley_table",
    "load_instance",
    "parse_instance",
    "run_full_suite",
    "save_instance",
    "separability_unit",
    "serialize_instance",
    "shipped",
    "shipped_instances",
    "two_character",
    "verify_modular",
    "verify_two_class",
    "verify_weak_crossed",
]
