"""Exact combinatorics of Littlewood complexes for symmetric groups."""

from .bott import Defined, Undefined, bott, delta_count
from .complexes import (
    Acyclic,
    At,
    ComplexDescriptor,
    cohomology,
    complex_terms,
    eval_stable_specht,
    module_character,
    mult_dim,
    stable_specht,
    theorem41_euler_check,
    theorem61_check,
)
from .modification import Finite, Infinite, admissible, mod_rule_closed_d1, mod_rule_recursive, closed_form_check
from .partitions import Partition, beta_set, conjugate, hook_dimension, partitions_of
from .symfunc import SymFunc, convert, hall_inner, mn_character, multiply, plethysm

__version__ = "0.1.0"
