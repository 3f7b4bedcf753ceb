"""Exact equisingularity data of irreducible plane curve singularities.

Thin wrapper around the C++ core; polynomials are expression strings in x
and y, big integers are plain Python ints.
"""

from ._core import (
    brute_force_enumerate,
    canonical_element,
    conductor,
    enumerate_E,
    enumerate_semigroups,
    expand,
    gaps,
    generic_form,
    int_mult,
    is_irreducible,
    length_range,
    membership,
    milnor,
    puiseux_pairs,
    sample_member,
    semigroup,
    semigroup_of,
    sharp_family,
    theta_rep,
    validate,
)

__all__ = [
    "brute_force_enumerate",
    "canonical_element",
    "conductor",
    "enumerate_E",
    "enumerate_semigroups",
    "expand",
    "gaps",
    "generic_form",
    "int_mult",
    "is_irreducible",
    "length_range",
    "membership",
    "milnor",
    "puiseux_pairs",
    "sample_member",
    "semigroup",
    "semigroup_of",
    "sharp_family",
    "theta_rep",
    "validate",
]

__version__ = "0.1.0"
