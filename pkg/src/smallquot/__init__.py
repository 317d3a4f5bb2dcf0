"""Finite computations behind small quotients of braid groups and Sp(2g, F2)."""

from .braids import (
    ArtinAutomorphism,
    BraidWord,
    FreeGroupWord,
    artin_action,
    bkl_word,
    braid_equal,
    epsilon_for,
    relation_suite,
)
from .carriers import available_backends, backend_name, set_backend, using_backend
from .catalog import CatalogEntry, emit_catalog, emit_report, parse_catalog
from .checks import (
    base_case_check,
    lemma_a_check,
    mcg_orbit_checks,
    simplicity_check,
    sn_quotient_lattice_check,
    sp_info,
    theorem_a_catalog_check,
    verify_iso,
)
from .errors import (
    BraidWordError,
    CarrierMismatchError,
    CatalogError,
    CeilingExceededError,
    ConventionError,
    DomainError,
    InvalidHomomorphismError,
    NotInGroupError,
    SmallQuotError,
    TrivialGroupError,
)
from .gf2 import GF2Matrix, GF2Vector
from .groups import (
    FiniteGroupTable,
    centralizer,
    closure,
    compose,
    conjugacy_class,
    inverse,
    is_simple,
    normal_closure,
    orbit_stabilizer,
)
from .homs import (
    BraidHom,
    GroupMap,
    HomClass,
    canonicalize,
    enumerate_homs,
    equal_up_to_aut,
    exceptional_b4,
    outer_projection,
    s6_outer_automorphism,
    standard_projection,
)
from .named import alternating_group, builtin_group, cyclic_group, symmetric_group
from .perm import Permutation
from .reports import CheckReport
from .symplectic import (
    QuadraticRefinement,
    is_symplectic,
    iso_to_symmetric,
    quadratic_refinements,
    sp_counting_checks,
    sp_group,
    sp_refinement_action,
    symplectic_form,
    transvection,
    witness_vector,
)

__version__ = "0.1.0"
