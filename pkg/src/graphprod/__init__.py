"""Exact computation in graph products of finite monoids.

Normal forms decide the word problem; the bounded action on F_k turns any
two distinct elements into distinct transformations of a finite set.
"""
from .action import FkTable, act_letter, check_well_defined, enumerate_fk, theta
from .errors import *  # noqa: F401,F403
from .fixtures import FIXTURE_NAMES, load_fixture
from .formats import parse_instance, parse_word
from .graph import CommutationGraph, induced_subgraph, is_complete_subset
from .monoid import FiniteMonoid, VertexMorphism, adjoin_identity, validate_monoid, validate_morphism
from .normalform import (
    Letter,
    append_letter,
    block_length,
    flatten,
    lfnf,
    reduce,
    rfnf_block_count,
    support,
)
from .oracle import ClosureConfig, closure_equal, min_blocks
from .product import (
    GPElement,
    GraphProductSpec,
    element_of,
    embed_vertex,
    induced_morphism,
    multiply,
    retract,
)
from .separation import SeparationCertificate, separate_finite, separate_pipeline, verify_certificate

__version__ = "0.1.0"
