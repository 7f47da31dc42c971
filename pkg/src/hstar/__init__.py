"""Finite point-set topology engine for generalized closed sets and H*-normality."""
from .space import (
    FiniteSpace,
    GroundTooLarge,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    Subset,
    TopologyError,
    closure,
    interior,
    regularity,
    validate_topology,
)
from .ladder import (
    ClassVector,
    ClosureOp,
    Family,
    classify,
    derived_closure,
    derived_interior,
    extent,
    guarded_closed,
)
from .separation import Normality, hstar_normal_characterization, is_normal_variant
from .maps import (
    DomainMismatch,
    MapProperty,
    PreconditionUnmet,
    SpaceMap,
    characterization_check,
    check_map_property,
    compose,
    ghstar_open_characterization,
)
from .atlas import (
    canonical_form,
    enumerate_maps,
    enumerate_topologies,
    find_witness,
    mine_implications,
)
from .audit import AuditReport, Bounds, audit_theorem, verify_witness
from .report import parse_space, print_space, repro

__version__ = "0.1.0"
