"""Rectangular diagrams of Legendrian links in (R^3, xi_sym)."""

from .diagram import (
    Corner,
    HorizArc,
    InvalidDiagramError,
    RectDiagram,
    ValidationReport,
    VertArc,
    canonicalize,
    components,
    derive_verticals,
    is_braided,
    validate,
)
from .generators import (
    CableSpec,
    cable_slope,
    cable_type,
    gen_braid_closure,
    gen_torus_knot,
    gen_unknot_braided,
    gen_unknot_rect,
)
from .invariants import (
    InvariantReport,
    corner_census,
    crossings,
    invariant_report,
    rotation,
    self_linking_minus,
    self_linking_plus,
    thurston_bennequin,
    winding,
    writhe,
)
from .io import ParseError, parse, serialize
from .moves import (
    Move,
    MoveClass,
    MoveRejected,
    apply_move,
    classify,
    destabilize,
    flip,
    h_commute,
    parse_move,
    rotate_theta,
    stabilize,
    v_commute,
)

__version__ = "0.1.0"
