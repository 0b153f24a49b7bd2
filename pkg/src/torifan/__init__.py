"""Exact combinatorics of smooth toric surfaces with one exceptional curve."""
from .circular_graph import (WeightedCircularGraph, blow_down, blow_up,
                             canonical_form, is_isomorphic)
from .classify import (ClassificationResult, FareyIndex, Kind, build_sigma_r,
                       classify_surface, farey_path, farey_value, gamma,
                       verify_wps_identification)
from .errors import TorifanError
from .fan2d import CompleteFan2, realize, weights_of
from .lattice import Cone2, LatticeVector, LatticeVector3, det2
from .resolve import determinant_check, minimal_resolution, resolve_wps

__version__ = "0.1.0"

__all__ = [
    "WeightedCircularGraph", "blow_down", "blow_up", "canonical_form",
    "is_isomorphic", "ClassificationResult", "FareyIndex", "Kind",
    "build_sigma_r", "classify_surface", "farey_path", "farey_value", "gamma",
    "verify_wps_identification", "TorifanError", "CompleteFan2", "realize",
    "weights_of", "Cone2", "LatticeVector", "LatticeVector3", "det2",
    "determinant_check", "minimal_resolution", "resolve_wps",
]
