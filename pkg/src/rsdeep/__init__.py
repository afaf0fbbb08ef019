"""Finite-field toolkit for Reed-Solomon deep holes, MDS extensions and
the PGL(2,q) orbit structure of the projective plane."""

from .field import GF, BudgetExceeded, FieldError, field
from .projective import INF, Mobius, line_points, moment_vector, pgl2
from .codes import CodeError, EvaluationSet, GrsCode, code_make, syndrome
from .deepholes import (covering_radius, enumerate_deep_holes, is_deep_hole,
                        predicted_deep_holes, roth_seroussi_extensions)
from .orbits import (admissible_set, canonical_form, count_arc_pairs,
                     count_family, orbit_decomposition, orbit_label,
                     red3_classify, stabilizer)

__all__ = [
    "GF", "BudgetExceeded", "FieldError", "field",
    "INF", "Mobius", "line_points", "moment_vector", "pgl2",
    "CodeError", "EvaluationSet", "GrsCode", "code_make", "syndrome",
    "covering_radius", "enumerate_deep_holes", "is_deep_hole",
    "predicted_deep_holes", "roth_seroussi_extensions",
    "admissible_set", "canonical_form", "count_arc_pairs", "count_family",
    "orbit_decomposition", "orbit_label", "red3_classify", "stabilizer",
]
