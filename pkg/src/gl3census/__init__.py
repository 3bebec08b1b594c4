"""Exact counts of invertible 3x3 matrices over Z/n by permanent value.

The count is evaluated two independent ways: closed formulas (closed_form) and
exhaustive enumeration (oracle). The verify module cross-checks one against
the other, along with the structural maps (structure_maps) the formulas rest
on. See the CLI (gl3census) for the user-facing surface.
"""

from .closed_form import BranchTag, CaseCensusRow, case_rows, count, gl3_order, qr_branch
from .matrices import CLASS_LABELS, ClassLabel, Mat2, Mat3, mat2, mat3, parse_mat3
from .modring import Modulus, NotAUnit, Residue, factorize, residue, totient
from .oracle import (
    CaseCensus,
    CensusTooLarge,
    ClassCensus,
    CountTable,
    case_census,
    census_2x2,
    census_naive,
    census_tiered,
    class_census,
)
from .structure_maps import (
    EmptinessReport,
    PivotNotUnit,
    ShiftNotDivisible,
    ShiftResult,
    emptiness_scan,
    fiber_count,
    project,
    psi_shift,
    witness,
)
from .verify import CheckResult, ModulusMismatch, diff_tables, run_suite

__version__ = "0.1.0"

__all__ = [
    "BranchTag",
    "CaseCensus",
    "CaseCensusRow",
    "CensusTooLarge",
    "CheckResult",
    "CLASS_LABELS",
    "ClassCensus",
    "ClassLabel",
    "CountTable",
    "EmptinessReport",
    "Mat2",
    "Mat3",
    "Modulus",
    "ModulusMismatch",
    "NotAUnit",
    "PivotNotUnit",
    "Residue",
    "ShiftNotDivisible",
    "ShiftResult",
    "case_census",
    "case_rows",
    "census_2x2",
    "census_naive",
    "census_tiered",
    "class_census",
    "count",
    "diff_tables",
    "emptiness_scan",
    "factorize",
    "fiber_count",
    "gl3_order",
    "mat2",
    "mat3",
    "parse_mat3",
    "project",
    "psi_shift",
    "qr_branch",
    "residue",
    "run_suite",
    "totient",
    "witness",
    "__version__",
]
