"""Exact braid-group representations over Q(rho) and trace-based knot tests.

The package separates three-string braid words from their reversals by
comparing exact traces over parametrized families of representations:

- :mod:`braidsep.field`: arithmetic in the field Q(rho), rho^2 + rho + 1 = 0.
- :mod:`braidsep.linalg`: exact dense matrices with fraction-free elimination.
- :mod:`braidsep.components`: components of the representation varieties and
  their dimensions.
- :mod:`braidsep.catalog`: the worked component table for dimensions 6 to 11.
- :mod:`braidsep.family`: parametrized families from construction codes.
- :mod:`braidsep.braid`: braid words, trace comparison, separation verdicts.
- :mod:`braidsep.knots`: the bundled knot table and sweep driver.
- :mod:`braidsep.service` / :mod:`braidsep.cli`: HTTP service and its thin
  command line client.
"""

from .braid import (
    BraidParseError,
    BraidWord,
    SeparationVerdict,
    SeparationWitness,
    evaluate,
    parse_braid,
    reference_representation,
    reverse,
    separate,
    trace_pair,
)
from .catalog import CatalogRow, catalog_row, catalog_rows
from .components import (
    GammaComponent,
    MultiplicityVector,
    NoSimplesError,
    Q0DimVector,
    beta_of_alpha,
    enumerate_components,
    is_simple_root,
    local_quiver,
)
from .family import (
    FamilyResolution,
    ParamFamily,
    Representation,
    family_for_type,
    generic_family,
    make_representation,
    parse_code,
    random_specialization,
    realize_plan,
)
from .field import (
    ONE,
    RHO,
    EisensteinRational,
    ScalarParseError,
    parse_scalar,
    render,
)
from .knots import (
    KnotEntry,
    KnotFileError,
    SweepResult,
    alexander_vector,
    bundled_knots_path,
    closure_is_knot,
    load_knots,
    run_invertibility_sweep,
)
from .linalg import ExactMatrix, SingularMatrixError, span_dimension

__version__ = "0.1.0"

__all__ = [
    "BraidParseError",
    "BraidWord",
    "CatalogRow",
    "EisensteinRational",
    "ExactMatrix",
    "FamilyResolution",
    "GammaComponent",
    "KnotEntry",
    "KnotFileError",
    "MultiplicityVector",
    "NoSimplesError",
    "ONE",
    "ParamFamily",
    "Q0DimVector",
    "RHO",
    "Representation",
    "ScalarParseError",
    "SeparationVerdict",
    "SeparationWitness",
    "SingularMatrixError",
    "SweepResult",
    "alexander_vector",
    "beta_of_alpha",
    "bundled_knots_path",
    "catalog_row",
    "catalog_rows",
    "closure_is_knot",
    "enumerate_components",
    "evaluate",
    "family_for_type",
    "generic_family",
    "is_simple_root",
    "load_knots",
    "local_quiver",
    "make_representation",
    "parse_braid",
    "parse_code",
    "parse_scalar",
    "random_specialization",
    "realize_plan",
    "reference_representation",
    "render",
    "reverse",
    "run_invertibility_sweep",
    "separate",
    "span_dimension",
    "trace_pair",
    "__version__",
]
