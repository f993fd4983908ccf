"""Upper bounds on the list-decoding radius of binary codes.

Library surface:

* :mod:`listradius.core` -- entropies, Krawtchouk exponent, radius polynomials
* :mod:`listradius.lp` -- the linear-programming rate bounds and the list-2 bound
* :mod:`listradius.bounds` -- the list-decoding radius bounds and crossover rates
* :mod:`listradius.oracle` -- exact small-scale combinatorial oracles
* :mod:`listradius.checks` -- the named verification suites behind ``verify``
* :mod:`listradius.cli` -- the ``listradius`` command line tool
"""
from .bounds import (
    BoundCurve,
    CrossoverResult,
    CurvePoint,
    RadiusWitness,
    SlopeBound,
    best_upper_bound,
    blinovsky_bound,
    crossover_rate,
    list3_closed_form,
    list_radius_bound,
    sample_curve,
    slope_relaxation_bound,
    solve_xi1,
    zero_rate_radius,
)
from .core import (
    KrawtchoukPoint,
    admissible_j,
    avg_radius_poly,
    binary_entropy,
    delta_lp1,
    inverse_entropy,
    krawtchouk_exponent,
    plotkin_radius,
)
from .errors import DomainError, ListRadiusError, NoSolutionError, SizeLimitError
from .lp import Lp2Witness, abl_branch_point, abl_list2, r_lp2
from .oracle import (
    BinaryCode,
    JointType,
    average_radius,
    avg_joint_type,
    avg_radius_of_type,
    chebyshev_radius,
    joint_type,
    load_code,
    tau_list,
    weight_marginal_exact,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryCode",
    "BoundCurve",
    "CrossoverResult",
    "CurvePoint",
    "DomainError",
    "JointType",
    "KrawtchoukPoint",
    "ListRadiusError",
    "Lp2Witness",
    "NoSolutionError",
    "RadiusWitness",
    "SizeLimitError",
    "SlopeBound",
    "abl_branch_point",
    "abl_list2",
    "admissible_j",
    "average_radius",
    "avg_joint_type",
    "avg_radius_of_type",
    "avg_radius_poly",
    "best_upper_bound",
    "binary_entropy",
    "blinovsky_bound",
    "chebyshev_radius",
    "crossover_rate",
    "delta_lp1",
    "inverse_entropy",
    "joint_type",
    "krawtchouk_exponent",
    "list3_closed_form",
    "list_radius_bound",
    "load_code",
    "plotkin_radius",
    "r_lp2",
    "sample_curve",
    "slope_relaxation_bound",
    "solve_xi1",
    "tau_list",
    "weight_marginal_exact",
    "zero_rate_radius",
    "__version__",
]
