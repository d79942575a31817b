"""Exact computational Lie theory for the theta correspondence of SL2(R) x F4."""

__version__ = "0.1.0"

from .root_system import (  # noqa: E402
    build_root_system,
    dominant_representative,
    is_dominant,
    weyl_orbit,
)
from .characters import (  # noqa: E402
    E,
    IrrepLabel,
    freudenthal_character,
    infinitesimal_character,
    tensor_decompose,
    theta_infchar_transfer,
    weyl_dim,
)
from .branching import TauLabel, branch, classify_tau, make_embedding  # noqa: E402
from .sl2 import (  # noqa: E402
    So2Support,
    build_highest_weight_module,
    build_lowest_weight_module,
    filtration_rank,
    hc_parameter,
    tensor_modules,
)
from .theta import (  # noqa: E402
    dual_support,
    hom_dim_ktype,
    lift_ktype,
    lift_so2type,
    match_lowest_types,
    pi_compact_table,
    theta_support,
)
