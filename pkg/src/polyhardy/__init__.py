"""Hardy-space objects on the polytorus/polydisk at finite truncation.

The package realizes, at desk scale (finitely many variables, bounded
degree, finite coefficient dimension), the interlocking coordinate
systems of multiplier theory for vector-valued Hardy spaces:

* sparse power series with vector or operator coefficients
  (:mod:`polyhardy.series`) indexed by finitely supported multi-indices
  (:mod:`polyhardy.multiindex`);
* their Dirichlet-series twins under the prime-power Bohr bijection
  (:mod:`polyhardy.dirichlet`);
* Hardy norms, Fourier extraction on torus grids, and extremal kernels
  (:mod:`polyhardy.hardy`);
* multiplication operators compressed to truncated coefficient space,
  whose norms climb to the symbol's sup norm (:mod:`polyhardy.multiplier`).

Everything is numerically checkable: norm identities that are exact
theorems for the full spaces become quadrature-exact or
oracle-tolerance identities here, and the test suite pins each one.
"""

from .multiindex import (
    MultiIndex,
    index_to_multiindex,
    max_frequency_for_simplex,
    multiindex_to_index,
    primes,
    simplex,
    weighted_degree,
)
from .series import (
    PowerSeries,
    TruncationParams,
    evaluate_power,
    op_vec_product,
    radial_dilate,
    truncate,
)
from .dirichlet import (
    DirichletSeries,
    HalfPlanePoint,
    bohr,
    bohr_inverse,
    dirichlet_product,
    epsilon_shift,
    evaluate_dirichlet,
    recover_coefficient,
)
from .hardy import (
    TorusGrid,
    cole_gamelin_kernel,
    cole_gamelin_kernel_value,
    fourier_coefficient,
    h2_norm,
    hinf_norm,
    hp_norm,
    point_evaluation_bound,
)
from .multiplier import (
    CompressionMatrix,
    assemble_compression,
    diagonal_example,
    hp_rayleigh_lower_bound,
    multiplier_norm_schedule,
    operator_norm,
    pointwise_vs_symbolic,
)
from .seriesio import (
    SeriesFormatError,
    load_series,
    parse_series_file,
    save_series,
    series_from_dict,
    series_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "CompressionMatrix",
    "DirichletSeries",
    "HalfPlanePoint",
    "MultiIndex",
    "PowerSeries",
    "SeriesFormatError",
    "TorusGrid",
    "TruncationParams",
    "assemble_compression",
    "bohr",
    "bohr_inverse",
    "cole_gamelin_kernel",
    "cole_gamelin_kernel_value",
    "diagonal_example",
    "dirichlet_product",
    "epsilon_shift",
    "evaluate_dirichlet",
    "evaluate_power",
    "fourier_coefficient",
    "h2_norm",
    "hinf_norm",
    "hp_norm",
    "hp_rayleigh_lower_bound",
    "index_to_multiindex",
    "load_series",
    "max_frequency_for_simplex",
    "multiindex_to_index",
    "multiplier_norm_schedule",
    "op_vec_product",
    "operator_norm",
    "parse_series_file",
    "point_evaluation_bound",
    "pointwise_vs_symbolic",
    "primes",
    "radial_dilate",
    "recover_coefficient",
    "save_series",
    "series_from_dict",
    "series_to_dict",
    "simplex",
    "truncate",
    "weighted_degree",
]
