"""Exact continued fractions, Dedekind sums, and their cluster points."""

from .errors import (
    CfdedError,
    DivisionByZero,
    EmptyInput,
    IndexBeforePeriod,
    IndexOutOfRange,
    InternalInvariant,
    InvalidPeriod,
    MixedRadicand,
    NotBounded,
    NotCoprime,
    NotFound,
    PerfectSquare,
    RationalValue,
    SurdSyntaxError,
    ToleranceNotReached,
    ZeroDenominator,
)
from .exactnum import (
    QuadSurd,
    squarefree_split,
    surd_arith,
    surd_ceil,
    surd_cmp,
    surd_floor,
    surd_normalize,
    to_decimal,
)
from .contfrac import (
    ConvergentTable,
    IntercalaryForm,
    LegendreWitness,
    NegativeExpansion,
    RegularExpansion,
    convergents,
    evaluate_purely_periodic,
    expand_negative,
    expand_regular,
    intercalary_decompose,
    intercalary_decompose_digits,
    is_floor_convergent,
    legendre_witness,
    transition_prefix,
)
from .dedekind import (
    DedekindValue,
    dedekind_fast,
    dedekind_naive,
    dedekind_negative_formula,
    dedekind_regular_formula,
    sawtooth,
)
from .clusters import (
    AsymptoticReport,
    ClusterPoint,
    CoincidenceReport,
    ProbeReport,
    classify,
    cluster_points_U,
    cluster_points_V,
    coincidence_analysis,
    convergence_probe,
)
from .cli import SurdExpr, main, parse_surd

__version__ = "0.1.0"
