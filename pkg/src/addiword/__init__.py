"""Additive and abelian patterns in integer words."""

__version__ = "0.1.0"

from .collinear import (
    DoubleApTriple,
    Factorization,
    LatticePoint,
    LineKey,
    collinear,
    equal_average_factorization,
    find_collinear,
    find_double_ap,
    lattice_path,
    line_key,
)
from .detectors import (
    DiscrepancyReport,
    PowerLocation,
    find_abelian_square,
    find_additive_power,
    min_discrepancy_scan,
)
from .ejs import (
    BinaryWord,
    EjsAlignment,
    NearSquare,
    compute_bound,
    decode_to_near_square,
    ejs_encode,
    find_binary_abelian_square,
    near_additive_square,
    shift_to_positive,
)
from .errors import AddiwordError, DomainError, NoZeroCrossing, NotFound, ParseError, RangeError
from .search import SearchConfig, SearchResult, count_avoiding, extendable, longest_avoiding
from .words import Alphabet, Factor, Word, factor_average, factor_sum, format_word, parse_word, prefix_sums
