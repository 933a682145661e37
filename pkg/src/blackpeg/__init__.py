"""Black-peg (single-count) Mastermind: a query-efficient codebreaker, a
satisfiability checker for score transcripts, and the 3DM hardness reduction."""

from blackpeg.core import black_count, code_vector, color_histogram, white_count
from blackpeg.errors import (
    BudgetExhausted,
    DimensionError,
    InconsistentOracle,
    MalformedInstance,
    NotAWitness,
    TooLarge,
)
from blackpeg.reduction import (
    Matching,
    ThreeDMInstance,
    extract_matching,
    reduce,
    solve_3dm_bruteforce,
    verify_matching,
)
from blackpeg.satisfiability import (
    SatInstance,
    is_consistent,
    solve_backtracking,
    solve_exhaustive,
)
from blackpeg.solver import (
    HonestOracle,
    InteractiveOracle,
    RecordingOracle,
    SolveTranscript,
    guess_bound,
    naive_solve,
    reference_bounds,
    solve,
)

__version__ = "0.1.0"
