"""Parity game solving by classic and symmetric strategy improvement."""

from .errors import RoundLimitError, SizeGuardError, SolverInternalError
from .game import (
    Owner,
    ParityGame,
    ParseError,
    Violation,
    make_colours_unique,
    parse_pgsolver,
    restrict_to_strategies,
    validate,
    write_pgsolver,
)
from .generators import (
    RandomGameParams,
    TrapParams,
    gen_friedmann_trap,
    gen_random,
    trap_initial_strategy,
)
from .solvers import (
    Converged,
    CycleDetected,
    NaiveOutcome,
    RuleKind,
    SolveReport,
    SwitchRule,
    SymmetricMode,
    TraceEntry,
    brute_force_solve,
    classic_si,
    naive_symmetric,
    slow_si,
    symmetric_si,
    symmetric_si_early,
)
from .strategy import PositionalStrategy, default_strategy, random_strategy
from .valuation import (
    PlayValuation,
    ProfitableSet,
    best_response_max,
    best_response_min,
    compare,
    evaluate_pair,
    play_valuation,
    profitable_updates_max,
    profitable_updates_min,
)

__version__ = "0.1.0"

__all__ = [
    "Converged",
    "CycleDetected",
    "NaiveOutcome",
    "Owner",
    "ParityGame",
    "ParseError",
    "PlayValuation",
    "PositionalStrategy",
    "ProfitableSet",
    "RandomGameParams",
    "RoundLimitError",
    "RuleKind",
    "SizeGuardError",
    "SolveReport",
    "SolverInternalError",
    "SwitchRule",
    "SymmetricMode",
    "TraceEntry",
    "TrapParams",
    "Violation",
    "best_response_max",
    "best_response_min",
    "brute_force_solve",
    "classic_si",
    "compare",
    "default_strategy",
    "evaluate_pair",
    "gen_friedmann_trap",
    "gen_random",
    "make_colours_unique",
    "naive_symmetric",
    "parse_pgsolver",
    "play_valuation",
    "profitable_updates_max",
    "profitable_updates_min",
    "random_strategy",
    "restrict_to_strategies",
    "slow_si",
    "symmetric_si",
    "symmetric_si_early",
    "trap_initial_strategy",
    "validate",
    "write_pgsolver",
]
