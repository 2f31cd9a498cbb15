"""Exact engine for a three-player quantum Prisoner's Dilemma.

Players apply local unitaries to a shared (possibly entangled) three-qubit
state and an arbiter pays them out via a projective measurement in a
(possibly entangled) basis.  The package computes trace-rule expected
payoffs exactly, audits the published closed-form expressions against that
oracle, certifies grid-Nash equilibria in the four entanglement regimes, and
simulates the payoff-mediated two-bit signaling protocol.
"""

__version__ = "0.1.0"

from .linalg import adjoint, mat_apply, mat_mul, outer, tensor3, trace
from .game import (
    DEFAULT_PAYOFF_TABLE,
    OUTCOMES,
    PLAYERS,
    GameConfig,
    OutcomeDistribution,
    PayoffTable,
    PayoffTriple,
    StrategyParams,
    classical_payoff,
    expected_payoffs,
    final_density,
    final_state,
    initial_state,
    measurement_basis,
    measurement_projectors,
    outcome_distribution,
    payoff_operator,
    strategy_unitary,
)
from .closedform import (
    ClosedFormTerms,
    ComparisonReport,
    closed_form_payoffs,
    compare_to_oracle,
    max_entanglement_payoffs,
    sample_any,
    sample_classical_limit,
    sample_pure_moves,
)
from .equilibrium import (
    EquilibriumReport,
    FourCaseScan,
    GridSpec,
    Profile,
    best_response,
    four_case_scan,
    verify_nash,
)
from .comms import (
    CODEWORDS,
    COLUMNS,
    Codeword,
    DecodeResult,
    InfoRelationReport,
    ObservationModel,
    ProtocolTable,
    common_move,
    decode,
    fixture_regime_tables,
    fixture_table,
    info_relation_report,
    information_bits,
    oracle_regime_tables,
    protocol_table,
)

__all__ = [
    "__version__",
    # linalg
    "tensor3", "adjoint", "outer", "mat_apply", "mat_mul", "trace",
    # game
    "OUTCOMES", "PLAYERS", "StrategyParams", "PayoffTriple", "PayoffTable",
    "DEFAULT_PAYOFF_TABLE", "GameConfig", "OutcomeDistribution",
    "initial_state", "strategy_unitary", "measurement_basis",
    "measurement_projectors", "payoff_operator", "final_state",
    "final_density", "outcome_distribution", "expected_payoffs",
    "classical_payoff",
    # closedform
    "ClosedFormTerms", "ComparisonReport", "closed_form_payoffs",
    "max_entanglement_payoffs", "compare_to_oracle", "sample_any",
    "sample_classical_limit", "sample_pure_moves",
    # equilibrium
    "GridSpec", "Profile", "EquilibriumReport", "FourCaseScan",
    "best_response", "verify_nash", "four_case_scan",
    # comms
    "Codeword", "CODEWORDS", "COLUMNS", "ObservationModel", "ProtocolTable",
    "DecodeResult", "InfoRelationReport", "common_move", "protocol_table",
    "fixture_table", "decode", "information_bits", "info_relation_report",
    "oracle_regime_tables", "fixture_regime_tables",
]
