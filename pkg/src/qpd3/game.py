"""Three-player quantized Prisoner's Dilemma: states, moves, measurement, payoffs.

The scheme: an arbiter prepares the three-qubit state
``cos(gamma/2)|000> + i sin(gamma/2)|111>`` and hands one qubit to each of
Alice, Bob and Charlie.  Each player applies a local unitary parameterized by
``(theta, alpha, beta)``, returns the qubit, and the arbiter measures in a
basis whose entanglement is set by a second angle ``delta``.  Expected
payoffs follow from the trace rule: the probability of outcome ``lmn`` is
``<psi_lmn| rho_f |psi_lmn>`` and each player collects the corresponding
payoff-table entry.

``expected_payoffs`` is the package-wide oracle: every closed-form
expression, protocol table and equilibrium scan elsewhere in the package is
validated against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import ATOL, adjoint, outer, tensor3

#: Outcome labels in basis order: l = Alice bit, m = Bob bit, n = Charlie bit.
OUTCOMES = ("000", "001", "010", "011", "100", "101", "110", "111")

#: Players in payoff-triple order.
PLAYERS = ("A", "B", "C")

#: Tolerance for end-to-end payoff comparisons.
PAYOFF_ATOL = 1e-9

#: Probabilities above this floor are clamped to zero; anything lower is an error.
NEG_PROB_FLOOR = -1e-14

# Classic three-player dilemma payoffs: cooperate = bit 0, defect = bit 1.
# Triple order is (Alice, Bob, Charlie); lone defectors collect 5, the
# betrayed cooperator in a two-defector outcome collects 0.
_CLASSIC_ENTRIES = {
    "000": (3.0, 3.0, 3.0),
    "001": (2.0, 2.0, 5.0),
    "010": (2.0, 5.0, 2.0),
    "011": (0.0, 4.0, 4.0),
    "100": (5.0, 2.0, 2.0),
    "101": (4.0, 0.0, 4.0),
    "110": (4.0, 4.0, 0.0),
    "111": (1.0, 1.0, 1.0),
}


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


def _check_range(name: str, value: float, lo: float, hi: float) -> float:
    value = _check_finite(name, value)
    if not lo <= value <= hi:
        raise ValueError(f"{name} must lie in [{lo:.6g}, {hi:.6g}], got {value!r}")
    return value


def player_index(player) -> int:
    """Map 'A'/'B'/'C' (or 0/1/2) to a payoff-triple index."""
    if isinstance(player, int):
        if player in (0, 1, 2):
            return player
        raise ValueError(f"player index must be 0, 1 or 2, got {player}")
    try:
        return PLAYERS.index(str(player).upper())
    except ValueError:
        raise ValueError(f"unknown player {player!r}; expected one of {PLAYERS}") from None


@dataclass(frozen=True)
class StrategyParams:
    """One player's move: ``U = cos(theta/2) R(alpha) + sin(theta/2) P(beta)``.

    ``theta`` interpolates between the phase move ``R`` (theta=0, a classical
    "cooperate" up to phase) and the flip move ``P`` (theta=pi, "defect" up to
    phase).  Ranges are hard contracts: ``0 <= theta <= pi`` and
    ``-pi <= alpha, beta <= pi``.
    """

    theta: float
    alpha: float
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", _check_range("theta", self.theta, 0.0, math.pi))
        object.__setattr__(self, "alpha", _check_range("alpha", self.alpha, -math.pi, math.pi))
        object.__setattr__(self, "beta", _check_range("beta", self.beta, -math.pi, math.pi))

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.theta, self.alpha, self.beta)


@dataclass(frozen=True)
class PayoffTriple:
    """Expected payoffs in (Alice, Bob, Charlie) order."""

    alice: float
    bob: float
    charlie: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alice, self.bob, self.charlie)

    def __getitem__(self, k: int) -> float:
        return self.as_tuple()[k]


@dataclass(frozen=True)
class PayoffTable:
    """Payoff triples for the 8 classical outcomes, keyed by ``lmn`` labels."""

    entries: tuple[tuple[float, float, float], ...]

    def __post_init__(self):
        if len(self.entries) != len(OUTCOMES):
            raise ValueError(f"payoff table needs exactly {len(OUTCOMES)} outcome rows")
        clean = tuple(
            tuple(_check_finite(f"payoff[{OUTCOMES[i]}][{k}]", x) for k, x in enumerate(row))
            for i, row in enumerate(self.entries)
        )
        if any(len(row) != 3 for row in clean):
            raise ValueError("each outcome row must hold exactly 3 payoffs")
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_mapping(cls, mapping) -> "PayoffTable":
        keys = set(mapping)
        if keys != set(OUTCOMES):
            raise ValueError(
                f"payoff table keys must be exactly {sorted(OUTCOMES)}, got {sorted(keys)}"
            )
        return cls(tuple(tuple(float(x) for x in mapping[o]) for o in OUTCOMES))

    @classmethod
    def default(cls) -> "PayoffTable":
        return cls.from_mapping(_CLASSIC_ENTRIES)

    def triple(self, outcome: str) -> tuple[float, float, float]:
        return self.entries[OUTCOMES.index(outcome)]

    def column(self, player) -> np.ndarray:
        """All 8 payoffs of one player, in basis order."""
        k = player_index(player)
        return np.array([row[k] for row in self.entries], dtype=float)

    def as_mapping(self) -> dict[str, list[float]]:
        return {o: list(row) for o, row in zip(OUTCOMES, self.entries)}

    def bounds(self) -> tuple[float, float]:
        flat = [x for row in self.entries for x in row]
        return (min(flat), max(flat))


DEFAULT_PAYOFF_TABLE = PayoffTable.default()


@dataclass(frozen=True)
class GameConfig:
    """Entanglement angles plus the payoff table.

    ``gamma`` controls the shared initial state (0 = product, pi/2 = maximal)
    and ``delta`` controls the arbiter's measurement basis likewise.
    """

    gamma: float
    delta: float
    payoffs: PayoffTable = field(default_factory=PayoffTable.default)

    def __post_init__(self):
        object.__setattr__(self, "gamma", _check_range("gamma", self.gamma, 0.0, math.pi / 2))
        object.__setattr__(self, "delta", _check_range("delta", self.delta, 0.0, math.pi / 2))


@dataclass(frozen=True)
class OutcomeDistribution:
    """Born-rule probabilities over the 8 measurement outcomes."""

    probs: dict[str, float]

    def as_array(self) -> np.ndarray:
        return np.array([self.probs[o] for o in OUTCOMES], dtype=float)

    def __getitem__(self, outcome: str) -> float:
        return self.probs[outcome]


def initial_state(gamma: float) -> np.ndarray:
    """Shared initial state ``cos(gamma/2)|000> + i sin(gamma/2)|111>``."""
    gamma = _check_range("gamma", gamma, 0.0, math.pi / 2)
    psi = np.zeros(8, dtype=complex)
    psi[0] = math.cos(gamma / 2)
    psi[7] = 1j * math.sin(gamma / 2)
    return psi


def strategy_unitary(p: StrategyParams) -> np.ndarray:
    """Single-qubit move for one player.

    The two generators act as ``R|0> = e^{i alpha}|0>``,
    ``R|1> = e^{-i alpha}|1>`` and ``P|0> = e^{i(pi/2 - beta)}|1>``,
    ``P|1> = e^{i(pi/2 + beta)}|0>``; the move is
    ``cos(theta/2) R + sin(theta/2) P`` and is unitary for every parameter
    choice in range.
    """
    c = math.cos(p.theta / 2)
    s = math.sin(p.theta / 2)
    r = np.array(
        [[np.exp(1j * p.alpha), 0.0], [0.0, np.exp(-1j * p.alpha)]], dtype=complex
    )
    flip = np.array(
        [
            [0.0, np.exp(1j * (math.pi / 2 + p.beta))],
            [np.exp(1j * (math.pi / 2 - p.beta)), 0.0],
        ],
        dtype=complex,
    )
    return c * r + s * flip


# Outcomes whose basis vector carries +i sin(delta/2) on the partner label;
# the complementary family carries -i sin(delta/2).
_PLUS_FAMILY = frozenset({"000", "111", "001", "110"})


def measurement_basis(delta: float) -> list[np.ndarray]:
    """The arbiter's 8 orthonormal measurement vectors, indexed by outcome.

    Each vector pairs an outcome ``lmn`` with its bitwise complement:
    ``cos(delta/2)|lmn> +- i sin(delta/2)|l'm'n'>`` with the plus sign on the
    {000, 111, 001, 110} family and the minus sign on the rest.  At delta=0
    this is the computational basis.
    """
    delta = _check_range("delta", delta, 0.0, math.pi / 2)
    c = math.cos(delta / 2)
    s = math.sin(delta / 2)
    basis = []
    for b, outcome in enumerate(OUTCOMES):
        v = np.zeros(8, dtype=complex)
        sign = 1.0 if outcome in _PLUS_FAMILY else -1.0
        v[b] = c
        v[7 - b] += sign * 1j * s
        basis.append(v)
    return basis


def measurement_projectors(delta: float) -> list[np.ndarray]:
    """Rank-1 projectors onto the measurement basis, indexed by outcome."""
    return [outer(v) for v in measurement_basis(delta)]


def payoff_operator(delta: float, player, table: PayoffTable | None = None) -> np.ndarray:
    """Hermitian payoff operator ``sum_lmn payoff[lmn] |psi_lmn><psi_lmn|``.

    Its spectrum is exactly the player's 8 table payoffs for every ``delta``.
    """
    table = DEFAULT_PAYOFF_TABLE if table is None else table
    dollars = table.column(player)
    op = np.zeros((8, 8), dtype=complex)
    for value, proj in zip(dollars, measurement_projectors(delta)):
        op += value * proj
    return op


def final_state(
    config: GameConfig, pa: StrategyParams, pb: StrategyParams, pc: StrategyParams
) -> np.ndarray:
    """State after the three local moves, before measurement."""
    u = tensor3(strategy_unitary(pa), strategy_unitary(pb), strategy_unitary(pc))
    return u @ initial_state(config.gamma)


def final_density(
    config: GameConfig, pa: StrategyParams, pb: StrategyParams, pc: StrategyParams
) -> np.ndarray:
    """Density matrix ``U rho_in U^dagger`` for the played profile."""
    u = tensor3(strategy_unitary(pa), strategy_unitary(pb), strategy_unitary(pc))
    rho_in = outer(initial_state(config.gamma))
    return u @ rho_in @ adjoint(u)


def outcome_distribution(
    config: GameConfig, pa: StrategyParams, pb: StrategyParams, pc: StrategyParams
) -> OutcomeDistribution:
    """Born-rule outcome probabilities ``<psi_lmn| rho_f |psi_lmn>``.

    Raises:
        ValueError: if a probability falls below the roundoff floor or the
            distribution fails to sum to 1 within 1e-12 (both indicate a bug,
            not a legitimate input).
    """
    rho_f = final_density(config, pa, pb, pc)
    probs: dict[str, float] = {}
    for outcome, v in zip(OUTCOMES, measurement_basis(config.delta)):
        p = float(np.real(np.vdot(v, rho_f @ v)))
        if p < NEG_PROB_FLOOR:
            raise ValueError(f"probability of {outcome} is {p!r}, below the roundoff floor")
        probs[outcome] = max(p, 0.0)
    total = sum(probs.values())
    if abs(total - 1.0) > ATOL:
        raise ValueError(f"outcome probabilities sum to {total!r}, not 1")
    return OutcomeDistribution(probs)


def expected_payoffs(
    config: GameConfig, pa: StrategyParams, pb: StrategyParams, pc: StrategyParams
) -> PayoffTriple:
    """Trace-rule expected payoffs: the canonical oracle for this package."""
    dist = outcome_distribution(config, pa, pb, pc).as_array()
    values = [float(config.payoffs.column(k) @ dist) for k in range(3)]
    return PayoffTriple(*values)


def classical_payoff(
    table: PayoffTable, defect_probs: tuple[float, float, float]
) -> PayoffTriple:
    """Expected payoffs when each player independently defects with the given
    probability (the multilinear mixing of the classical game)."""
    qs = [_check_range(f"defect_probs[{i}]", q, 0.0, 1.0) for i, q in enumerate(defect_probs)]
    totals = np.zeros(3)
    for b, outcome in enumerate(OUTCOMES):
        weight = 1.0
        for pos, q in enumerate(qs):
            bit = (b >> (2 - pos)) & 1
            weight *= q if bit else (1.0 - q)
        totals += weight * np.array(table.entries[b])
    return PayoffTriple(*totals.tolist())
