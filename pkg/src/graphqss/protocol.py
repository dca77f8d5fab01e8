"""End-to-end threshold quantum secret sharing over a graph state.

One run: the dealer one-time-pads the secret qubit, embeds it into the
padded pair of encoded graph states, hands qubit i to a player, and deals
the two pad bits with a threshold-(k+c) classical scheme to all n+c players
(the c extras hold classical shares only).  An authorized coalition extracts
the padded qubit onto a fresh ancilla with its witness pair and undoes the
pad with the reconstructed classical bits.

All randomness flows through one seeded generator, drawn in a fixed order
(pad bits, then qubit holders when c > 0, then share coefficients), so a
transcript is reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from . import access, quantum, shamir
from .errors import InsufficientSharesError, LocalityError, ProtocolStateError
from .graphs import Graph, VertexSet, odd_neighborhood
from .quantum import StateVector

FIDELITY_ATOL = 1e-9
THRESHOLD_VALIDATION_LIMIT = 16


@dataclass(frozen=True)
class ProtocolConfig:
    graph: Graph
    access_set: VertexSet
    k: int
    c: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.access_set.universe != self.graph.n:
            raise ValueError("access set universe != graph order")
        if not self.access_set:
            raise ValueError("encoding set A must be non-empty")
        if not 1 <= self.k <= self.graph.n:
            raise ValueError("need 1 <= k <= n")
        if self.c < 0:
            raise ValueError("extra classical players c must be >= 0")
        if self.graph.n + self.c > 255:
            raise ValueError("player count capped at 255 by the classical scheme")

    @property
    def players(self) -> int:
        return self.graph.n + self.c


@dataclass(frozen=True)
class RecoveredSecret:
    alpha: complex
    beta: complex
    fidelity: float


@dataclass
class Transcript:
    """One protocol run; the log grows as reconstruction steps execute."""

    config: ProtocolConfig
    secret: tuple[complex, complex]
    pad: tuple[int, int]
    register: StateVector
    qubit_holders: tuple[int, ...]  # qubit i is held by player qubit_holders[i]
    shares: list[shamir.ClassicalShare]
    log: list[str] = field(default_factory=list)


@lru_cache(maxsize=256)
def _threshold_feasible(g: Graph, a: VertexSet, k: int) -> bool:
    return access.scan_size_k(g, a, k).all_accessing


def _deal_randomness(cfg: ProtocolConfig) -> tuple[int, int, tuple[int, ...], random.Random]:
    rng = random.Random(cfg.seed)
    b_x = rng.randrange(2)
    b_z = rng.randrange(2)
    if cfg.c > 0:
        holders = tuple(sorted(rng.sample(range(cfg.players), cfg.graph.n)))
    else:
        holders = tuple(range(cfg.graph.n))
    return b_x, b_z, holders, rng


def _padded_register(
    g: Graph, a: VertexSet, alpha: complex, beta: complex, b_x: int, b_z: int
) -> StateVector:
    g0 = quantum.encode_classical(g, a, b_x)
    g1 = quantum.encode_classical(g, a, 1 - b_x)
    sign = -1.0 if b_z else 1.0
    return StateVector(g.n, alpha * g0.amplitudes + beta * sign * g1.amplitudes)


def deal(cfg: ProtocolConfig, secret: tuple[complex, complex]) -> Transcript:
    """Encrypt, embed and distribute one secret qubit."""
    alpha, beta = secret
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > FIDELITY_ATOL:
        raise ValueError("secret amplitudes are not normalized")
    g, a = cfg.graph, cfg.access_set
    if g.n <= THRESHOLD_VALIDATION_LIMIT and not _threshold_feasible(g, a, cfg.k):
        raise ValueError(f"some size-{cfg.k} coalition cannot reconstruct on this graph")
    b_x, b_z, holders, rng = _deal_randomness(cfg)
    register = _padded_register(g, a, alpha, beta, b_x, b_z)
    shares = shamir.share(shamir.pack_pad(b_x, b_z), cfg.k + cfg.c, cfg.players, rng)
    t = Transcript(cfg, (alpha, beta), (b_x, b_z), register, holders, shares)
    t.log.append(f"deal: n={g.n} players={cfg.players} k={cfg.k} c={cfg.c}")
    return t


def reconstruct(t: Transcript, coalition: Iterable[int]) -> RecoveredSecret:
    """Run the three reconstruction steps for a coalition of player ids."""
    cfg = t.config
    g, a = cfg.graph, cfg.access_set
    players = sorted(set(coalition))
    if any(p not in range(cfg.players) for p in players):
        raise ValueError("coalition contains unknown player ids")
    need = cfg.k + cfg.c
    if len(players) < need:
        raise InsufficientSharesError(f"coalition of {len(players)} below threshold {need}")

    holder_set = set(players)
    b = VertexSet.from_iterable(g.n, (q for q in range(g.n) if t.qubit_holders[q] in holder_set))
    d, c_wit = access.reconstruction_witnesses(g, a, b)

    support_a = d | odd_neighborhood(g, d)
    if not support_a.is_subset_of(b):
        raise LocalityError("extraction would touch qubits outside the coalition")
    t.log.append(f"step a: extract with D={list(d.members())} on qubits {list(b.members())}")
    state = quantum.apply_isometry_UD(t.register, g, d)

    t.log.append(f"step b: correct with C={list(c_wit.members())}")
    state = quantum.apply_controlled_VC(state, g, a, c_wit, allowed=b)

    half = 1 << g.n
    base = quantum.graph_state(g).amplitudes
    amp0 = complex(np.vdot(base, state.amplitudes[:half]))
    amp1 = complex(np.vdot(base, state.amplitudes[half:]))
    residual = np.linalg.norm(state.amplitudes[:half] - amp0 * base) + np.linalg.norm(
        state.amplitudes[half:] - amp1 * base
    )
    if residual > quantum.ATOL_ZERO_TEST:
        raise ProtocolStateError("ancilla failed to disentangle from the graph register")

    selected = [t.shares[p] for p in players]
    b_x, b_z = shamir.unpack_pad(shamir.reconstruct(selected, need))
    t.log.append(f"step c: pad bits ({b_x}, {b_z}) from {need} shares")
    if b_x:
        amp0, amp1 = amp1, amp0
    if b_z:
        amp1 = -amp1

    alpha, beta = t.secret
    fidelity = abs(np.conj(alpha) * amp0 + np.conj(beta) * amp1) ** 2
    t.log.append(f"ancilla at player {players[0]}: fidelity={fidelity:.12f}")
    return RecoveredSecret(amp0, amp1, float(fidelity))


def privacy_probe(
    cfg: ProtocolConfig,
    secrets: tuple[tuple[complex, complex], tuple[complex, complex]],
) -> float:
    """Largest trace distance any sub-threshold coalition sees between secrets.

    For every coalition smaller than k + c, the coalition's quantum state is
    averaged over the four equally likely pad values; with a perfect pad the
    two averages coincide (the classical shares below threshold carry no
    information by themselves, which the share-level tests check).
    """
    g, a = cfg.graph, cfg.access_set
    _, _, holders, _ = _deal_randomness(cfg)
    registers = {
        si: [
            _padded_register(g, a, s[0], s[1], b_x, b_z)
            for b_x in (0, 1)
            for b_z in (0, 1)
        ]
        for si, s in enumerate(secrets)
    }

    qubit_masks = set()
    for size in range(cfg.k + cfg.c):
        for team in combinations(range(cfg.players), size):
            team_set = set(team)
            mask = 0
            for q in range(g.n):
                if holders[q] in team_set:
                    mask |= 1 << q
            qubit_masks.add(mask)

    worst = 0.0
    for mask in sorted(qubit_masks):
        b = VertexSet(g.n, mask)
        avg = []
        for si in (0, 1):
            acc = None
            for reg in registers[si]:
                rho = quantum.reduced_density(reg, b).matrix
                acc = rho if acc is None else acc + rho
            avg.append(quantum.DensityMatrix(acc / 4.0))
        worst = max(worst, quantum.trace_distance(avg[0], avg[1]))
    return worst


def serialize_transcript(t: Transcript, recovered: Optional[RecoveredSecret] = None) -> dict:
    """JSON-shaped view: pad, assignment, shares, step log, final fidelity."""
    doc = {
        "n": t.config.graph.n,
        "players": t.config.players,
        "k": t.config.k,
        "c": t.config.c,
        "seed": t.config.seed,
        "access_set": list(t.config.access_set.members()),
        "pad": list(t.pad),
        "qubit_holders": list(t.qubit_holders),
        "shares": [[s.index, s.value] for s in t.shares],
        "log": list(t.log),
    }
    if recovered is not None:
        doc["recovered"] = [
            recovered.alpha.real,
            recovered.alpha.imag,
            recovered.beta.real,
            recovered.beta.imag,
        ]
        doc["fidelity"] = recovered.fidelity
    return doc
