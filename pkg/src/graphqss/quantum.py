"""Dense statevector simulation of graph states and their coalition states.

Conventions used throughout (and by everything downstream):

* qubit i is bit i of the basis index, qubit 0 least significant;
* an ancilla added by the extraction isometry becomes qubit n (the new
  highest index, i.e. the top half of the amplitude array);
* reduced density matrices index their qubits by ascending vertex label.

Tolerances: 1e-12 for algebraic identities (norms, fixpoints), 1e-10 for
derived zero tests (overlap, trace distance, purity).  The register limit
defaults to 12 qubits and can be overridden with the QSS_MAX_QUBITS
environment variable.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import LocalityError, ProtocolStateError, ResourceLimitError
from .graphs import Graph, VertexSet, odd_neighborhood

ATOL_ALGEBRA = 1e-12
ATOL_ZERO_TEST = 1e-10
DEFAULT_QUBIT_LIMIT = 12


def qubit_limit() -> int:
    """Simulator size cap; QSS_MAX_QUBITS in the environment overrides it."""
    raw = os.environ.get("QSS_MAX_QUBITS")
    if raw is None:
        return DEFAULT_QUBIT_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"QSS_MAX_QUBITS={raw!r} is not an integer") from None
    if value < 1:
        raise ValueError("QSS_MAX_QUBITS must be >= 1")
    return value


@dataclass(frozen=True)
class StateVector:
    """Normalized pure state on n_qubits; amplitudes[x] belongs to basis x."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise ValueError("amplitude count != 2**n_qubits")
        norm = np.linalg.norm(self.amplitudes)
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"state not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")

    def inner(self, other: StateVector) -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, trace-one matrix over a subset of qubits."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        if np.abs(m - m.conj().T).max(initial=0.0) > ATOL_ALGEBRA:
            raise ValueError("density matrix not Hermitian")
        if abs(np.trace(m) - 1.0) > ATOL_ALGEBRA:
            raise ValueError("density matrix trace != 1")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.matrix)[0])


@dataclass(frozen=True)
class PauliOp:
    """phase * X on x_support * Z on z_support, phase in {+1, -1}."""

    x_support: VertexSet
    z_support: VertexSet
    phase: int = 1

    def __post_init__(self) -> None:
        if self.phase not in (1, -1):
            raise ValueError("phase must be +1 or -1")
        if self.x_support.universe != self.z_support.universe:
            raise ValueError("supports over different universes")


def _induced_edge_parity(g: Graph, d: VertexSet) -> int:
    total = 0
    m = d.mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        total += (g.adj[v] & d.mask).bit_count()
    return (total // 2) & 1


def stabilizer_for(g: Graph, d: VertexSet) -> PauliOp:
    """Product of the vertex stabilizers over d: signed X on d, Z on Odd(d).

    Collecting the X factors to the left crosses one Z per edge inside d, so
    the sign is the parity of edges in the induced subgraph (which is also
    the graph-state sign at basis string d).
    """
    odd = odd_neighborhood(g, d)
    sign = -1 if _induced_edge_parity(g, d) else 1
    return PauliOp(d, odd, sign)


def graph_state(g: Graph) -> StateVector:
    """Uniform-magnitude state whose sign at x counts induced edges mod 2."""
    n = g.n
    if n > qubit_limit():
        raise ResourceLimitError(f"{n} qubits exceeds limit {qubit_limit()}")
    idx = np.arange(1 << n, dtype=np.uint64)
    parity = np.zeros(1 << n, dtype=np.uint64)
    for i, j in g.edges():
        parity ^= (idx >> np.uint64(i)) & (idx >> np.uint64(j)) & np.uint64(1)
    amps = (1.0 - 2.0 * parity.astype(np.float64)) / math.sqrt(1 << n)
    return StateVector(n, amps.astype(np.complex128))


def apply_pauli(s: StateVector, p: PauliOp) -> StateVector:
    """Apply Z on the z-support, then X on the x-support, then the phase."""
    n = s.n_qubits
    if p.x_support.universe != n:
        raise ValueError("operator support does not match qubit count")
    idx = np.arange(1 << n, dtype=np.uint64)
    src = idx ^ np.uint64(p.x_support.mask)
    signs = 1.0 - 2.0 * (np.bitwise_count(src & np.uint64(p.z_support.mask)) & 1)
    return StateVector(n, p.phase * signs * s.amplitudes[src])


def encode_classical(g: Graph, a: VertexSet, s: int) -> StateVector:
    """Graph state carrying classical bit s: s = 1 flips phases on a."""
    if s not in (0, 1):
        raise ValueError("classical secret must be 0 or 1")
    if not a:
        raise ValueError("encoding set A must be non-empty")
    base = graph_state(g)
    if s == 0:
        return base
    return apply_pauli(base, PauliOp(VertexSet.empty(g.n), a))


def embed_secret(g: Graph, a: VertexSet, alpha: complex, beta: complex) -> StateVector:
    """Embed alpha|0> + beta|1> into the two orthogonal encoded graph states."""
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > 1e-9:
        raise ValueError("secret amplitudes are not normalized")
    g0 = encode_classical(g, a, 0)
    g1 = encode_classical(g, a, 1)
    return StateVector(g.n, alpha * g0.amplitudes + beta * g1.amplitudes)


def reduced_density(s: StateVector, b: VertexSet) -> DensityMatrix:
    """Partial trace onto the qubits in b, without forming the full projector.

    Bit l of the reduced index is the l-th smallest member of b.
    """
    n = s.n_qubits
    if b.universe != n:
        raise ValueError("vertex set universe != qubit count")
    keep = b.members()
    env = b.complement().members()
    # axis of qubit q in the reshaped tensor is n-1-q (C order, qubit 0 = LSB)
    perm = [n - 1 - q for q in reversed(env)] + [n - 1 - q for q in reversed(keep)]
    tensor = s.amplitudes.reshape((2,) * n).transpose(perm)
    mat = tensor.reshape(1 << len(env), 1 << len(keep))
    rho = mat.T @ mat.conj()
    return DensityMatrix(rho)


def overlap(rho0: DensityMatrix, rho1: DensityMatrix) -> float:
    return float(np.real(np.trace(rho0.matrix @ rho1.matrix)))


def trace_distance(rho0: DensityMatrix, rho1: DensityMatrix) -> float:
    eig = np.linalg.eigvalsh(rho0.matrix - rho1.matrix)
    return float(np.abs(eig).sum())


def distinguishability(g: Graph, a: VertexSet, b: VertexSet) -> tuple[float, float]:
    """(tr(rho0 rho1), trace norm of rho0 - rho1) for the coalition b.

    Overlap 0 means b distinguishes the two classical encodings perfectly;
    distance 0 means b sees identical states.  This is the quantum oracle the
    combinatorial classifier is checked against.
    """
    rho0 = reduced_density(encode_classical(g, a, 0), b)
    rho1 = reduced_density(encode_classical(g, a, 1), b)
    return overlap(rho0, rho1), trace_distance(rho0, rho1)


def measure_access_observable(s: StateVector, g: Graph, a: VertexSet, d: VertexSet) -> int:
    """Deterministic readout of the encoded classical bit via d's stabilizer.

    Outcome sigma corresponds to eigenvalue (-1)**sigma; requires d to have
    odd overlap with a, which makes the two encodings opposite eigenstates.
    """
    if len(d & a) % 2 != 1:
        raise ValueError("witness must have odd overlap with the encoding set")
    op = stabilizer_for(g, d)
    flipped = apply_pauli(s, op)
    if np.allclose(flipped.amplitudes, s.amplitudes, atol=ATOL_ZERO_TEST):
        return 0
    if np.allclose(flipped.amplitudes, -s.amplitudes, atol=ATOL_ZERO_TEST):
        return 1
    raise ProtocolStateError("state is not an eigenstate of the access observable")


def apply_isometry_UD(s: StateVector, g: Graph, d: VertexSet) -> StateVector:
    """Extraction isometry: ancilla records which stabilizer eigenspace holds.

    Splits the register into the +1/-1 eigenspaces of d's stabilizer and
    tags them with a fresh ancilla (appended as the highest-index qubit).
    The +1 branch of a protocol state is proportional to the bare graph
    state; anything else is rejected.
    """
    if s.n_qubits != g.n:
        raise ValueError("state size does not match graph order")
    op = stabilizer_for(g, d)
    flipped = apply_pauli(s, op)
    plus = (s.amplitudes + flipped.amplitudes) / 2.0
    minus = (s.amplitudes - flipped.amplitudes) / 2.0
    base = graph_state(g).amplitudes
    residual = plus - (base.conj() @ plus) * base
    if np.linalg.norm(residual) > ATOL_ZERO_TEST:
        raise ProtocolStateError("register is not a superposition of encoded graph states")
    return StateVector(g.n + 1, np.concatenate([plus, minus]))


def apply_controlled_VC(
    s: StateVector,
    g: Graph,
    a: VertexSet,
    c: VertexSet,
    allowed: VertexSet | None = None,
) -> StateVector:
    """Ancilla-controlled correction that folds the flipped branch back.

    Applies phase * X on c * Z on Odd(c) xor a to the half of the register
    where the ancilla (highest qubit) is 1.  With ``allowed`` given, raises
    LocalityError if the correction would touch qubits outside it.
    """
    n = g.n
    if s.n_qubits != n + 1:
        raise ValueError("expected a register with one ancilla qubit on top")
    odd = odd_neighborhood(g, c)
    z_support = odd ^ a
    support = c | z_support
    if allowed is not None and not support.is_subset_of(allowed):
        raise LocalityError(
            f"correction acts on {sorted(set(support.members()) - set(allowed.members()))} "
            "outside the coalition"
        )
    # c's stabilizer times Z on a: the Z supports merge by symmetric
    # difference and the sign stays the induced-edge parity of c
    sign = -1 if _induced_edge_parity(g, c) else 1
    op = PauliOp(c, z_support, sign)
    half = 1 << n
    upper = _apply_pauli_raw(s.amplitudes[half:], op, n)
    return StateVector(n + 1, np.concatenate([s.amplitudes[:half], upper]))


def _apply_pauli_raw(amps: np.ndarray, p: PauliOp, n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.uint64)
    src = idx ^ np.uint64(p.x_support.mask)
    signs = 1.0 - 2.0 * (np.bitwise_count(src & np.uint64(p.z_support.mask)) & 1)
    return p.phase * signs * amps[src]


def dump_state(s: StateVector) -> str:
    """Text dump: one 'index re im' line per basis state, index ascending."""
    lines = [
        f"{i} {amp.real:.17g} {amp.imag:.17g}" for i, amp in enumerate(s.amplitudes)
    ]
    return "\n".join(lines) + "\n"
