import math
import random

import numpy as np
import pytest

from graphqss import quantum
from graphqss.access import CVerdict, classify_c
from graphqss.errors import LocalityError, ProtocolStateError, ResourceLimitError
from graphqss.graphs import VertexSet, family
from graphqss.quantum import (
    DensityMatrix,
    PauliOp,
    StateVector,
    apply_controlled_VC,
    apply_isometry_UD,
    apply_pauli,
    distinguishability,
    dump_state,
    embed_secret,
    encode_classical,
    graph_state,
    measure_access_observable,
    reduced_density,
    stabilizer_for,
    trace_distance,
)
from helpers import all_graphs, induced_edge_count

C5 = family("cycle", 5)
A5 = VertexSet.full(5)


def vs(n, members):
    return VertexSet.from_iterable(n, members)


def random_state(n, seed):
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return StateVector(n, amps / np.linalg.norm(amps))


class TestGraphState:
    def test_single_vertex(self):
        s = graph_state(family("path", 1))
        assert np.allclose(s.amplitudes, [1 / math.sqrt(2)] * 2, atol=1e-12)

    def test_single_edge(self):
        s = graph_state(family("path", 2))
        assert np.allclose(s.amplitudes, np.array([1, 1, 1, -1]) / 2, atol=1e-12)

    def test_c5_signs_match_induced_edge_parity(self):
        s = graph_state(C5)
        scale = 1 / math.sqrt(32)
        for x in range(32):
            expect = scale * (-1) ** (induced_edge_count(C5, x) % 2)
            assert s.amplitudes[x] == pytest.approx(expect, abs=1e-12)
        assert s.amplitudes[0b00011] == pytest.approx(-scale, abs=1e-12)

    def test_qubit_limit(self):
        with pytest.raises(ResourceLimitError):
            graph_state(family("cycle", 13))

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("QSS_MAX_QUBITS", "13")
        s = graph_state(family("cycle", 13))
        assert s.amplitudes.shape == (1 << 13,)


class TestApplyPauli:
    def test_x_flips(self):
        zero = StateVector(1, np.array([1, 0], dtype=complex))
        one = apply_pauli(zero, PauliOp(vs(1, [0]), VertexSet.empty(1)))
        assert np.allclose(one.amplitudes, [0, 1])

    def test_fixpoint_property(self):
        rng = random.Random(17)
        for _ in range(1000):
            n = rng.randint(1, 10)
            g = family("random", n, p=0.5, seed=rng.randrange(10**6))
            d = VertexSet(n, rng.randrange(1 << n))
            s = graph_state(g)
            assert np.allclose(
                apply_pauli(s, stabilizer_for(g, d)).amplitudes,
                s.amplitudes,
                atol=1e-12,
            )

    def test_stabilizer_sign_is_induced_edge_parity(self):
        k3 = family("complete", 3)
        assert stabilizer_for(k3, vs(3, [0, 1])).phase == -1
        assert stabilizer_for(C5, vs(5, [0, 1, 2])).phase == 1
        assert stabilizer_for(C5, vs(5, [0, 1])).phase == -1

    def test_involution_sign(self):
        rng = random.Random(4)
        for _ in range(60):
            n = rng.randint(1, 6)
            p = PauliOp(VertexSet(n, rng.randrange(1 << n)), VertexSet(n, rng.randrange(1 << n)))
            s = random_state(n, rng.randrange(10**6))
            twice = apply_pauli(apply_pauli(s, p), p)
            sign = (-1) ** len(p.x_support & p.z_support)
            assert np.allclose(twice.amplitudes, sign * s.amplitudes, atol=1e-12)

    def test_z_on_encoding_set_orthogonalizes(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(1, 7)
            g = family("random", n, p=0.5, seed=rng.randrange(10**6))
            a = VertexSet(n, rng.randrange(1, 1 << n))
            g0, g1 = encode_classical(g, a, 0), encode_classical(g, a, 1)
            assert abs(g0.inner(g1)) < 1e-12


class TestEncodeEmbed:
    def test_zero_bit_is_plain_graph_state(self):
        assert np.array_equal(
            encode_classical(C5, A5, 0).amplitudes, graph_state(C5).amplitudes
        )

    def test_full_z_flips_odd_weight(self):
        g0 = graph_state(C5)
        g1 = encode_classical(C5, A5, 1)
        for x in range(32):
            sign = -1 if bin(x).count("1") % 2 else 1
            assert g1.amplitudes[x] == pytest.approx(sign * g0.amplitudes[x], abs=1e-12)

    def test_embed_endpoints(self):
        assert np.allclose(
            embed_secret(C5, A5, 1, 0).amplitudes, encode_classical(C5, A5, 0).amplitudes
        )
        assert np.allclose(
            embed_secret(C5, A5, 0, 1).amplitudes, encode_classical(C5, A5, 1).amplitudes
        )

    def test_embed_normalized(self):
        s = embed_secret(C5, A5, 0.6, 0.8)
        assert abs(np.linalg.norm(s.amplitudes) - 1) < 1e-12

    def test_rejects_empty_encoding_set(self):
        with pytest.raises(ValueError):
            encode_classical(C5, VertexSet.empty(5), 1)
        with pytest.raises(ValueError):
            embed_secret(C5, VertexSet.empty(5), 1, 0)

    def test_rejects_unnormalized_secret(self):
        with pytest.raises(ValueError):
            embed_secret(C5, A5, 0.9, 0.9)


class TestReducedDensity:
    def test_all_qubits_pure(self):
        s = embed_secret(C5, A5, 0.6, 0.8)
        rho = reduced_density(s, VertexSet.full(5))
        assert rho.purity() == pytest.approx(1.0, abs=1e-10)
        assert np.allclose(rho.matrix, np.outer(s.amplitudes, s.amplitudes.conj()), atol=1e-12)

    def test_empty_subset(self):
        rho = reduced_density(graph_state(C5), VertexSet.empty(5))
        assert rho.matrix.shape == (1, 1)
        assert rho.matrix[0, 0] == pytest.approx(1.0, abs=1e-12)

    def test_blind_pair_sees_identical_states(self):
        b = vs(5, [0, 1])
        rho0 = reduced_density(encode_classical(C5, A5, 0), b)
        rho1 = reduced_density(encode_classical(C5, A5, 1), b)
        assert trace_distance(rho0, rho1) < 1e-10

    def test_validation(self):
        with pytest.raises(ValueError):
            DensityMatrix(np.array([[0.5, 0.5j], [0.5j, 0.5]]))  # not Hermitian
        with pytest.raises(ValueError):
            DensityMatrix(np.eye(2, dtype=complex))  # trace 2

    def test_positive_semidefinite(self):
        rho = reduced_density(graph_state(C5), vs(5, [0, 2, 3]))
        assert rho.min_eigenvalue() >= -1e-10


class TestDistinguishability:
    def test_c5_examples(self):
        ov, dist = distinguishability(C5, A5, vs(5, [0, 1, 2]))
        assert ov < 1e-10 and dist > 1.0
        ov, dist = distinguishability(C5, A5, vs(5, [0, 1]))
        assert dist < 1e-10 and ov > 0.1

    def test_k3_pair_is_classically_blind_but_quantum_partial(self):
        # the pair cannot tell the two basis encodings apart (it is blind for
        # a classical bit), yet it perfectly separates the (1, i) / (1, -i)
        # superposition secrets: exactly the partial-information regime
        k3 = family("complete", 3)
        a3 = VertexSet.full(3)
        b = vs(3, [0, 1])
        ov, dist = distinguishability(k3, a3, b)
        assert ov > 0.1 and dist < 1e-10
        from graphqss.access import q_classify

        assert q_classify(k3, a3, b).value == "Partial"
        s2 = 2**-0.5
        r_plus_i = reduced_density(embed_secret(k3, a3, s2, 1j * s2), b)
        r_minus_i = reduced_density(embed_secret(k3, a3, s2, -1j * s2), b)
        assert trace_distance(r_plus_i, r_minus_i) > 1.0

    def test_oracle_partition(self):
        # for any coalition exactly one of overlap/distance vanishes
        rng = random.Random(31)
        for _ in range(40):
            n = rng.randint(1, 6)
            g = family("random", n, p=0.5, seed=rng.randrange(10**6))
            a = VertexSet(n, rng.randrange(1, 1 << n))
            b = VertexSet(n, rng.randrange(1 << n))
            ov, dist = distinguishability(g, a, b)
            assert (ov < 1e-10) != (dist < 1e-10)

    def test_matches_classifier_exhaustively_n3(self):
        for g in all_graphs(3):
            for amask in range(1, 8):
                a = VertexSet(3, amask)
                for bmask in range(8):
                    b = VertexSet(3, bmask)
                    verdict, _ = classify_c(g, a, b)
                    ov, dist = distinguishability(g, a, b)
                    assert (ov < 1e-10) == (verdict is CVerdict.ACCESSING)
                    assert (dist < 1e-10) == (verdict is CVerdict.BLIND)

    def test_matches_classifier_random(self):
        rng = random.Random(23)
        for _ in range(60):
            n = rng.randint(2, 6)
            g = family("random", n, p=0.5, seed=rng.randrange(10**6))
            a = VertexSet(n, rng.randrange(1, 1 << n))
            b = VertexSet(n, rng.randrange(1 << n))
            verdict, _ = classify_c(g, a, b)
            ov, dist = distinguishability(g, a, b)
            assert (ov < 1e-10) == (verdict is CVerdict.ACCESSING)
            assert (dist < 1e-10) == (verdict is CVerdict.BLIND)


class TestMeasurement:
    def test_reads_both_encodings(self):
        d = vs(5, [1])
        assert measure_access_observable(encode_classical(C5, A5, 0), C5, A5, d) == 0
        assert measure_access_observable(encode_classical(C5, A5, 1), C5, A5, d) == 1

    def test_rejects_even_overlap(self):
        with pytest.raises(ValueError):
            measure_access_observable(graph_state(C5), C5, A5, vs(5, [1, 2]))

    def test_rejects_non_eigenstate(self):
        with pytest.raises(ProtocolStateError):
            measure_access_observable(embed_secret(C5, A5, 0.6, 0.8), C5, A5, vs(5, [1]))


class TestIsometryAndCorrection:
    def test_tags_plain_encoding(self):
        d = vs(5, [1])
        out = apply_isometry_UD(encode_classical(C5, A5, 0), C5, d)
        assert np.allclose(out.amplitudes[:32], graph_state(C5).amplitudes, atol=1e-12)
        assert np.allclose(out.amplitudes[32:], 0, atol=1e-12)
        out = apply_isometry_UD(encode_classical(C5, A5, 1), C5, d)
        assert np.allclose(out.amplitudes[:32], 0, atol=1e-12)

    def test_superposition_keeps_norm(self):
        out = apply_isometry_UD(embed_secret(C5, A5, 0.6, 0.8), C5, vs(5, [1]))
        assert abs(np.linalg.norm(out.amplitudes) - 1) < 1e-12
        anc = reduced_density(out, vs(6, [5]))
        assert anc.matrix[0, 0] == pytest.approx(0.36, abs=1e-10)
        assert anc.matrix[1, 1] == pytest.approx(0.64, abs=1e-10)
        assert abs(anc.matrix[0, 1]) < 1e-10  # branches entangle with the register

    def test_rejects_garbage_register(self):
        with pytest.raises(ProtocolStateError):
            apply_isometry_UD(random_state(5, 0), C5, vs(5, [1]))

    def test_correction_disentangles(self):
        b = vs(5, [0, 1, 2])
        d, c = vs(5, [1]), vs(5, [0, 2])
        state = apply_isometry_UD(embed_secret(C5, A5, 0.6, 0.8), C5, d)
        state = apply_controlled_VC(state, C5, A5, c, allowed=b)
        anc = reduced_density(state, vs(6, [5]))
        assert anc.purity() == pytest.approx(1.0, abs=1e-10)
        base = graph_state(C5).amplitudes
        assert abs(np.vdot(base, state.amplitudes[:32])) == pytest.approx(0.6, abs=1e-10)
        assert abs(np.vdot(base, state.amplitudes[32:])) == pytest.approx(0.8, abs=1e-10)

    def test_control_off_branch_untouched(self):
        state = apply_isometry_UD(encode_classical(C5, A5, 0), C5, vs(5, [1]))
        lower = state.amplitudes[:32].copy()
        out = apply_controlled_VC(state, C5, A5, vs(5, [0, 2]))
        assert np.array_equal(out.amplitudes[:32], lower)

    def test_locality_enforced(self):
        state = apply_isometry_UD(embed_secret(C5, A5, 0.6, 0.8), C5, vs(5, [1]))
        with pytest.raises(LocalityError):
            apply_controlled_VC(state, C5, A5, vs(5, [0, 2]), allowed=vs(5, [0, 1]))


class TestDump:
    def test_format(self):
        lines = dump_state(graph_state(family("path", 1))).splitlines()
        assert len(lines) == 2
        idx, re, im = lines[0].split()
        assert idx == "0" and float(re) == pytest.approx(1 / math.sqrt(2)) and float(im) == 0.0
