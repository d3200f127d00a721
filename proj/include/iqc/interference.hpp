// Two-arm interference: cancel negatively-marked states against an unmarked
// copy of the same superposition so only positively-marked states survive.
//
// The idea ships in two equivalent forms:
//
//   * arm_sum        — the literal reading: average the input with its
//                      sign-marked copy and renormalize. Not unitary, but a
//                      direct transcription of "overlap the two arms".
//   * ancilla_circuit — the physical reading: one extra qubit, Hadamard /
//                      controlled sign-marking / Hadamard. Fully unitary; the
//                      ancilla=0 branch carries exactly the arm sum, and the
//                      second Hadamard is the recombination step (it plays the
//                      role of the overlap, not of an omitted final splitter).
//
// Their agreement on the post-selected branch is enforced by tests.
//
// Layout: the ancilla is the RIGHTMOST qubit (position n_vars), i.e. the
// least-significant bit of the joint amplitude index. Data bitstrings are
// therefore unchanged by the embedding: joint index = (x << 1) | ancilla.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "iqc/oracle.hpp"
#include "iqc/statevector.hpp"

namespace iqc {

// Branch weights at or below this are numerical dust, treated as exactly
// zero: no state is returned and the reported probability is 0.
inline constexpr double kBranchCutoff = 1e-24;

// An (n_vars + 1)-qubit state whose last qubit is the interferometer arm
// marker ("which arm"), with the data register in the top n_vars qubits.
struct JointState {
    Statevector state;
    int data_qubits;
};

// What one end-to-end interferometric run produced.
struct InterferenceOutcome {
    bool post_selected = false;         // ancilla came out 0
    double success_probability = 0.0;   // analytic ancilla=0 weight, in [0,1]
    std::optional<BasisState> measured; // data register result, iff post_selected
};

// A conditioned data-register state plus the probability of obtaining it.
struct Conditioned {
    std::optional<Statevector> state;
    double probability = 0.0;
};

// Literal two-arm overlap: chi = (psi + marked psi) / 2. Negatively-marked
// amplitudes cancel exactly (a + (-a) = 0 in IEEE arithmetic, no epsilon),
// positively-marked ones pass through untouched ((a + a) / 2 = a likewise).
inline Conditioned arm_sum(const Statevector& psi, const Oracle& o) {
    const Statevector marked = apply_phase_oracle(psi, o);
    std::vector<Complex> chi(psi.dim());
    double weight = 0.0;
    for (std::uint64_t x = 0; x < chi.size(); ++x) {
        chi[x] = (psi[x] + marked[x]) * 0.5;
        weight += std::norm(chi[x]);
    }
    if (weight <= kBranchCutoff) return {std::nullopt, 0.0};
    const double scale = 1.0 / std::sqrt(weight);
    for (Complex& a : chi) a *= scale;
    return {Statevector(psi.n_qubits(), std::move(chi)), std::min(weight, 1.0)};
}

// psi ⊗ |0>: widen the register by an ancilla in its ground state.
inline JointState attach_ancilla(const Statevector& psi) {
    std::vector<Complex> joint(psi.dim() * 2, Complex{0.0, 0.0});
    for (std::uint64_t x = 0; x < psi.dim(); ++x) joint[x << 1] = psi[x];
    return {Statevector(psi.n_qubits() + 1, std::move(joint)), psi.n_qubits()};
}

// Hadamard on the ancilla only. Used twice per run: first to split the
// superposition into two arms, then to bring the arms back into overlap.
inline JointState hadamard_ancilla(JointState j) {
    std::vector<Complex> a = j.state.amplitudes();
    constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (std::uint64_t i = 0; i < a.size(); i += 2) {
        const Complex lo = a[i];
        const Complex hi = a[i + 1];
        a[i] = (lo + hi) * inv_sqrt2;
        a[i + 1] = (lo - hi) * inv_sqrt2;
    }
    return {Statevector(j.state.n_qubits(), std::move(a)), j.data_qubits};
}

// Sign-marking applied to one arm alone: flip the sign of negatively-marked
// data states, but only where the ancilla is 1.
inline JointState mark_one_arm(JointState j, const Oracle& o) {
    if (j.data_qubits != o.n_vars())
        throw std::invalid_argument("mark_one_arm: data width does not match oracle");
    std::vector<Complex> a = j.state.amplitudes();
    for (std::uint64_t x = 0; x < a.size() / 2; ++x)
        if (o.marked_negative(x)) a[(x << 1) | 1] = -a[(x << 1) | 1];
    return {Statevector(j.state.n_qubits(), std::move(a)), j.data_qubits};
}

// The unitary interferometer: split, mark one arm, recombine. After the
// final Hadamard the ancilla=0 amplitudes hold (psi + marked)/2 and the
// ancilla=1 amplitudes hold (psi - marked)/2.
inline JointState ancilla_circuit(const Statevector& psi, const Oracle& o) {
    if (psi.n_qubits() != o.n_vars())
        throw std::invalid_argument("ancilla_circuit: state width does not match oracle");
    return hadamard_ancilla(mark_one_arm(hadamard_ancilla(attach_ancilla(psi)), o));
}

// Condition on ancilla = 0: the branch where the arms reinforced. Returns the
// renormalized data-register state and the branch weight.
inline Conditioned post_select(const JointState& j) {
    const std::uint64_t data_dim = j.state.dim() / 2;
    double weight = 0.0;
    for (std::uint64_t x = 0; x < data_dim; ++x) weight += std::norm(j.state[x << 1]);
    if (weight <= kBranchCutoff) return {std::nullopt, 0.0};
    const double scale = 1.0 / std::sqrt(weight);
    std::vector<Complex> data(data_dim);
    for (std::uint64_t x = 0; x < data_dim; ++x) data[x] = j.state[x << 1] * scale;
    return {Statevector(j.data_qubits, std::move(data)), std::min(weight, 1.0)};
}

// Born-rule measurement of a prepared joint state: first the ancilla (one
// uniform draw against the analytic branch weight), then — only on success —
// the data register. Exposed separately from interfere_and_measure so noisy
// pipelines can reuse the identical measurement path.
inline InterferenceOutcome measure_interference(const JointState& j, Rng& rng) {
    const Conditioned branch = post_select(j);
    InterferenceOutcome out;
    out.success_probability = branch.probability;
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (branch.state && u < branch.probability) {
        out.post_selected = true;
        out.measured = measure_all(*branch.state, rng);
    }
    return out;
}

// One complete run against an oracle: ground state, Hadamard spread,
// interferometer, measurement. The cap bounds the data register; the joint
// state is one qubit wider.
inline InterferenceOutcome interfere_and_measure(const Oracle& o, Rng& rng,
                                                 int max_qubits = kDefaultMaxQubits) {
    const Statevector spread = hadamard_all(new_zero_state(o.n_vars(), max_qubits));
    return measure_interference(ancilla_circuit(spread, o), rng);
}

}  // namespace iqc
