// Noise experiments: one analogue channel (Gaussian amplitude jitter) and one
// digital channel (independent per-qubit bit flips), a single-trial harness
// that injects a channel into the interferometric pipeline, and a sweep
// driver that maps hit rates over a magnitude grid.
//
// Both channels are constructions for the experiment, not physics imported
// from elsewhere: the point is to compare how the pipeline degrades under
// continuous amplitude drift versus discrete state flips at matched
// disturbance strength.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iqc/interference.hpp"
#include "iqc/oracle.hpp"
#include "iqc/random.hpp"
#include "iqc/statevector.hpp"

namespace iqc {

enum class NoiseModel { Amplitude, BitFlip };

inline const char* to_string(NoiseModel m) {
    return m == NoiseModel::Amplitude ? "amplitude" : "bitflip";
}

struct NoiseSpec {
    NoiseModel model = NoiseModel::Amplitude;
    double magnitude = 0.0;  // Amplitude: jitter scale epsilon in [0,1); BitFlip: per-qubit p in [0,1]
};

// Where the channel strikes in the pipeline:
//  * AfterSpread — on the data register right after the uniform spread,
//    before the interferometer. The uniform state is permutation-invariant,
//    so bit flips are literally absorbed there and amplitude jitter cannot
//    leak non-solutions past the exact cancellation; useful as a control.
//  * AfterOracle — on the joint register between the one-arm marking and the
//    recombining Hadamard, i.e. while the algorithm's information lives in
//    the sign pattern. This is where the analogue/digital contrast is
//    visible, and the default for experiments.
enum class NoisePoint { AfterSpread, AfterOracle };

inline const char* to_string(NoisePoint p) {
    return p == NoisePoint::AfterSpread ? "after-spread" : "after-oracle";
}

struct TrialRecord {
    NoiseSpec noise;
    bool post_selected = false;
    bool hit = false;  // post-selected AND the measured state verified
    std::uint64_t seed = 0;
};

struct SweepPoint {
    NoiseSpec noise;
    std::uint64_t trials = 0;
    double post_rate = 0.0;  // fraction of trials that post-selected
    double hit_rate = 0.0;   // fraction of post-selected trials that verified; 0 if none did
};

struct SweepResult {
    std::vector<SweepPoint> points;
};

// Gaussian jitter on every amplitude component, then renormalization. The
// per-component sigma is epsilon / sqrt(2^n), so the expected l2 disturbance
// scales with epsilon alone, independent of register width. epsilon = 0 is a
// bit-exact identity and consumes no randomness.
inline Statevector amplitude_noise(const Statevector& psi, double epsilon, Rng& rng) {
    if (epsilon < 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("amplitude_noise: magnitude must be in [0, 1)");
    if (epsilon == 0.0) return psi;
    const double sigma = epsilon / std::sqrt(static_cast<double>(psi.dim()));
    std::normal_distribution<double> jitter(0.0, sigma);
    std::vector<Complex> a = psi.amplitudes();
    for (Complex& v : a) {
        const double re = jitter(rng);
        const double im = jitter(rng);
        v += Complex{re, im};
    }
    double norm_sq = 0.0;
    for (const Complex& v : a) norm_sq += std::norm(v);
    if (norm_sq <= 0.0) throw state_error("amplitude_noise: perturbed state has zero norm");
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (Complex& v : a) v *= scale;
    return Statevector(psi.n_qubits(), std::move(a));
}

// Independent X flip on each qubit with probability p: one uniform draw per
// qubit (in qubit order), then a single basis permutation by the realized
// flip pattern. p = 0 is a bit-exact identity and consumes no randomness.
inline Statevector bitflip_noise(const Statevector& psi, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("bitflip_noise: magnitude must be in [0, 1]");
    if (p == 0.0) return psi;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int n = psi.n_qubits();
    std::uint64_t mask = 0;
    for (int q = 0; q < n; ++q)
        if (u(rng) < p) mask |= std::uint64_t{1} << (n - 1 - q);
    if (mask == 0) return psi;
    std::vector<Complex> a(psi.dim());
    for (std::uint64_t i = 0; i < a.size(); ++i) a[i] = psi[i ^ mask];
    return Statevector(n, std::move(a));
}

inline Statevector apply_noise(const Statevector& psi, const NoiseSpec& noise, Rng& rng) {
    return noise.model == NoiseModel::Amplitude ? amplitude_noise(psi, noise.magnitude, rng)
                                                : bitflip_noise(psi, noise.magnitude, rng);
}

// One noisy interferometric run. At magnitude 0 this reproduces
// interfere_and_measure(o, make_rng(seed)) bit-for-bit: the stages below are
// the same ones in the same order, and a zero-magnitude channel consumes no
// randomness.
inline TrialRecord run_noise_trial(const Oracle& o, const NoiseSpec& noise, std::uint64_t seed,
                                   NoisePoint point = NoisePoint::AfterOracle,
                                   int max_qubits = kDefaultMaxQubits) {
    Rng rng = make_rng(seed);
    Statevector spread = hadamard_all(new_zero_state(o.n_vars(), max_qubits));
    if (point == NoisePoint::AfterSpread) spread = apply_noise(spread, noise, rng);
    JointState j = mark_one_arm(hadamard_ancilla(attach_ancilla(spread)), o);
    if (point == NoisePoint::AfterOracle)
        j.state = apply_noise(j.state, noise, rng);
    j = hadamard_ancilla(std::move(j));
    const InterferenceOutcome out = measure_interference(j, rng);

    TrialRecord rec;
    rec.noise = noise;
    rec.seed = seed;
    rec.post_selected = out.post_selected;
    rec.hit = out.post_selected && o.predicate(out.measured->index());
    return rec;
}

// Monte-Carlo sweep over a magnitude grid. Trial i always runs on
// derive_seed(seed, i), whichever grid point it belongs to, so points are
// compared under common random numbers and the whole sweep is reproducible
// from the root seed.
inline SweepResult sweep(const Oracle& o, const std::vector<NoiseSpec>& grid, std::uint64_t trials,
                         std::uint64_t seed, NoisePoint point = NoisePoint::AfterOracle,
                         int max_qubits = kDefaultMaxQubits) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty magnitude grid");
    if (trials < 1) throw std::invalid_argument("sweep: trial count must be positive");
    SweepResult result;
    result.points.reserve(grid.size());
    for (const NoiseSpec& noise : grid) {
        std::uint64_t post_count = 0;
        std::uint64_t hit_count = 0;
        for (std::uint64_t i = 0; i < trials; ++i) {
            const TrialRecord rec = run_noise_trial(o, noise, derive_seed(seed, i), point, max_qubits);
            post_count += rec.post_selected ? 1 : 0;
            hit_count += rec.hit ? 1 : 0;
        }
        SweepPoint pt;
        pt.noise = noise;
        pt.trials = trials;
        pt.post_rate = static_cast<double>(post_count) / static_cast<double>(trials);
        pt.hit_rate = post_count == 0
                          ? 0.0
                          : static_cast<double>(hit_count) / static_cast<double>(post_count);
        result.points.push_back(pt);
    }
    return result;
}

}  // namespace iqc
