// Dense statevector core: n-qubit amplitude vectors, the handful of gates the
// search pipeline needs, and Born-rule measurement.
//
// Bit-ordering convention used everywhere in this library: bitstrings read
// left to right, qubit 0 is the LEFTMOST character, so "001" over three
// qubits is amplitude index 1 and qubit q maps to bit (n - 1 - q) of the
// index. Keeping string order and index order aligned makes the printed
// output trivially checkable by eye.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iqc/errors.hpp"
#include "iqc/random.hpp"

namespace iqc {

using Complex = std::complex<double>;

// Default ceiling on register width; 2^24 amplitudes is ~256 MB, anything
// bigger is almost certainly a typo rather than an intentional run.
inline constexpr int kDefaultMaxQubits = 24;

// Tolerance for identities that hold to machine precision (single gates,
// closed-form amplitudes).
inline constexpr double kExactTolerance = 1e-12;

// Looser guard for quantities accumulated across a whole pipeline.
inline constexpr double kNormTolerance = 1e-9;

// One computational basis state of a fixed-width register. Cheap value type;
// ordered so it can key maps and sets.
class BasisState {
public:
    BasisState() = default;

    BasisState(int n_bits, std::uint64_t index) : n_bits_(n_bits), index_(index) {
        if (n_bits < 1 || n_bits > 63)
            throw std::invalid_argument("BasisState: bit count must be in [1, 63]");
        if (index >> n_bits)
            throw std::invalid_argument("BasisState: index does not fit in " +
                                        std::to_string(n_bits) + " bits");
    }

    static BasisState from_string(std::string_view bits) {
        if (bits.empty() || bits.size() > 63)
            throw std::invalid_argument("BasisState: bitstring length must be in [1, 63]");
        std::uint64_t index = 0;
        for (char c : bits) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("BasisState: bitstring may contain only '0' and '1'");
            index = (index << 1) | static_cast<std::uint64_t>(c - '0');
        }
        return BasisState(static_cast<int>(bits.size()), index);
    }

    int size() const { return n_bits_; }
    std::uint64_t index() const { return index_; }

    // Value of qubit q, with qubit 0 the leftmost character.
    bool bit(int qubit) const {
        if (qubit < 0 || qubit >= n_bits_)
            throw std::out_of_range("BasisState: qubit index out of range");
        return (index_ >> (n_bits_ - 1 - qubit)) & 1;
    }

    std::string str() const {
        std::string s(static_cast<std::size_t>(n_bits_), '0');
        for (int q = 0; q < n_bits_; ++q)
            if ((index_ >> (n_bits_ - 1 - q)) & 1) s[q] = '1';
        return s;
    }

    friend auto operator<=>(const BasisState&, const BasisState&) = default;

private:
    int n_bits_ = 0;
    std::uint64_t index_ = 0;
};

// Dense complex state of an n-qubit register. Immutable value; every gate is
// a free function returning a fresh state. Callers are expected to keep
// states normalized — measurement enforces it, construction does not (so the
// type stays cheap in inner loops).
class Statevector {
public:
    Statevector(int n_qubits, std::vector<Complex> amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
        if (n_qubits < 1 || n_qubits > 62)
            throw std::invalid_argument("Statevector: qubit count must be in [1, 62]");
        if (amplitudes_.size() != (std::uint64_t{1} << n_qubits))
            throw std::invalid_argument("Statevector: amplitude count must be 2^n_qubits");
    }

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }

    const Complex& operator[](std::uint64_t i) const { return amplitudes_[i]; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

    double norm_squared() const {
        double total = 0.0;
        for (const Complex& a : amplitudes_) total += std::norm(a);
        return total;
    }

    double norm() const { return std::sqrt(norm_squared()); }

private:
    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

// Measurement tallies from repeated shots on one state.
struct ShotHistogram {
    std::map<BasisState, std::uint64_t> counts;
    std::uint64_t total_shots = 0;
};

// |00...0> on n qubits. Refuses registers wider than max_qubits so a typo in
// a width can't silently try to allocate gigabytes.
inline Statevector new_zero_state(int n_qubits, int max_qubits = kDefaultMaxQubits) {
    if (n_qubits < 1)
        throw std::invalid_argument("new_zero_state: need at least one qubit");
    if (n_qubits > max_qubits)
        throw resource_error("new_zero_state: " + std::to_string(n_qubits) +
                             " qubits exceeds the " + std::to_string(max_qubits) + "-qubit cap");
    std::vector<Complex> amps(std::uint64_t{1} << n_qubits, Complex{0.0, 0.0});
    amps[0] = Complex{1.0, 0.0};
    return Statevector(n_qubits, std::move(amps));
}

// Hadamard on every qubit: the uniform spread when applied to |00...0>, and
// its own inverse. Standard in-place butterfly over each bit position.
inline Statevector hadamard_all(const Statevector& psi) {
    std::vector<Complex> a = psi.amplitudes();
    const std::uint64_t dim = a.size();
    constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (std::uint64_t half = 1; half < dim; half <<= 1) {
        const std::uint64_t stride = half << 1;
        for (std::uint64_t base = 0; base < dim; base += stride) {
            for (std::uint64_t i = base; i < base + half; ++i) {
                const Complex lo = a[i];
                const Complex hi = a[i + half];
                a[i] = (lo + hi) * inv_sqrt2;
                a[i + half] = (lo - hi) * inv_sqrt2;
            }
        }
    }
    return Statevector(psi.n_qubits(), std::move(a));
}

// Pauli X on one qubit (qubit 0 = leftmost string position = top index bit).
inline Statevector apply_x(const Statevector& psi, int qubit) {
    const int n = psi.n_qubits();
    if (qubit < 0 || qubit >= n)
        throw std::out_of_range("apply_x: qubit index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (n - 1 - qubit);
    std::vector<Complex> a = psi.amplitudes();
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const std::uint64_t j = i ^ mask;
        if (i < j) std::swap(a[i], a[j]);
    }
    return Statevector(n, std::move(a));
}

// Euclidean distance between two states of equal width.
inline double l2_distance(const Statevector& a, const Statevector& b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("l2_distance: qubit counts differ");
    double total = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) total += std::norm(a[i] - b[i]);
    return std::sqrt(total);
}

// Born-rule measurement of the full register. Draws one uniform double and
// walks the cumulative distribution; refuses states whose norm has drifted.
inline BasisState measure_all(const Statevector& psi, Rng& rng) {
    if (std::abs(psi.norm() - 1.0) > kNormTolerance)
        throw state_error("measure_all: statevector norm deviates from 1 beyond tolerance");
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double cumulative = 0.0;
    std::uint64_t last_support = 0;
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        const double p = std::norm(psi[i]);
        if (p > 0.0) last_support = i;
        cumulative += p;
        if (u < cumulative) return BasisState(psi.n_qubits(), i);
    }
    // Rounding can leave the cumulative sum a hair under u; the draw then
    // belongs to the last state that carries any probability.
    return BasisState(psi.n_qubits(), last_support);
}

// Repeated independent measurements of the same state.
inline ShotHistogram sample(const Statevector& psi, std::uint64_t shots, Rng& rng) {
    if (shots < 1) throw std::invalid_argument("sample: shot count must be positive");
    ShotHistogram hist;
    hist.total_shots = shots;
    for (std::uint64_t s = 0; s < shots; ++s) ++hist.counts[measure_all(psi, rng)];
    return hist;
}

}  // namespace iqc
