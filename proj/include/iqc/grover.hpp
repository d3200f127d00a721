// Textbook Grover search, used as the comparison baseline for the
// interferometric scheme. Note the sign convention difference: Grover's
// oracle flips SOLUTIONS to -1, while this library's phase oracle flips
// non-solutions. The two differ by a global phase, so the conversion is the
// one-line wrapper in grover_oracle_flip below. Exclusions play no role here;
// the baseline measures search success, it does not enumerate.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "iqc/oracle.hpp"
#include "iqc/statevector.hpp"

namespace iqc {

struct GroverOutcome {
    double success_probability = 0.0;  // analytic: sin^2((2k+1) theta)
    BasisState measured;
    bool hit = false;  // measured state satisfies the predicate
};

// round(pi / (4 asin(sqrt(M/N))) - 1/2), floored at 0: the iteration count
// that lands closest to the success-probability peak.
inline std::uint64_t optimal_grover_iterations(std::uint64_t n_states, std::uint64_t n_solutions) {
    if (n_solutions < 1)
        throw std::invalid_argument("optimal_grover_iterations: need at least one solution");
    if (n_solutions > n_states)
        throw std::invalid_argument("optimal_grover_iterations: more solutions than states");
    const double theta =
        std::asin(std::sqrt(static_cast<double>(n_solutions) / static_cast<double>(n_states)));
    const double k = std::numbers::pi / (4.0 * theta) - 0.5;
    return k <= 0.0 ? 0 : static_cast<std::uint64_t>(std::llround(k));
}

namespace detail {

// Textbook oracle step: solutions get -1 (conversion from the library's
// flip-the-non-solutions convention; same state up to global phase).
inline void grover_oracle_flip(std::vector<Complex>& a, const Oracle& o) {
    for (std::uint64_t x = 0; x < a.size(); ++x)
        if (o.predicate(x)) a[x] = -a[x];
}

// Inversion about the mean, the diffusion operator.
inline void grover_diffusion(std::vector<Complex>& a) {
    Complex mean{0.0, 0.0};
    for (const Complex& v : a) mean += v;
    mean /= static_cast<double>(a.size());
    for (Complex& v : a) v = 2.0 * mean - v;
}

}  // namespace detail

// State after `iterations` Grover iterations on the uniform spread.
inline Statevector grover_state(const Oracle& o, std::uint64_t iterations,
                                int max_qubits = kDefaultMaxQubits) {
    const Statevector spread = hadamard_all(new_zero_state(o.n_vars(), max_qubits));
    std::vector<Complex> a = spread.amplitudes();
    for (std::uint64_t k = 0; k < iterations; ++k) {
        detail::grover_oracle_flip(a, o);
        detail::grover_diffusion(a);
    }
    return Statevector(o.n_vars(), std::move(a));
}

// Total probability mass sitting on solutions.
inline double grover_success_probability(const Statevector& psi, const Oracle& o) {
    if (psi.n_qubits() != o.n_vars())
        throw std::invalid_argument("grover_success_probability: state width does not match oracle");
    double p = 0.0;
    for (std::uint64_t x = 0; x < psi.dim(); ++x)
        if (o.predicate(x)) p += std::norm(psi[x]);
    return std::min(p, 1.0);
}

// One Grover run with an explicit iteration count.
inline GroverOutcome grover_search(const Oracle& o, std::uint64_t iterations, Rng& rng,
                                   int max_qubits = kDefaultMaxQubits) {
    const Statevector final_state = grover_state(o, iterations, max_qubits);
    GroverOutcome out;
    out.success_probability = grover_success_probability(final_state, o);
    out.measured = measure_all(final_state, rng);
    out.hit = o.predicate(out.measured.index());
    return out;
}

// One Grover run at the optimal iteration count for the oracle's (counted)
// solution set. Requires at least one solution to aim for.
inline GroverOutcome grover_search(const Oracle& o, Rng& rng,
                                   int max_qubits = kDefaultMaxQubits) {
    const SolutionSet solutions = brute_force_solutions(o, max_qubits);
    if (solutions.empty())
        throw std::invalid_argument("grover_search: automatic iteration count needs a satisfiable oracle");
    const std::uint64_t iterations =
        optimal_grover_iterations(std::uint64_t{1} << o.n_vars(), solutions.size());
    return grover_search(o, iterations, rng, max_qubits);
}

}  // namespace iqc
