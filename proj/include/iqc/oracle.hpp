// Oracles: the decision function the search tries to invert, plus the two
// input formats that define one (explicit truth tables and DIMACS CNF).
//
// Sign convention: the phase oracle leaves satisfying assignments alone and
// flips the sign of everything else — non-solutions are marked negative so a
// later interference step can cancel them. States on an oracle's exclusion
// list are marked negative as well even though they satisfy the predicate;
// that is how already-found solutions are removed from subsequent rounds.
#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "iqc/statevector.hpp"

namespace iqc {

// A CNF formula over variables 1..n_vars, DIMACS-style: each clause is a list
// of non-zero literals, negative meaning negated. Variable i is qubit i-1.
struct CnfFormula {
    int n_vars = 0;
    std::vector<std::vector<int>> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// A set of same-width assignments, stored by basis index.
struct SolutionSet {
    int n_vars = 0;  // 0 means "empty, width not yet pinned"
    std::set<std::uint64_t> members;

    SolutionSet() = default;
    explicit SolutionSet(int width) : n_vars(width) {}

    bool empty() const { return members.empty(); }
    std::size_t size() const { return members.size(); }

    bool contains(std::uint64_t index) const { return members.count(index) != 0; }
    bool contains(const BasisState& s) const { return s.size() == n_vars && contains(s.index()); }

    void insert(const BasisState& s) {
        if (n_vars == 0) n_vars = s.size();
        if (s.size() != n_vars)
            throw std::invalid_argument("SolutionSet: mixed bitstring widths");
        members.insert(s.index());
    }

    std::vector<BasisState> states() const {
        std::vector<BasisState> out;
        out.reserve(members.size());
        for (std::uint64_t m : members) out.emplace_back(n_vars, m);
        return out;
    }

    friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

namespace detail {

inline bool clause_satisfied(const std::vector<int>& clause, std::uint64_t x, int n_vars) {
    for (int lit : clause) {
        const int var = lit > 0 ? lit : -lit;
        // Variable i sits at index bit (n_vars - i): leftmost-first ordering.
        const bool value = (x >> (n_vars - var)) & 1;
        if (lit > 0 ? value : !value) return true;
    }
    return false;
}

inline bool cnf_satisfied(const CnfFormula& f, std::uint64_t x) {
    for (const auto& clause : f.clauses)
        if (!clause_satisfied(clause, x, f.n_vars)) return false;
    return true;
}

}  // namespace detail

// Immutable decision function over n_vars-bit assignments, with an exclusion
// list layered on top. Truth-table oracles keep a dense bitmap so predicate
// lookups stay O(1) inside statevector-sized loops.
class Oracle {
public:
    int n_vars() const { return n_vars_; }

    // The bare decision function; ignores exclusions.
    bool predicate(std::uint64_t x) const {
        return cnf_ ? detail::cnf_satisfied(*cnf_, x) : static_cast<bool>(table_[x]);
    }

    bool predicate(const BasisState& s) const {
        if (s.size() != n_vars_)
            throw std::invalid_argument("Oracle: assignment width does not match oracle");
        return predicate(s.index());
    }

    // True when the phase oracle flips x's sign: non-solutions and excluded
    // solutions are both marked negative.
    bool marked_negative(std::uint64_t x) const {
        return !predicate(x) || excluded_.count(x) != 0;
    }

    const std::set<std::uint64_t>& exclusions() const { return excluded_; }
    const std::optional<CnfFormula>& formula() const { return cnf_; }

private:
    Oracle() = default;

    int n_vars_ = 0;
    std::vector<bool> table_;          // dense backing when built from a truth table
    std::optional<CnfFormula> cnf_;    // clause backing when built from a formula
    std::set<std::uint64_t> excluded_;

    friend Oracle oracle_from_truth_table(const SolutionSet&, int);
    friend Oracle cnf_to_oracle(const CnfFormula&);
    friend Oracle exclude(const Oracle&, const BasisState&);
};

// Oracle whose solutions are exactly the given set.
inline Oracle oracle_from_truth_table(const SolutionSet& solutions, int n_vars) {
    if (n_vars < 1 || n_vars > 62)
        throw std::invalid_argument("oracle_from_truth_table: variable count must be in [1, 62]");
    if (solutions.n_vars != 0 && solutions.n_vars != n_vars)
        throw std::invalid_argument("oracle_from_truth_table: set width does not match n_vars");
    Oracle o;
    o.n_vars_ = n_vars;
    o.table_.assign(std::uint64_t{1} << n_vars, false);
    for (std::uint64_t m : solutions.members) {
        if (m >> n_vars)
            throw std::invalid_argument("oracle_from_truth_table: member does not fit in n_vars bits");
        o.table_[m] = true;
    }
    return o;
}

// Oracle that evaluates a CNF formula. The formula must already be
// well-formed (as parse_dimacs guarantees); hand-built ones are re-checked.
inline Oracle cnf_to_oracle(const CnfFormula& f) {
    if (f.n_vars < 1 || f.n_vars > 62)
        throw std::invalid_argument("cnf_to_oracle: variable count must be in [1, 62]");
    for (const auto& clause : f.clauses) {
        if (clause.empty())
            throw std::invalid_argument("cnf_to_oracle: empty clause");
        for (int lit : clause)
            if (lit == 0 || lit > f.n_vars || lit < -f.n_vars)
                throw std::invalid_argument("cnf_to_oracle: literal out of range");
    }
    Oracle o;
    o.n_vars_ = f.n_vars;
    o.cnf_ = f;
    return o;
}

// Copy of `o` with one more confirmed solution struck from future rounds.
// Excluding a non-solution is rejected: exclusion exists to retire states the
// oracle itself vouched for, nothing else.
inline Oracle exclude(const Oracle& o, const BasisState& solution) {
    if (solution.size() != o.n_vars())
        throw std::invalid_argument("exclude: state width does not match oracle");
    if (!o.predicate(solution.index()))
        throw std::invalid_argument("exclude: state is not a solution of the oracle");
    Oracle out = o;
    out.excluded_.insert(solution.index());
    return out;
}

// Sign-marking step: multiply every negatively-marked amplitude by -1.
// A pure phase, so magnitudes (and the norm) are preserved exactly.
inline Statevector apply_phase_oracle(const Statevector& psi, const Oracle& o) {
    if (psi.n_qubits() != o.n_vars())
        throw std::invalid_argument("apply_phase_oracle: state width does not match oracle");
    std::vector<Complex> a = psi.amplitudes();
    for (std::uint64_t x = 0; x < a.size(); ++x)
        if (o.marked_negative(x)) a[x] = -a[x];
    return Statevector(psi.n_qubits(), std::move(a));
}

// Classical reference answer: every satisfying assignment, exclusions
// ignored. Exponential by nature, hence the cap.
inline SolutionSet brute_force_solutions(const Oracle& o, int max_vars = kDefaultMaxQubits) {
    if (o.n_vars() > max_vars)
        throw resource_error("brute_force_solutions: " + std::to_string(o.n_vars()) +
                             " variables exceeds the " + std::to_string(max_vars) + "-variable cap");
    SolutionSet out(o.n_vars());
    const std::uint64_t dim = std::uint64_t{1} << o.n_vars();
    for (std::uint64_t x = 0; x < dim; ++x)
        if (o.predicate(x)) out.members.insert(x);
    return out;
}

// --- input formats ---------------------------------------------------------

// DIMACS CNF reader. Accepts comment lines ('c ...'), requires a single
// 'p cnf <vars> <clauses>' header before any clause data, and requires every
// clause to be terminated by 0. Errors carry the offending line number.
inline CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    bool header_seen = false;
    std::size_t declared_clauses = 0;
    std::vector<int> current;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;  // blank line
        if (tok[0] == 'c') continue;     // comment

        if (tok == "p") {
            if (header_seen) throw parse_error(line_no, "duplicate 'p cnf' header");
            std::string kind;
            long vars = 0;
            long clauses = 0;
            if (!(tokens >> kind >> vars >> clauses) || kind != "cnf")
                throw parse_error(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            std::string extra;
            if (tokens >> extra) throw parse_error(line_no, "trailing tokens after header");
            if (vars < 1 || vars > 62)
                throw parse_error(line_no, "variable count must be in [1, 62]");
            if (clauses < 0) throw parse_error(line_no, "negative clause count");
            f.n_vars = static_cast<int>(vars);
            declared_clauses = static_cast<std::size_t>(clauses);
            header_seen = true;
            continue;
        }

        if (!header_seen)
            throw parse_error(line_no, "clause data before 'p cnf' header");

        // Clause literals; already consumed the first token above.
        do {
            std::size_t used = 0;
            long lit = 0;
            try {
                lit = std::stol(tok, &used);
            } catch (const std::exception&) {
                throw parse_error(line_no, "invalid token '" + tok + "'");
            }
            if (used != tok.size())
                throw parse_error(line_no, "invalid token '" + tok + "'");
            if (lit == 0) {
                if (current.empty()) throw parse_error(line_no, "empty clause");
                f.clauses.push_back(current);
                current.clear();
            } else {
                if (lit > f.n_vars || lit < -f.n_vars)
                    throw parse_error(line_no, "literal " + tok + " out of range (formula has " +
                                                   std::to_string(f.n_vars) + " variables)");
                current.push_back(static_cast<int>(lit));
            }
        } while (tokens >> tok);
    }

    const int eof_line = line_no > 0 ? line_no : 1;
    if (!header_seen) throw parse_error(eof_line, "missing 'p cnf' header");
    if (!current.empty()) throw parse_error(eof_line, "unterminated clause (missing 0)");
    if (f.clauses.size() != declared_clauses)
        throw parse_error(eof_line, "clause count mismatch: header declares " +
                                        std::to_string(declared_clauses) + ", file has " +
                                        std::to_string(f.clauses.size()));
    return f;
}

inline CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

inline std::string to_dimacs(const CnfFormula& f) {
    std::string out = "p cnf " + std::to_string(f.n_vars) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const auto& clause : f.clauses) {
        for (int lit : clause) {
            out += std::to_string(lit);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

// Truth-table reader: one bitstring per line, '#' starts a comment, all
// bitstrings must share one width. The resulting set IS the solution set.
inline SolutionSet parse_truth_table(std::istream& in) {
    SolutionSet set;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string_view bits = std::string_view(line).substr(first, last - first + 1);
        for (char c : bits)
            if (c != '0' && c != '1')
                throw parse_error(line_no, "bitstring may contain only '0' and '1'");
        if (bits.size() > 62) throw parse_error(line_no, "bitstring wider than 62 bits");
        if (set.n_vars != 0 && static_cast<int>(bits.size()) != set.n_vars)
            throw parse_error(line_no, "bitstring width " + std::to_string(bits.size()) +
                                           " differs from earlier width " + std::to_string(set.n_vars));
        set.insert(BasisState::from_string(bits));
    }
    if (set.n_vars == 0) throw parse_error(line_no > 0 ? line_no : 1, "no bitstrings in truth table");
    return set;
}

inline SolutionSet parse_truth_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_truth_table(in);
}

}  // namespace iqc
