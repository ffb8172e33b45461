#pragma once

#include "rtalt/core/tree.hpp"
#include "rtalt/qfa/qfa.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace rtalt::qfa {

/// Alternating QFA: classical control with an existential/universal
/// partition over a quantum register. At each step the superoperator for
/// (classical state, symbol) is applied; every outcome k with E_k|ψ> ≠ 0 is a
/// child with classical state cdelta[s][symbol][k].
struct AqfaDescription {
    Alphabet alphabet;
    std::vector<std::string> classical_states;
    std::vector<bool> universal;
    std::size_t classical_initial = 0;
    std::vector<bool> classical_accept;
    std::vector<std::string> basis;
    std::size_t initial = 0;
    /// ops[s][i], i an alphabet index (end-marker at alphabet.size()).
    std::vector<std::vector<Superoperator>> ops;
    /// cdelta[s][i][k] for outcome k (0-based here, 1-based in files).
    std::vector<std::vector<std::vector<std::size_t>>> cdelta;

    std::size_t dimension() const noexcept { return basis.size(); }
    bool operator==(const AqfaDescription&) const = default;
};

/// Identity superoperators, every outcome staying in place, all states
/// existential and rejecting.
AqfaDescription make_aqfa(Alphabet alphabet, std::vector<std::string> classical, std::vector<std::string> basis);

std::vector<std::string> validate(const AqfaDescription& m);

/// Observes every node expansion: classical state, pure state, and the
/// children's (outcome, classical state, pure state) before pruning zeros.
struct ExpansionRecord {
    std::size_t level;
    std::size_t state;
    const CVector& psi;
    const std::vector<CVector>& branches;
};
using ExpansionObserver = std::function<void(const ExpansionRecord&)>;

/// AND-OR evaluation over the outcome tree with exact zero tests. Leaves
/// at depth 2n+4 are true iff their classical state is accepting.
Verdict aqfa_accepts(const AqfaDescription& m, const Word& w, const ExpansionObserver& observer = {});

/// Materialized outcome tree (for DOT export).
core::ComputationTree aqfa_tree(const AqfaDescription& m, const Word& w);

} // namespace rtalt::qfa
