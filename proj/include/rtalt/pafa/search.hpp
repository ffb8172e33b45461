#pragma once

#include "rtalt/pafa/pafa.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace rtalt::pafa {

struct SearchStats {
    /// Entry sets whose strategy-independent closure was computed.
    std::size_t histories_expanded = 0;
    std::size_t memo_hits = 0;
    /// Joint choices tried at the information sets of one history.
    std::size_t assignments_tried = 0;
    /// Universal expansions whose zero and nonzero move sets differ, split by
    /// whether the symbol read was the end-marker.
    std::size_t status_consults_at_end = 0;
    std::size_t status_consults_on_symbols = 0;
};

/// Search for a strategy whose induced subtree has only accepting leaves.
///
/// Works one public history at a time. The nodes entering a history and
/// everything they reach without a public move are fixed; the choices at
/// the information sets of that history pick a child history for each
/// choosing node. Child histories are independent subproblems, memoized on
/// the set of positions entering them (positions hold the level, so the
/// recursion is finite). Choices are tried with common states ascending and
/// labels in Γ order, histories in shortlex order, so the returned witness is
/// the least winning strategy in that order. Its domain is exactly the
/// information sets it reaches.
std::optional<Strategy> accepting_strategy(const PafaDescription& m, const Word& w, SearchStats* stats = nullptr);
std::optional<Strategy> accepting_strategy(const Pa1caDescription& m, const Word& w, SearchStats* stats = nullptr);

Verdict pafa_accepts(const PafaDescription& m, const Word& w, SearchStats* stats = nullptr);
Verdict pa1ca_accepts(const Pa1caDescription& m, const Word& w, SearchStats* stats = nullptr);

struct VerifyResult {
    Verdict verdict = Verdict::reject;
    /// Set when the strategy is undefined on a reached information set.
    std::optional<std::string> diagnostic;
};

/// Evaluates only the subtree induced by f: one child (the one f names) at
/// existential branching nodes, all children at universal nodes. Plain
/// recursive walk, independent of the search.
VerifyResult verify_strategy(const PafaDescription& m, const Word& w, const Strategy& f);
VerifyResult verify_strategy(const Pa1caDescription& m, const Word& w, const Strategy& f);

/// Materialized subtree induced by f (for DOT export).
core::ComputationTree strategy_tree(const Pa1caDescription& m, const Word& w, const Strategy& f);

/// Public moves along one play of the induced subtree: the labels chosen by
/// the strategy, in order, following the first child at universal nodes.
std::vector<int> first_play_moves(const Pa1caDescription& m, const Word& w, const Strategy& f);

} // namespace rtalt::pafa
