#pragma once

#include "rtalt/core/alphabet.hpp"
#include "rtalt/core/tree.hpp"
#include "rtalt/core/verdict.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace rtalt::alt {

using core::Alphabet;
using core::Verdict;
using core::Word;

/// Realtime alternating finite automaton.
///
/// delta[s][i] is the successor set of state s on the symbol with alphabet
/// index i (index alphabet.size() is the end-marker). Successor lists are
/// kept sorted and duplicate-free.
struct AfaDescription {
    Alphabet alphabet;
    std::vector<std::string> states;
    std::vector<bool> universal;
    std::size_t initial = 0;
    std::size_t accepting = 0;
    std::vector<std::vector<std::vector<std::size_t>>> delta;

    bool operator==(const AfaDescription&) const = default;
};

enum CounterStatus : std::size_t { zero = 0, nonzero = 1 };

struct CounterMove {
    std::size_t target;
    int update;

    auto operator<=>(const CounterMove&) const = default;
};

/// Realtime alternating one-counter automaton.
/// delta[s][i][status] lists (target, update) pairs, sorted and unique.
struct A1caDescription {
    Alphabet alphabet;
    std::vector<std::string> states;
    std::vector<bool> universal;
    std::size_t initial = 0;
    std::size_t accepting = 0;
    std::vector<std::vector<std::array<std::vector<CounterMove>, 2>>> delta;

    bool operator==(const A1caDescription&) const = default;
};

/// Empty machine shells with every transition set empty.
AfaDescription make_afa(Alphabet alphabet, std::vector<std::string> states);
A1caDescription make_a1ca(Alphabet alphabet, std::vector<std::string> states);

/// Sorts and deduplicates every successor list.
void normalize(AfaDescription& m);
void normalize(A1caDescription& m);

std::vector<std::string> validate(const AfaDescription& m);
std::vector<std::string> validate(const A1caDescription& m);

/// Counter range observed while evaluating an A1CA.
struct CounterStats {
    long min_counter = 0;
    long max_counter = 0;
    std::size_t configurations = 0;
    /// Largest |counter| - level over visited configurations (never positive).
    long max_excess = 0;
};

Verdict afa_accepts(const AfaDescription& m, const Word& w);
Verdict a1ca_accepts(const A1caDescription& m, const Word& w, CounterStats* stats = nullptr);

/// Fully materialized tree (no sharing of equal configurations).
core::ComputationTree alt_tree(const AfaDescription& m, const Word& w);
core::ComputationTree alt_tree(const A1caDescription& m, const Word& w);

/// An A1CA whose counter is never touched, behaving exactly like m.
A1caDescription lift_to_a1ca(const AfaDescription& m);

} // namespace rtalt::alt
