#pragma once

#include "rtalt/core/alphabet.hpp"
#include "rtalt/core/tree.hpp"
#include "rtalt/core/verdict.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rtalt::pafa {

using core::Alphabet;
using core::Verdict;
using core::Word;

/// Label of the only move of a singleton transition. Such moves are not
/// moves of the game and never enter a public history.
inline constexpr int kUnlabeled = -1;

/// Move labels index the game alphabet gamma ++ delta_priv, so public labels
/// are [0, |gamma|) and private labels follow.
struct ExistentialMove {
    int label = kUnlabeled;
    std::size_t common = 0;

    auto operator<=>(const ExistentialMove&) const = default;
};

struct UniversalMove {
    int label = kUnlabeled;
    std::size_t common = 0;
    std::size_t priv = 0;
    int update = 0;

    auto operator<=>(const UniversalMove&) const = default;
};

/// Shared shape of PAFA and PA1CA. States are (common, private) pairs;
/// existential moves see only the common component.
struct GameShape {
    Alphabet alphabet;
    std::vector<std::string> common_states;
    std::vector<std::string> private_states;
    std::vector<std::string> gamma;
    std::vector<std::string> delta_priv;
    /// universal[c][p]
    std::vector<std::vector<bool>> universal;
    /// delta_e[c], sorted by label.
    std::vector<std::vector<ExistentialMove>> delta_e;
    std::size_t initial_common = 0;
    std::size_t initial_private = 0;
    std::size_t accept = 0;
    std::size_t reject = 0;

    bool operator==(const GameShape&) const = default;

    std::size_t label_count() const noexcept { return gamma.size() + delta_priv.size(); }
    bool is_public(int label) const noexcept { return label >= 0 && static_cast<std::size_t>(label) < gamma.size(); }
    std::string label_name(int label) const;
    /// Index of a label name in gamma ++ delta_priv, nullopt if unknown.
    std::optional<int> label_index(const std::string& name) const;
    std::optional<std::size_t> common_index(const std::string& name) const;
    std::optional<std::size_t> private_index(const std::string& name) const;
};

/// Realtime private alternating finite automaton.
/// delta_u[c][p][i] for alphabet index i (end-marker at alphabet.size()).
struct PafaDescription : GameShape {
    std::vector<std::vector<std::vector<std::vector<UniversalMove>>>> delta_u;

    bool operator==(const PafaDescription&) const = default;
};

/// PAFA with a counter visible only to universal states.
/// delta_u[c][p][i][status] with status 0 = zero, 1 = nonzero.
struct Pa1caDescription : GameShape {
    std::vector<std::vector<std::vector<std::array<std::vector<UniversalMove>, 2>>>> delta_u;

    bool operator==(const Pa1caDescription&) const = default;
};

/// Shells with all transition sets empty and all states existential.
PafaDescription make_pafa(Alphabet alphabet, std::vector<std::string> common, std::vector<std::string> priv,
                          std::vector<std::string> gamma, std::vector<std::string> delta_priv);
Pa1caDescription make_pa1ca(Alphabet alphabet, std::vector<std::string> common, std::vector<std::string> priv,
                            std::vector<std::string> gamma, std::vector<std::string> delta_priv);

void normalize(PafaDescription& m);
void normalize(Pa1caDescription& m);

/// Arity rules (singleton or exactly |gamma| / |gamma ∪ delta| moves with
/// distinct labels), disjoint game alphabets of size >= 2, Γ-labeled
/// universal moves that keep the private component, index ranges.
/// Empty transition sets are allowed and read with vacuous AND/OR semantics.
std::vector<std::string> validate(const PafaDescription& m);
std::vector<std::string> validate(const Pa1caDescription& m);

/// Counter-inert PA1CA with the same behavior.
Pa1caDescription lift_to_pa1ca(const PafaDescription& m);

/// What the existential player knows: its common state and the public moves
/// seen so far (indices into gamma).
struct InformationSet {
    std::size_t common = 0;
    std::vector<int> history;

    bool operator==(const InformationSet&) const = default;
};

/// Orders by common state, then history in shortlex order.
struct InformationSetLess {
    bool operator()(const InformationSet& a, const InformationSet& b) const;
};

/// Choice of a public label for each information set in its domain.
using Strategy = std::map<InformationSet, int, InformationSetLess>;

std::string to_string(const GameShape& m, const InformationSet& s);
std::string to_string(const GameShape& m, const Strategy& f);

} // namespace rtalt::pafa
