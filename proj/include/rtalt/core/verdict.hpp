#pragma once

#include "rtalt/core/alphabet.hpp"

#include <optional>
#include <string_view>

namespace rtalt::core {

enum class Verdict { accept, reject };

inline constexpr Verdict verdict_of(bool accepted) noexcept
{
    return accepted ? Verdict::accept : Verdict::reject;
}

inline constexpr std::string_view to_string(Verdict v) noexcept
{
    return v == Verdict::accept ? "ACCEPT" : "REJECT";
}

/// Result of an emptiness decision. A nonempty verdict always has a witness.
struct EmptinessVerdict {
    std::optional<Word> witness;

    static EmptinessVerdict empty() { return {}; }
    static EmptinessVerdict nonempty(Word w) { return {std::move(w)}; }
    bool is_empty() const noexcept { return !witness.has_value(); }
};

} // namespace rtalt::core
