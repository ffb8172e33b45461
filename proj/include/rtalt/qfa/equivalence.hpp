#pragma once

#include "rtalt/qfa/qfa.hpp"

#include <optional>

namespace rtalt::qfa {

struct EquivalenceResult {
    /// Shortlex-least word on which the acceptance probabilities differ.
    std::optional<Word> counterexample;
    /// Generating words of the basis built so far, in insertion order.
    std::vector<Word> basis_words;

    bool equivalent() const noexcept { return !counterexample.has_value(); }
};

/// Decides whether f_{m1}(w) = f_{m2}(w) for every word.
///
/// Pairs of density matrices are flattened into one vector of dimension
/// n1² + n2². Starting from the pair after the left end-marker, the reachable
/// span is closed under the per-symbol maps in shortlex (breadth-first)
/// order with exact elimination. Each new basis vector is tested against the
/// difference of the two acceptance functionals; the first failure is the
/// shortlex-least counterexample. Throws Error on an alphabet mismatch.
EquivalenceResult qfa_equivalence(const QfaDescription& m1, const QfaDescription& m2);

/// Emptiness for positive one-sided unbounded error: equivalence with the
/// one-state zero machine. A witness w has f(w) > 0 and |w| <= n² + 1.
core::EmptinessVerdict nqfa_emptiness(const QfaDescription& m);

} // namespace rtalt::qfa
