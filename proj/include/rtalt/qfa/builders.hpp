#pragma once

#include "rtalt/qfa/aqfa.hpp"

namespace rtalt::qfa {

/// Two-alternation AQFA over {a} accepting a^m iff m = i² for some i >= 1.
///
/// The register holds amplitudes proportional to (1, j, j², k). While the
/// position is not yet picked, each symbol maps j to j+1 and j² to (j+1)²;
/// k counts every symbol. An existential pick freezes j at i. At the right
/// end-marker a single universal step has a "difference" outcome with
/// amplitude ∝ i² − k whose branch rejects; all other outcomes accept.
/// Scaling residuals route to rejecting states before the universal step
/// and to accepting states in it.
AqfaDescription build_usquare_aqfa();

} // namespace rtalt::qfa
