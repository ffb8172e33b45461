#pragma once

#include "rtalt/core/alphabet.hpp"
#include "rtalt/core/verdict.hpp"
#include "rtalt/qfa/matrix.hpp"

#include <string>
#include <vector>

namespace rtalt::qfa {

using core::Alphabet;
using core::Verdict;
using core::Word;

/// Operation elements E_1..E_l; outcome k (1-based in files) names E_k.
struct Superoperator {
    std::vector<CMatrix> elements;

    bool operator==(const Superoperator&) const = default;
};

/// Dimension and exact completeness Σ E_k†E_k = I.
std::vector<std::string> validate(const Superoperator& e, std::size_t n);

using DensityMatrix = CMatrix;

/// Hermitian, unit trace, real nonnegative diagonal.
std::vector<std::string> check_density(const DensityMatrix& rho);

/// Σ E_k ρ E_k†. Throws Error on a dimension mismatch.
DensityMatrix apply_superoperator(const Superoperator& e, const DensityMatrix& rho);

/// |q_i><q_i|
DensityMatrix basis_density(std::size_t n, std::size_t i);

/// Realtime QFA with a projective accept/reject measurement at the end.
/// ops[i] is the superoperator for the symbol with alphabet index i; the
/// end-marker is at alphabet.size().
struct QfaDescription {
    Alphabet alphabet;
    std::vector<std::string> basis;
    std::size_t initial = 0;
    /// Basis states in the accepting subspace; the rest span P_r.
    std::vector<bool> accept;
    std::vector<Superoperator> ops;

    std::size_t dimension() const noexcept { return basis.size(); }
    bool operator==(const QfaDescription&) const = default;
};

/// Identity superoperators everywhere.
QfaDescription make_qfa(Alphabet alphabet, std::vector<std::string> basis);

/// One-state machine accepting every word with probability 0.
QfaDescription make_zero_qfa(const Alphabet& alphabet);

std::vector<std::string> validate(const QfaDescription& m);

/// State after E_¢, the word, and E_¢ (before measuring).
DensityMatrix final_density(const QfaDescription& m, const Word& w);

/// Tr(P_a ρ) for the given density over the machine's basis.
Rational accept_weight(const QfaDescription& m, const DensityMatrix& rho);

/// f(w) = Tr(P_a ρ) after E_¢, w, E_¢; exact.
Rational qfa_accept_probability(const QfaDescription& m, const Word& w);

/// f(w) > 0
Verdict nqfa_accepts(const QfaDescription& m, const Word& w);
/// f(w) = 1
Verdict uqfa_accepts(const QfaDescription& m, const Word& w);

} // namespace rtalt::qfa
