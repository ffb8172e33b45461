#pragma once

#include "rtalt/alt/afa.hpp"
#include "rtalt/tmc/turing.hpp"

#include <array>
#include <vector>

namespace rtalt::tmc {

/// The unary input symbol of compiled machines.
inline constexpr core::Symbol kClockSymbol = U'u';

/// Every contents value a cell can hold: plain symbols first, then
/// (state, symbol) pairs in state-major order.
std::vector<CellContents> all_contents(const TmDescription& m);

/// A window (left, middle, right) whose successor middle is `result`.
struct GuessTriple {
    std::array<CellContents, 3> window;
    CellContents result;
};

/// All windows on which next_contents is defined, in all_contents order.
std::vector<GuessTriple> guess_table(const TmDescription& m);

/// Backwards-simulating A1CA over {u}: accepts u^(2n) iff the machine,
/// started on the empty tape, halts after exactly n steps (given that it
/// satisfies tm_check_assumptions).
///
/// Memory holds the contents claimed for the cell at the counter position.
/// Each pair of input symbols is one stage: an idle step and an existential
/// guess of the predecessor window on the first symbol, a universal split to
/// C-1, C, C+1 and an idle step on the second. At counter zero the virtual
/// cell left of cell 0 is taken to hold the start symbol and the C-1 branch
/// is omitted. The right end-marker accepts iff the claim matches the empty
/// start configuration.
alt::A1caDescription compile_tm_to_a1ca(const TmDescription& m);

} // namespace rtalt::tmc
