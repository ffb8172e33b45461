#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rtalt::tmc {

enum class Direction { left, right };

struct TmTransition {
    std::size_t state;
    std::size_t write;
    Direction move;

    bool operator==(const TmTransition&) const = default;
};

/// Deterministic single-tape machine on a semi-infinite tape. Cell 0 always
/// holds the start symbol; every other cell starts blank.
struct TmDescription {
    std::vector<std::string> states;
    std::vector<std::string> tape_alphabet;
    std::size_t initial = 0;
    std::size_t halting = 0;
    std::size_t start_symbol = 0;
    std::size_t blank = 0;
    /// delta[q][x]; nullopt where undefined.
    std::vector<std::vector<std::optional<TmTransition>>> delta;

    bool operator==(const TmDescription&) const = default;

    const std::optional<TmTransition>& transition(std::size_t q, std::size_t x) const { return delta.at(q).at(x); }
    std::size_t state_index(const std::string& name) const;
    std::size_t symbol_index(const std::string& name) const;
};

TmDescription make_tm(std::vector<std::string> states, std::vector<std::string> tape_alphabet,
                      const std::string& initial, const std::string& halting, const std::string& start_symbol,
                      const std::string& blank);

/// Adds q,x -> q',y,d by name.
void add_transition(TmDescription& m, const std::string& q, const std::string& x, const std::string& q2,
                    const std::string& y, Direction d);

/// Static well-formedness: index ranges, the start symbol is never
/// overwritten and never left of, the halting state has no transitions.
std::vector<std::string> validate(const TmDescription& m);

struct TmRunResult {
    bool halted = false;
    std::size_t steps = 0;
    std::size_t head = 0;
    std::size_t final_state = 0;
    /// Tape contents at the end (trailing blanks trimmed to the visited area).
    std::vector<std::size_t> tape;
};

/// Direct simulation from the empty tape (initial state scanning the start
/// symbol in cell 0). Throws rtalt::Error when a non-halting state has no
/// transition for the scanned symbol or the head would leave the tape.
TmRunResult tm_run(const TmDescription& m, std::size_t max_steps);

/// Bounded check of the assumptions the compiler relies on: the machine
/// returns to cell 0 for the first time exactly when it halts, halts only in
/// the halting state, never overwrites or moves left of the start symbol.
/// An empty result within the bound is not a proof of compliance.
std::vector<std::string> tm_check_assumptions(const TmDescription& m, std::size_t max_steps);

/// A tape cell: a plain symbol, or a symbol with the head (in some state) on it.
struct CellContents {
    std::optional<std::size_t> state;
    std::size_t symbol = 0;

    static CellContents plain(std::size_t x) { return {std::nullopt, x}; }
    static CellContents head(std::size_t q, std::size_t x) { return {q, x}; }
    bool has_head() const noexcept { return state.has_value(); }

    auto operator<=>(const CellContents&) const = default;
};

std::string to_string(const TmDescription& m, const CellContents& c);

/// Contents of the middle cell one step later, given the window
/// (left, middle, right) now. nullopt when the window is inconsistent (more
/// than one head) or its head cannot move (halting or undefined).
std::optional<CellContents> next_contents(const TmDescription& m, const CellContents& left,
                                          const CellContents& middle, const CellContents& right);

/// Full configuration of a run after `steps` steps, as cell contents over
/// cells [0, width).
std::vector<CellContents> configuration_at(const TmDescription& m, std::size_t steps, std::size_t width);

} // namespace rtalt::tmc
