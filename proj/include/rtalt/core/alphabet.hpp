#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rtalt::core {

using Symbol = char32_t;
using Word = std::u32string;

/// The reserved end-marker. It never belongs to an alphabet; machine files
/// spell it with the key "@end".
inline constexpr Symbol kEndMarker = U'¢';
inline constexpr std::string_view kEndKey = "@end";

/// Nonempty ordered set of symbols. Transition tables index symbols by
/// their position; the end-marker gets index size().
class Alphabet {
public:
    Alphabet() = default;
    /// Throws SchemaError on duplicates, an empty list or the end-marker.
    explicit Alphabet(std::vector<Symbol> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    std::size_t end_index() const noexcept { return symbols_.size(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    Symbol operator[](std::size_t i) const { return symbols_.at(i); }

    std::optional<std::size_t> index_of(Symbol s) const;
    bool contains(const Word& w) const;

    /// Key used in machine files for the symbol with index i (including the
    /// end index).
    std::string key(std::size_t i) const;
    /// Inverse of key(); nullopt for unknown keys.
    std::optional<std::size_t> index_of_key(std::string_view key) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<Symbol> symbols_;
};

/// Read-only view of the tape ¢w¢ as seen level by level.
///
/// Levels 2k and 2k+1 of a computation tree read tape position k+1, so the
/// root reads the left end-marker and the last transition (level 2n+3) reads
/// the right one. Leaves sit at depth 2n+4.
class TapeView {
public:
    /// Throws SymbolError if w uses a symbol outside the alphabet.
    TapeView(const Alphabet& alphabet, const Word& w);

    std::size_t word_length() const noexcept { return indices_.size() - 2; }
    std::size_t depth() const noexcept { return 2 * indices_.size(); }
    /// 1-based tape position read at the given level.
    static std::size_t position_at_level(std::size_t level) noexcept { return level / 2 + 1; }
    /// Alphabet index of the symbol read at the given level (end index for ¢).
    std::size_t symbol_at_level(std::size_t level) const { return indices_.at(level / 2); }
    bool is_end_at_level(std::size_t level) const { return symbol_at_level(level) == end_index_; }

private:
    std::vector<std::size_t> indices_;
    std::size_t end_index_;
};

/// All words of length <= max_len in shortlex order.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len);

/// Next word in shortlex order over the alphabet.
Word shortlex_successor(const Alphabet& alphabet, const Word& w);

/// Shortlex comparison relative to the alphabet order.
bool shortlex_less(const Alphabet& alphabet, const Word& a, const Word& b);

std::string to_utf8(const Word& w);
std::string to_utf8(Symbol s);
/// Throws SyntaxError on invalid UTF-8.
Word from_utf8(std::string_view text);

/// Human-readable word, "ε" for the empty word.
std::string display(const Word& w);

} // namespace rtalt::core
