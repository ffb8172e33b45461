#include "rtalt/core/alphabet.hpp"
#include "rtalt/core/error.hpp"

#include <algorithm>

namespace rtalt::core {

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols))
{
    if (symbols_.empty())
        throw SchemaError("alphabet must not be empty");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == kEndMarker)
            throw SchemaError("alphabet must not contain the end-marker");
        for (std::size_t j = 0; j < i; ++j)
            if (symbols_[i] == symbols_[j])
                throw SchemaError("duplicate alphabet symbol '" + to_utf8(symbols_[i]) + "'");
    }
}

std::optional<std::size_t> Alphabet::index_of(Symbol s) const
{
    auto it = std::find(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - symbols_.begin());
}

bool Alphabet::contains(const Word& w) const
{
    return std::all_of(w.begin(), w.end(), [&](Symbol s) { return index_of(s).has_value(); });
}

std::string Alphabet::key(std::size_t i) const
{
    if (i == end_index())
        return std::string(kEndKey);
    return to_utf8(symbols_.at(i));
}

std::optional<std::size_t> Alphabet::index_of_key(std::string_view key) const
{
    if (key == kEndKey)
        return end_index();
    Word w;
    try {
        w = from_utf8(key);
    } catch (const SyntaxError&) {
        return std::nullopt;
    }
    if (w.size() != 1)
        return std::nullopt;
    return index_of(w[0]);
}

TapeView::TapeView(const Alphabet& alphabet, const Word& w) : end_index_(alphabet.end_index())
{
    indices_.reserve(w.size() + 2);
    indices_.push_back(end_index_);
    for (Symbol s : w) {
        auto idx = alphabet.index_of(s);
        if (!idx)
            throw SymbolError("symbol '" + to_utf8(s) + "' is not in the alphabet");
        indices_.push_back(*idx);
    }
    indices_.push_back(end_index_);
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len)
{
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    out.push_back(Word{});
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(layer.size() * alphabet.size());
        for (const auto& w : layer)
            for (Symbol s : alphabet.symbols())
                next.push_back(w + s);
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

Word shortlex_successor(const Alphabet& alphabet, const Word& w)
{
    Word next = w;
    std::size_t i = next.size();
    while (i > 0) {
        --i;
        auto idx = *alphabet.index_of(next[i]);
        if (idx + 1 < alphabet.size()) {
            next[i] = alphabet[idx + 1];
            return next;
        }
        next[i] = alphabet[0];
    }
    return Word(w.size() + 1, alphabet[0]);
}

bool shortlex_less(const Alphabet& alphabet, const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return *alphabet.index_of(a[i]) < *alphabet.index_of(b[i]);
    }
    return false;
}

std::string to_utf8(Symbol s)
{
    std::string out;
    auto cp = static_cast<std::uint32_t>(s);
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

std::string to_utf8(const Word& w)
{
    std::string out;
    for (Symbol s : w)
        out += to_utf8(s);
    return out;
}

Word from_utf8(std::string_view text)
{
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        auto c = static_cast<unsigned char>(text[i]);
        std::size_t len = 0;
        std::uint32_t cp = 0;
        if (c < 0x80) {
            len = 1;
            cp = c;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            throw SyntaxError("invalid UTF-8 lead byte");
        }
        if (i + len > text.size())
            throw SyntaxError("truncated UTF-8 sequence");
        for (std::size_t k = 1; k < len; ++k) {
            auto cc = static_cast<unsigned char>(text[i + k]);
            if ((cc & 0xC0) != 0x80)
                throw SyntaxError("invalid UTF-8 continuation byte");
            cp = (cp << 6) | (cc & 0x3F);
        }
        out.push_back(static_cast<Symbol>(cp));
        i += len;
    }
    return out;
}

std::string display(const Word& w)
{
    return w.empty() ? std::string("ε") : to_utf8(w);
}

} // namespace rtalt::core
