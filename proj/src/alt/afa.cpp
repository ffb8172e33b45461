#include "rtalt/alt/afa.hpp"
#include "rtalt/core/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace rtalt::alt {

AfaDescription make_afa(Alphabet alphabet, std::vector<std::string> states)
{
    AfaDescription m;
    m.alphabet = std::move(alphabet);
    m.states = std::move(states);
    m.universal.assign(m.states.size(), false);
    m.delta.assign(m.states.size(), std::vector<std::vector<std::size_t>>(m.alphabet.size() + 1));
    return m;
}

A1caDescription make_a1ca(Alphabet alphabet, std::vector<std::string> states)
{
    A1caDescription m;
    m.alphabet = std::move(alphabet);
    m.states = std::move(states);
    m.universal.assign(m.states.size(), false);
    m.delta.assign(m.states.size(), std::vector<std::array<std::vector<CounterMove>, 2>>(m.alphabet.size() + 1));
    return m;
}

namespace {

template <typename T>
void sort_unique(std::vector<T>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename M>
void check_common(const M& m, std::vector<std::string>& out)
{
    const auto n = m.states.size();
    if (n == 0)
        out.push_back("machine has no states");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m.states[i] == m.states[j])
                out.push_back("duplicate state name '" + m.states[i] + "'");
    if (m.universal.size() != n)
        out.push_back("universal flags do not cover the state set");
    if (m.initial >= n)
        out.push_back("initial state out of range");
    if (m.accepting >= n)
        out.push_back("accepting state out of range");
    if (m.delta.size() != n)
        out.push_back("transition table does not cover the state set");
    for (const auto& row : m.delta)
        if (row.size() != m.alphabet.size() + 1)
            out.push_back("transition table is not total on the tape alphabet");
}

} // namespace

void normalize(AfaDescription& m)
{
    for (auto& row : m.delta)
        for (auto& set : row)
            sort_unique(set);
}

void normalize(A1caDescription& m)
{
    for (auto& row : m.delta)
        for (auto& cell : row)
            for (auto& set : cell)
                sort_unique(set);
}

std::vector<std::string> validate(const AfaDescription& m)
{
    std::vector<std::string> out;
    check_common(m, out);
    if (!out.empty())
        return out;
    for (std::size_t s = 0; s < m.states.size(); ++s)
        for (std::size_t i = 0; i <= m.alphabet.size(); ++i)
            for (auto t : m.delta[s][i])
                if (t >= m.states.size())
                    out.push_back("transition target out of range from '" + m.states[s] + "'");
    return out;
}

std::vector<std::string> validate(const A1caDescription& m)
{
    std::vector<std::string> out;
    check_common(m, out);
    if (!out.empty())
        return out;
    for (std::size_t s = 0; s < m.states.size(); ++s)
        for (std::size_t i = 0; i <= m.alphabet.size(); ++i)
            for (const auto& set : m.delta[s][i])
                for (const auto& mv : set) {
                    if (mv.target >= m.states.size())
                        out.push_back("transition target out of range from '" + m.states[s] + "'");
                    if (mv.update < -1 || mv.update > 1)
                        out.push_back("counter update " + std::to_string(mv.update) + " from '" + m.states[s]
                                      + "' is not in {-1,0,+1}");
                }
    return out;
}

namespace {

void require_valid(const std::vector<std::string>& violations)
{
    if (!violations.empty())
        throw ValidationError(violations);
}

std::uint64_t config_key(std::size_t level, std::size_t state, long counter)
{
    // level < 2^20, counter offset into 21 bits, state into the rest.
    return (static_cast<std::uint64_t>(state) << 41) | (static_cast<std::uint64_t>(level) << 21)
        | static_cast<std::uint64_t>(counter + (1L << 20));
}

} // namespace

Verdict afa_accepts(const AfaDescription& m, const Word& w)
{
    require_valid(validate(m));
    core::TapeView tape(m.alphabet, w);
    const std::size_t depth = tape.depth();

    // Bottom-up over levels; value[s] is the truth of (s, level).
    std::vector<char> value(m.states.size(), 0);
    value[m.accepting] = 1;
    std::vector<char> above(m.states.size(), 0);
    for (std::size_t level = depth; level-- > 0;) {
        const std::size_t sym = tape.symbol_at_level(level);
        for (std::size_t s = 0; s < m.states.size(); ++s) {
            const auto& succ = m.delta[s][sym];
            if (m.universal[s])
                above[s] = std::all_of(succ.begin(), succ.end(), [&](std::size_t t) { return value[t] != 0; });
            else
                above[s] = std::any_of(succ.begin(), succ.end(), [&](std::size_t t) { return value[t] != 0; });
        }
        std::swap(value, above);
    }
    return core::verdict_of(value[m.initial] != 0);
}

Verdict a1ca_accepts(const A1caDescription& m, const Word& w, CounterStats* stats)
{
    require_valid(validate(m));
    core::TapeView tape(m.alphabet, w);
    const std::size_t depth = tape.depth();
    std::unordered_map<std::uint64_t, bool> memo;

    std::function<bool(std::size_t, std::size_t, long)> eval = [&](std::size_t level, std::size_t s,
                                                                  long counter) -> bool {
        if (stats) {
            stats->min_counter = std::min(stats->min_counter, counter);
            stats->max_counter = std::max(stats->max_counter, counter);
            stats->max_excess = std::max(stats->max_excess, std::labs(counter) - static_cast<long>(level));
        }
        if (level == depth)
            return s == m.accepting;
        auto key = config_key(level, s, counter);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        if (stats)
            ++stats->configurations;
        const auto& succ = m.delta[s][tape.symbol_at_level(level)][counter == 0 ? zero : nonzero];
        bool result;
        if (m.universal[s]) {
            result = true;
            for (const auto& mv : succ)
                if (!eval(level + 1, mv.target, counter + mv.update)) {
                    result = false;
                    break;
                }
        } else {
            result = false;
            for (const auto& mv : succ)
                if (eval(level + 1, mv.target, counter + mv.update)) {
                    result = true;
                    break;
                }
        }
        memo.emplace(key, result);
        return result;
    };
    return core::verdict_of(eval(0, m.initial, 0));
}

namespace {

core::Connective connective_of(bool universal)
{
    return universal ? core::Connective::universal : core::Connective::existential;
}

std::string signed_update(int u)
{
    return u > 0 ? "+1" : (u < 0 ? "-1" : "0");
}

} // namespace

core::ComputationTree alt_tree(const AfaDescription& m, const Word& w)
{
    require_valid(validate(m));
    core::TapeView tape(m.alphabet, w);
    const std::size_t depth = tape.depth();
    core::ComputationTree tree;

    std::function<std::size_t(std::size_t, std::size_t)> build = [&](std::size_t level, std::size_t s) {
        if (level == depth)
            return tree.add_node(level, m.states[s], core::Connective::leaf, s == m.accepting);
        auto id = tree.add_node(level, m.states[s], connective_of(m.universal[s]));
        for (auto t : m.delta[s][tape.symbol_at_level(level)]) {
            auto child = build(level + 1, t);
            tree.add_edge(id, m.states[t], child);
        }
        tree.node(id).value = tree.evaluate_node(id);
        return id;
    };
    build(0, m.initial);
    return tree;
}

core::ComputationTree alt_tree(const A1caDescription& m, const Word& w)
{
    require_valid(validate(m));
    core::TapeView tape(m.alphabet, w);
    const std::size_t depth = tape.depth();
    core::ComputationTree tree;

    std::function<std::size_t(std::size_t, std::size_t, long)> build = [&](std::size_t level, std::size_t s,
                                                                           long counter) {
        std::string label = m.states[s] + " c=" + std::to_string(counter);
        if (level == depth)
            return tree.add_node(level, label, core::Connective::leaf, s == m.accepting);
        auto id = tree.add_node(level, label, connective_of(m.universal[s]));
        for (const auto& mv : m.delta[s][tape.symbol_at_level(level)][counter == 0 ? zero : nonzero]) {
            auto child = build(level + 1, mv.target, counter + mv.update);
            tree.add_edge(id, m.states[mv.target] + "," + signed_update(mv.update), child);
        }
        tree.node(id).value = tree.evaluate_node(id);
        return id;
    };
    build(0, m.initial, 0);
    return tree;
}

A1caDescription lift_to_a1ca(const AfaDescription& m)
{
    A1caDescription out = make_a1ca(m.alphabet, m.states);
    out.universal = m.universal;
    out.initial = m.initial;
    out.accepting = m.accepting;
    for (std::size_t s = 0; s < m.states.size(); ++s)
        for (std::size_t i = 0; i <= m.alphabet.size(); ++i)
            for (auto t : m.delta[s][i]) {
                out.delta[s][i][zero].push_back({t, 0});
                out.delta[s][i][nonzero].push_back({t, 0});
            }
    normalize(out);
    return out;
}

} // namespace rtalt::alt
