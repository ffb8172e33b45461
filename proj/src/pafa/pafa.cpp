#include "rtalt/pafa/pafa.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rtalt::pafa {

std::string GameShape::label_name(int label) const
{
    if (label == kUnlabeled) {
        return "";
    }
    auto i = static_cast<std::size_t>(label);
    if (i < gamma.size()) {
        return gamma[i];
    }
    if (i - gamma.size() < delta_priv.size()) {
        return delta_priv[i - gamma.size()];
    }
    return "?" + std::to_string(label);
}

std::optional<int> GameShape::label_index(const std::string& name) const
{
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] == name) {
            return static_cast<int>(i);
        }
    }
    for (std::size_t i = 0; i < delta_priv.size(); ++i) {
        if (delta_priv[i] == name) {
            return static_cast<int>(gamma.size() + i);
        }
    }
    return std::nullopt;
}

namespace {

std::optional<std::size_t> find_name(const std::vector<std::string>& names, const std::string& name)
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names.begin());
}

void init_shape(GameShape& g, Alphabet alphabet, std::vector<std::string> common, std::vector<std::string> priv,
                std::vector<std::string> gamma, std::vector<std::string> delta_priv)
{
    g.alphabet = std::move(alphabet);
    g.common_states = std::move(common);
    g.private_states = std::move(priv);
    g.gamma = std::move(gamma);
    g.delta_priv = std::move(delta_priv);
    g.universal.assign(g.common_states.size(), std::vector<bool>(g.private_states.size(), false));
    g.delta_e.assign(g.common_states.size(), {});
    g.accept = 0;
    g.reject = g.common_states.size() > 1 ? 1 : 0;
}

void sort_moves(std::vector<UniversalMove>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool has_dup(const std::vector<std::string>& v)
{
    std::set<std::string> s(v.begin(), v.end());
    return s.size() != v.size();
}

void validate_shape(const GameShape& g, std::vector<std::string>& out)
{
    const std::size_t nc = g.common_states.size();
    const std::size_t np = g.private_states.size();
    if (nc == 0) {
        out.emplace_back("no common states");
    }
    if (np == 0) {
        out.emplace_back("no private states");
    }
    if (has_dup(g.common_states)) {
        out.emplace_back("duplicate common state names");
    }
    if (has_dup(g.private_states)) {
        out.emplace_back("duplicate private state names");
    }
    if (g.gamma.size() < 2) {
        out.emplace_back("public game alphabet needs at least 2 labels");
    }
    if (g.delta_priv.size() < 2) {
        out.emplace_back("private game alphabet needs at least 2 labels");
    }
    std::vector<std::string> all = g.gamma;
    all.insert(all.end(), g.delta_priv.begin(), g.delta_priv.end());
    if (has_dup(all)) {
        out.emplace_back("game alphabets must be disjoint and duplicate-free");
    }
    if (std::find(all.begin(), all.end(), "") != all.end()) {
        out.emplace_back("game labels must be nonempty");
    }
    if (g.initial_common >= nc || g.initial_private >= np) {
        out.emplace_back("initial state out of range");
    }
    if (g.accept >= nc || g.reject >= nc) {
        out.emplace_back("accepting or rejecting common state out of range");
    }
    else if (g.accept == g.reject) {
        out.emplace_back("accepting and rejecting common states must differ");
    }
    if (g.universal.size() != nc) {
        out.emplace_back("universal table has wrong size");
    }
    else {
        for (const auto& row : g.universal) {
            if (row.size() != np) {
                out.emplace_back("universal table has wrong size");
                break;
            }
        }
    }
    if (g.delta_e.size() != nc) {
        out.emplace_back("existential transition table has wrong size");
        return;
    }
    for (std::size_t c = 0; c < nc; ++c) {
        const auto& moves = g.delta_e[c];
        for (const auto& mv : moves) {
            if (mv.common >= nc) {
                out.emplace_back("existential move of " + g.common_states[c] + " targets an unknown state");
            }
        }
        if (moves.empty()) {
            continue;
        }
        if (moves.size() == 1) {
            if (moves[0].label != kUnlabeled) {
                out.emplace_back("singleton existential move of " + g.common_states[c] + " must be unlabeled");
            }
            continue;
        }
        if (moves.size() != g.gamma.size()) {
            out.emplace_back("arity rule: existential successor set of " + g.common_states[c] + " has size " +
                             std::to_string(moves.size()) + ", expected 1 or |Γ| = " +
                             std::to_string(g.gamma.size()));
            continue;
        }
        std::set<int> labels;
        for (const auto& mv : moves) {
            if (!g.is_public(mv.label)) {
                out.emplace_back("existential move of " + g.common_states[c] + " has a non-Γ label");
            }
            labels.insert(mv.label);
        }
        if (labels.size() != moves.size()) {
            out.emplace_back("existential moves of " + g.common_states[c] + " repeat a label");
        }
    }
}

void validate_moves(const GameShape& g, const std::vector<UniversalMove>& moves, const std::string& where,
                    std::size_t priv, bool counter, std::vector<std::string>& out)
{
    const std::size_t arity = g.label_count();
    for (const auto& mv : moves) {
        if (mv.common >= g.common_states.size() || mv.priv >= g.private_states.size()) {
            out.emplace_back("universal move at " + where + " targets an unknown state");
        }
        if (counter ? (mv.update < -1 || mv.update > 1) : mv.update != 0) {
            out.emplace_back("universal move at " + where + " has an invalid counter update");
        }
        if (g.is_public(mv.label) && mv.priv != priv) {
            out.emplace_back("public move " + g.label_name(mv.label) + " at " + where +
                             " must not change the private component");
        }
    }
    if (moves.size() <= 1) {
        if (moves.size() == 1 && moves[0].label != kUnlabeled) {
            out.emplace_back("singleton universal move at " + where + " must be unlabeled");
        }
        return;
    }
    if (moves.size() != arity) {
        out.emplace_back("arity rule: universal successor set at " + where + " has size " +
                         std::to_string(moves.size()) + ", expected 1 or |Γ ∪ Δ| = " + std::to_string(arity));
        return;
    }
    std::set<int> labels;
    for (const auto& mv : moves) {
        if (mv.label < 0 || static_cast<std::size_t>(mv.label) >= arity) {
            out.emplace_back("universal move at " + where + " has an unknown label");
        }
        labels.insert(mv.label);
    }
    if (labels.size() != moves.size()) {
        out.emplace_back("universal moves at " + where + " repeat a label");
    }
}

template <class M, class Fn>
void validate_delta_u(const M& m, bool counter, std::vector<std::string>& out, Fn&& each)
{
    const std::size_t nc = m.common_states.size();
    const std::size_t np = m.private_states.size();
    const std::size_t ns = m.alphabet.size() + 1;
    bool shape_ok = m.delta_u.size() == nc;
    for (std::size_t c = 0; shape_ok && c < nc; ++c) {
        shape_ok = m.delta_u[c].size() == np;
        for (std::size_t p = 0; shape_ok && p < np; ++p) {
            shape_ok = m.delta_u[c][p].size() == ns;
        }
    }
    if (!shape_ok) {
        out.emplace_back("universal transition table has wrong size");
        return;
    }
    for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t p = 0; p < np; ++p) {
            for (std::size_t i = 0; i < ns; ++i) {
                std::string where = m.common_states[c] + "|" + m.private_states[p] + "|" + m.alphabet.key(i);
                each(m.delta_u[c][p][i], where, p, counter, out);
            }
        }
    }
}

} // namespace

std::optional<std::size_t> GameShape::common_index(const std::string& name) const
{
    return find_name(common_states, name);
}

std::optional<std::size_t> GameShape::private_index(const std::string& name) const
{
    return find_name(private_states, name);
}

PafaDescription make_pafa(Alphabet alphabet, std::vector<std::string> common, std::vector<std::string> priv,
                          std::vector<std::string> gamma, std::vector<std::string> delta_priv)
{
    PafaDescription m;
    init_shape(m, std::move(alphabet), std::move(common), std::move(priv), std::move(gamma), std::move(delta_priv));
    m.delta_u.assign(m.common_states.size(),
                     std::vector<std::vector<std::vector<UniversalMove>>>(
                         m.private_states.size(), std::vector<std::vector<UniversalMove>>(m.alphabet.size() + 1)));
    return m;
}

Pa1caDescription make_pa1ca(Alphabet alphabet, std::vector<std::string> common, std::vector<std::string> priv,
                            std::vector<std::string> gamma, std::vector<std::string> delta_priv)
{
    Pa1caDescription m;
    init_shape(m, std::move(alphabet), std::move(common), std::move(priv), std::move(gamma), std::move(delta_priv));
    m.delta_u.assign(m.common_states.size(),
                     std::vector<std::vector<std::array<std::vector<UniversalMove>, 2>>>(
                         m.private_states.size(),
                         std::vector<std::array<std::vector<UniversalMove>, 2>>(m.alphabet.size() + 1)));
    return m;
}

void normalize(PafaDescription& m)
{
    for (auto& e : m.delta_e) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    for (auto& row : m.delta_u) {
        for (auto& cell : row) {
            for (auto& moves : cell) {
                sort_moves(moves);
            }
        }
    }
}

void normalize(Pa1caDescription& m)
{
    for (auto& e : m.delta_e) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    for (auto& row : m.delta_u) {
        for (auto& cell : row) {
            for (auto& pair : cell) {
                sort_moves(pair[0]);
                sort_moves(pair[1]);
            }
        }
    }
}

std::vector<std::string> validate(const PafaDescription& m)
{
    std::vector<std::string> out;
    validate_shape(m, out);
    validate_delta_u(m, false, out, [&](const std::vector<UniversalMove>& moves, const std::string& where,
                                        std::size_t p, bool counter, std::vector<std::string>& o) {
        validate_moves(m, moves, where, p, counter, o);
    });
    return out;
}

std::vector<std::string> validate(const Pa1caDescription& m)
{
    std::vector<std::string> out;
    validate_shape(m, out);
    validate_delta_u(m, true, out, [&](const std::array<std::vector<UniversalMove>, 2>& pair,
                                       const std::string& where, std::size_t p, bool counter,
                                       std::vector<std::string>& o) {
        validate_moves(m, pair[0], where + "|zero", p, counter, o);
        validate_moves(m, pair[1], where + "|nonzero", p, counter, o);
    });
    return out;
}

Pa1caDescription lift_to_pa1ca(const PafaDescription& m)
{
    Pa1caDescription r;
    static_cast<GameShape&>(r) = static_cast<const GameShape&>(m);
    r.delta_u.resize(m.delta_u.size());
    for (std::size_t c = 0; c < m.delta_u.size(); ++c) {
        r.delta_u[c].resize(m.delta_u[c].size());
        for (std::size_t p = 0; p < m.delta_u[c].size(); ++p) {
            for (const auto& moves : m.delta_u[c][p]) {
                r.delta_u[c][p].push_back({moves, moves});
            }
        }
    }
    return r;
}

bool InformationSetLess::operator()(const InformationSet& a, const InformationSet& b) const
{
    if (a.common != b.common) {
        return a.common < b.common;
    }
    if (a.history.size() != b.history.size()) {
        return a.history.size() < b.history.size();
    }
    return a.history < b.history;
}

std::string to_string(const GameShape& m, const InformationSet& s)
{
    std::string out = "(" + (s.common < m.common_states.size() ? m.common_states[s.common] : "?") + ", ";
    if (s.history.empty()) {
        out += "ε";
    }
    for (std::size_t i = 0; i < s.history.size(); ++i) {
        out += (i ? " " : "") + m.label_name(s.history[i]);
    }
    return out + ")";
}

std::string to_string(const GameShape& m, const Strategy& f)
{
    std::ostringstream os;
    for (const auto& [set, label] : f) {
        os << to_string(m, set) << " -> " << m.label_name(label) << '\n';
    }
    return os.str();
}

} // namespace rtalt::pafa
