#include "rtalt/pafa/search.hpp"

#include "rtalt/core/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rtalt::pafa {

namespace {

using core::TapeView;

/// A node of the game tree about to move at `level`.
struct Position {
    std::size_t level;
    std::size_t common;
    std::size_t priv;
    long counter;

    auto operator<=>(const Position&) const = default;
};

/// Sorted, duplicate-free positions that enter one public history.
using EntrySet = std::vector<Position>;

void canonicalize(EntrySet& e)
{
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
}

/// Everything reachable from an entry set without a public move, which is
/// independent of the strategy.
struct Closure {
    bool failed = false;
    /// Children of public universal moves, by label.
    std::map<int, EntrySet> fixed;
    /// Existential nodes with a real choice, by common state.
    std::map<std::size_t, std::vector<Position>> choosing;
};

/// Solves the game one public history at a time.
///
/// All nodes sharing a public history h are reached from the positions that
/// entered h through moves that do not depend on the strategy; the choices
/// made at the information sets (c, h) only decide which child history each
/// of them enters. Distinct histories are distinct information sets, so the
/// subproblems of the child histories are independent and depend on nothing
/// but their entry sets, which serve as memo keys.
class Search {
public:
    Search(const Pa1caDescription& m, const Word& w, SearchStats* stats)
        : m_(m), tape_(m.alphabet, w), depth_(tape_.depth()), stats_(stats)
    {
        auto errs = validate(m);
        if (!errs.empty()) {
            throw ValidationError(errs);
        }
    }

    std::optional<Strategy> run()
    {
        EntrySet root{{0, m_.initial_common, m_.initial_private, 0}};
        if (!win(root)) {
            return std::nullopt;
        }
        Strategy f;
        std::vector<int> history;
        collect(root, history, f);
        return f;
    }

private:
    using Choice = std::vector<std::pair<std::size_t, int>>;

    Closure close(const EntrySet& entry)
    {
        if (stats_) {
            ++stats_->histories_expanded;
        }
        Closure out;
        std::set<Position> seen;
        std::vector<Position> work(entry.begin(), entry.end());
        while (!work.empty()) {
            Position x = work.back();
            work.pop_back();
            if (x.common == m_.accept || !seen.insert(x).second) {
                continue;
            }
            if (x.common == m_.reject || x.level == depth_) {
                out.failed = true;
                return out;
            }
            const std::size_t sym = tape_.symbol_at_level(x.level);
            if (m_.universal[x.common][x.priv]) {
                const auto& pair = m_.delta_u[x.common][x.priv][sym];
                if (stats_ && pair[0] != pair[1]) {
                    ++(sym == m_.alphabet.end_index() ? stats_->status_consults_at_end
                                                      : stats_->status_consults_on_symbols);
                }
                const auto& moves = pair[x.counter == 0 ? 0 : 1];
                for (const auto& mv : moves) {
                    Position y{x.level + 1, mv.common, mv.priv, x.counter + mv.update};
                    if (moves.size() > 1 && m_.is_public(mv.label)) {
                        if (y.common == m_.reject) {
                            out.failed = true;
                            return out;
                        }
                        if (y.common != m_.accept) {
                            out.fixed[mv.label].push_back(y);
                        }
                    }
                    else {
                        work.push_back(y);
                    }
                }
                continue;
            }
            const auto& moves = m_.delta_e[x.common];
            if (moves.empty()) {
                out.failed = true;
                return out;
            }
            if (moves.size() == 1) {
                work.push_back({x.level + 1, moves[0].common, x.priv, x.counter});
            }
            else {
                out.choosing[x.common].push_back(x);
            }
        }
        return out;
    }

    /// Child entry sets under one choice; nullopt if a choice hits q_r.
    std::optional<std::map<int, EntrySet>> children(const Closure& cl, const Choice& choice) const
    {
        auto out = cl.fixed;
        for (const auto& [c, label] : choice) {
            std::size_t target = 0;
            for (const auto& mv : m_.delta_e[c]) {
                if (mv.label == label) {
                    target = mv.common;
                }
            }
            if (target == m_.reject) {
                return std::nullopt;
            }
            if (target == m_.accept) {
                continue;
            }
            for (const auto& x : cl.choosing.at(c)) {
                out[label].push_back({x.level + 1, target, x.priv, x.counter});
            }
        }
        for (auto& [label, e] : out) {
            canonicalize(e);
        }
        return out;
    }

    bool win(const EntrySet& entry)
    {
        if (auto it = memo_.find(entry); it != memo_.end()) {
            if (stats_) {
                ++stats_->memo_hits;
            }
            return it->second.has_value();
        }
        std::optional<Choice> result;
        Closure cl = close(entry);
        if (!cl.failed) {
            result = first_winning_choice(cl);
        }
        memo_.emplace(entry, result);
        return result.has_value();
    }

    /// Tries choices in lexicographic order: common states ascending, labels
    /// in Γ order.
    std::optional<Choice> first_winning_choice(const Closure& cl)
    {
        std::vector<std::size_t> states;
        for (const auto& [c, nodes] : cl.choosing) {
            states.push_back(c);
        }
        std::vector<std::size_t> digit(states.size(), 0);
        while (true) {
            Choice choice;
            for (std::size_t i = 0; i < states.size(); ++i) {
                choice.emplace_back(states[i], m_.delta_e[states[i]][digit[i]].label);
            }
            if (stats_) {
                ++stats_->assignments_tried;
            }
            if (auto next = children(cl, choice)) {
                bool ok = true;
                for (const auto& [label, e] : *next) {
                    if (!e.empty() && !win(e)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    return choice;
                }
            }
            std::size_t i = states.size();
            while (i > 0 && ++digit[i - 1] == m_.delta_e[states[i - 1]].size()) {
                digit[--i] = 0;
            }
            if (i == 0) {
                return std::nullopt;
            }
        }
    }

    void collect(const EntrySet& entry, std::vector<int>& history, Strategy& f)
    {
        const Choice& choice = *memo_.at(entry);
        Closure cl = close(entry);
        for (const auto& [c, label] : choice) {
            f.emplace(InformationSet{c, history}, label);
        }
        const auto next = children(cl, choice);
        for (const auto& [label, e] : *next) {
            if (e.empty()) {
                continue;
            }
            history.push_back(label);
            collect(e, history, f);
            history.pop_back();
        }
    }

    const Pa1caDescription& m_;
    TapeView tape_;
    std::size_t depth_;
    SearchStats* stats_;
    std::map<EntrySet, std::optional<Choice>> memo_;
};

class Verifier {
public:
    Verifier(const Pa1caDescription& m, const Word& w, const Strategy& f) : m_(m), tape_(m.alphabet, w), f_(f)
    {
        auto errs = validate(m);
        if (!errs.empty()) {
            throw ValidationError(errs);
        }
    }

    VerifyResult run()
    {
        std::vector<int> history;
        bool ok = eval(0, m_.initial_common, m_.initial_private, 0, history);
        VerifyResult r;
        r.verdict = core::verdict_of(ok && !diagnostic_);
        r.diagnostic = diagnostic_;
        return r;
    }

private:
    bool eval(std::size_t level, std::size_t c, std::size_t p, long counter, std::vector<int>& history)
    {
        if (c == m_.accept) {
            return true;
        }
        if (c == m_.reject || level == tape_.depth()) {
            return false;
        }
        if (m_.universal[c][p]) {
            const auto& moves = m_.delta_u[c][p][tape_.symbol_at_level(level)][counter == 0 ? 0 : 1];
            for (const auto& mv : moves) {
                bool pub = moves.size() > 1 && m_.is_public(mv.label);
                if (pub) {
                    history.push_back(mv.label);
                }
                bool v = eval(level + 1, mv.common, mv.priv, counter + mv.update, history);
                if (pub) {
                    history.pop_back();
                }
                if (!v) {
                    return false;
                }
            }
            return true;
        }
        const auto& moves = m_.delta_e[c];
        if (moves.empty()) {
            return false;
        }
        if (moves.size() == 1) {
            return eval(level + 1, moves[0].common, p, counter, history);
        }
        auto it = f_.find(InformationSet{c, history});
        if (it == f_.end()) {
            if (!diagnostic_) {
                diagnostic_ = "strategy undefined at information set " + to_string(m_, InformationSet{c, history});
            }
            return false;
        }
        for (const auto& mv : moves) {
            if (mv.label == it->second) {
                history.push_back(mv.label);
                bool v = eval(level + 1, mv.common, p, counter, history);
                history.pop_back();
                return v;
            }
        }
        if (!diagnostic_) {
            diagnostic_ = "strategy picks a label not offered at " + to_string(m_, InformationSet{c, history});
        }
        return false;
    }

    const Pa1caDescription& m_;
    TapeView tape_;
    const Strategy& f_;
    std::optional<std::string> diagnostic_;
};

class TreeBuilder {
public:
    TreeBuilder(const Pa1caDescription& m, const Word& w, const Strategy& f) : m_(m), tape_(m.alphabet, w), f_(f) {}

    core::ComputationTree run()
    {
        std::vector<int> history;
        build(0, m_.initial_common, m_.initial_private, 0, history);
        tree_.recompute_values();
        return std::move(tree_);
    }

private:
    std::size_t build(std::size_t level, std::size_t c, std::size_t p, long counter, std::vector<int>& history)
    {
        std::string label = "(" + m_.common_states[c] + "," + m_.private_states[p] + ")";
        if (counter != 0) {
            label += " k=" + std::to_string(counter);
        }
        if (c == m_.accept || c == m_.reject || level == tape_.depth()) {
            return tree_.add_node(level, label, core::Connective::leaf, c == m_.accept);
        }
        const bool uni = m_.universal[c][p];
        std::size_t id =
            tree_.add_node(level, label, uni ? core::Connective::universal : core::Connective::existential);
        auto child = [&](const std::string& edge, std::size_t c2, std::size_t p2, long k2, int pub) {
            if (pub != kUnlabeled) {
                history.push_back(pub);
            }
            std::size_t ch = build(level + 1, c2, p2, k2, history);
            if (pub != kUnlabeled) {
                history.pop_back();
            }
            tree_.add_edge(id, edge, ch);
        };
        if (uni) {
            const auto& moves = m_.delta_u[c][p][tape_.symbol_at_level(level)][counter == 0 ? 0 : 1];
            for (const auto& mv : moves) {
                bool pub = moves.size() > 1 && m_.is_public(mv.label);
                child(m_.label_name(mv.label), mv.common, mv.priv, counter + mv.update, pub ? mv.label : kUnlabeled);
            }
            return id;
        }
        const auto& moves = m_.delta_e[c];
        if (moves.size() == 1) {
            child("", moves[0].common, p, counter, kUnlabeled);
            return id;
        }
        auto it = f_.find(InformationSet{c, history});
        for (const auto& mv : moves) {
            if (it != f_.end() && mv.label == it->second) {
                child(m_.label_name(mv.label), mv.common, p, counter, mv.label);
            }
        }
        return id;
    }

    const Pa1caDescription& m_;
    TapeView tape_;
    const Strategy& f_;
    core::ComputationTree tree_;
};

} // namespace

std::optional<Strategy> accepting_strategy(const Pa1caDescription& m, const Word& w, SearchStats* stats)
{
    return Search(m, w, stats).run();
}

std::optional<Strategy> accepting_strategy(const PafaDescription& m, const Word& w, SearchStats* stats)
{
    auto errs = validate(m);
    if (!errs.empty()) {
        throw ValidationError(errs);
    }
    return accepting_strategy(lift_to_pa1ca(m), w, stats);
}

Verdict pafa_accepts(const PafaDescription& m, const Word& w, SearchStats* stats)
{
    return core::verdict_of(accepting_strategy(m, w, stats).has_value());
}

Verdict pa1ca_accepts(const Pa1caDescription& m, const Word& w, SearchStats* stats)
{
    return core::verdict_of(accepting_strategy(m, w, stats).has_value());
}

VerifyResult verify_strategy(const Pa1caDescription& m, const Word& w, const Strategy& f)
{
    return Verifier(m, w, f).run();
}

VerifyResult verify_strategy(const PafaDescription& m, const Word& w, const Strategy& f)
{
    auto errs = validate(m);
    if (!errs.empty()) {
        throw ValidationError(errs);
    }
    return verify_strategy(lift_to_pa1ca(m), w, f);
}

core::ComputationTree strategy_tree(const Pa1caDescription& m, const Word& w, const Strategy& f)
{
    return TreeBuilder(m, w, f).run();
}

std::vector<int> first_play_moves(const Pa1caDescription& m, const Word& w, const Strategy& f)
{
    TapeView tape(m.alphabet, w);
    std::vector<int> history;
    std::vector<int> chosen;
    std::size_t c = m.initial_common;
    std::size_t p = m.initial_private;
    long counter = 0;
    for (std::size_t level = 0; level < tape.depth() && c != m.accept && c != m.reject; ++level) {
        if (m.universal[c][p]) {
            const auto& moves = m.delta_u[c][p][tape.symbol_at_level(level)][counter == 0 ? 0 : 1];
            if (moves.empty()) {
                break;
            }
            // Prefer a move that keeps the play alive.
            const UniversalMove* pick = &moves.front();
            for (const auto& mv : moves) {
                if (mv.common != m.accept && mv.common != m.reject) {
                    pick = &mv;
                    break;
                }
            }
            if (moves.size() > 1 && m.is_public(pick->label)) {
                history.push_back(pick->label);
            }
            c = pick->common;
            p = pick->priv;
            counter += pick->update;
            continue;
        }
        const auto& moves = m.delta_e[c];
        if (moves.empty()) {
            break;
        }
        if (moves.size() == 1) {
            c = moves[0].common;
            continue;
        }
        auto it = f.find(InformationSet{c, history});
        if (it == f.end()) {
            break;
        }
        chosen.push_back(it->second);
        history.push_back(it->second);
        for (const auto& mv : moves) {
            if (mv.label == it->second) {
                c = mv.common;
            }
        }
    }
    return chosen;
}

} // namespace rtalt::pafa
