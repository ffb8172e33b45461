#include "rtalt/qfa/aqfa.hpp"

#include "rtalt/core/error.hpp"

namespace rtalt::qfa {

AqfaDescription make_aqfa(Alphabet alphabet, std::vector<std::string> classical, std::vector<std::string> basis)
{
    AqfaDescription m;
    m.alphabet = std::move(alphabet);
    m.classical_states = std::move(classical);
    m.basis = std::move(basis);
    const std::size_t ns = m.classical_states.size();
    m.universal.assign(ns, false);
    m.classical_accept.assign(ns, false);
    m.ops.assign(ns, std::vector<Superoperator>(m.alphabet.size() + 1,
                                                Superoperator{{CMatrix::identity(m.basis.size())}}));
    m.cdelta.resize(ns);
    for (std::size_t s = 0; s < ns; ++s) {
        m.cdelta[s].assign(m.alphabet.size() + 1, std::vector<std::size_t>{s});
    }
    return m;
}

std::vector<std::string> validate(const AqfaDescription& m)
{
    std::vector<std::string> out;
    const std::size_t ns = m.classical_states.size();
    const std::size_t n = m.basis.size();
    if (ns == 0) {
        out.emplace_back("no classical states");
    }
    if (n == 0) {
        out.emplace_back("empty basis");
    }
    if (!out.empty()) {
        return out;
    }
    if (m.universal.size() != ns || m.classical_accept.size() != ns) {
        out.emplace_back("classical state flags do not cover the classical states");
    }
    if (m.classical_initial >= ns) {
        out.emplace_back("initial classical state out of range");
    }
    if (m.initial >= n) {
        out.emplace_back("initial basis state out of range");
    }
    if (m.ops.size() != ns || m.cdelta.size() != ns) {
        out.emplace_back("superoperator or classical transition table has wrong size");
        return out;
    }
    for (std::size_t s = 0; s < ns; ++s) {
        if (m.ops[s].size() != m.alphabet.size() + 1 || m.cdelta[s].size() != m.alphabet.size() + 1) {
            out.emplace_back("tables of " + m.classical_states[s] + " must cover every symbol and the end-marker");
            continue;
        }
        for (std::size_t i = 0; i <= m.alphabet.size(); ++i) {
            const std::string where = m.classical_states[s] + "|" + m.alphabet.key(i);
            for (const auto& v : validate(m.ops[s][i], n)) {
                out.push_back(where + ": " + v);
            }
            if (m.cdelta[s][i].size() != m.ops[s][i].elements.size()) {
                out.emplace_back(where + ": classical transition must be defined on exactly the declared outcomes");
            }
            for (std::size_t t : m.cdelta[s][i]) {
                if (t >= ns) {
                    out.emplace_back(where + ": classical transition targets an unknown state");
                }
            }
        }
    }
    return out;
}

namespace {

class Evaluator {
public:
    Evaluator(const AqfaDescription& m, const Word& w, const ExpansionObserver& observer)
        : m_(m), tape_(m.alphabet, w), observer_(observer)
    {
        auto errs = validate(m);
        if (!errs.empty()) {
            throw ValidationError(errs);
        }
        // A state that stays in place through single norm-preserving steps
        // keeps its value to the bottom of the tree.
        absorbing_.assign(m.classical_states.size(), true);
        for (std::size_t s = 0; s < m.classical_states.size(); ++s) {
            for (std::size_t i = 0; i <= m.alphabet.size(); ++i) {
                if (m.ops[s][i].elements.size() != 1 || m.cdelta[s][i][0] != s) {
                    absorbing_[s] = false;
                }
            }
        }
    }

    bool eval(std::size_t level, std::size_t s, const CVector& psi)
    {
        if (level == tape_.depth() || (absorbing_[s] && !observer_)) {
            return m_.classical_accept[s];
        }
        const std::size_t sym = tape_.symbol_at_level(level);
        const auto& op = m_.ops[s][sym];
        const bool uni = m_.universal[s];
        if (observer_) {
            std::vector<CVector> branches;
            for (const auto& e : op.elements) {
                branches.push_back(e * psi);
            }
            observer_({level, s, psi, branches});
        }
        for (std::size_t k = 0; k < op.elements.size(); ++k) {
            CVector child = op.elements[k] * psi;
            if (is_zero(child)) {
                continue;
            }
            bool v = eval(level + 1, m_.cdelta[s][sym][k], child);
            if (v != uni) {
                return v;
            }
        }
        return uni;
    }

    std::size_t build(core::ComputationTree& tree, std::size_t level, std::size_t s, const CVector& psi)
    {
        const std::string label = m_.classical_states[s];
        if (level == tape_.depth()) {
            return tree.add_node(level, label, core::Connective::leaf, m_.classical_accept[s]);
        }
        const bool uni = m_.universal[s];
        std::size_t id =
            tree.add_node(level, label, uni ? core::Connective::universal : core::Connective::existential);
        const std::size_t sym = tape_.symbol_at_level(level);
        const auto& op = m_.ops[s][sym];
        for (std::size_t k = 0; k < op.elements.size(); ++k) {
            CVector child = op.elements[k] * psi;
            if (is_zero(child)) {
                continue;
            }
            std::size_t c = build(tree, level + 1, m_.cdelta[s][sym][k], child);
            tree.add_edge(id, std::to_string(k + 1), c);
        }
        return id;
    }

    CVector initial() const
    {
        CVector v(m_.dimension());
        v[m_.initial] = 1;
        return v;
    }

private:
    const AqfaDescription& m_;
    core::TapeView tape_;
    const ExpansionObserver& observer_;
    std::vector<bool> absorbing_;
};

} // namespace

Verdict aqfa_accepts(const AqfaDescription& m, const Word& w, const ExpansionObserver& observer)
{
    Evaluator ev(m, w, observer);
    return core::verdict_of(ev.eval(0, m.classical_initial, ev.initial()));
}

core::ComputationTree aqfa_tree(const AqfaDescription& m, const Word& w)
{
    ExpansionObserver none;
    Evaluator ev(m, w, none);
    core::ComputationTree tree;
    ev.build(tree, 0, m.classical_initial, ev.initial());
    tree.recompute_values();
    return tree;
}

} // namespace rtalt::qfa
