#include "rtalt/tmc/turing.hpp"
#include "rtalt/core/error.hpp"

#include <algorithm>

namespace rtalt::tmc {

namespace {

std::size_t find_name(const std::vector<std::string>& names, const std::string& name, const char* what)
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        throw SchemaError(std::string("unknown ") + what + " '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
}

} // namespace

std::size_t TmDescription::state_index(const std::string& name) const
{
    return find_name(states, name, "state");
}

std::size_t TmDescription::symbol_index(const std::string& name) const
{
    return find_name(tape_alphabet, name, "tape symbol");
}

TmDescription make_tm(std::vector<std::string> states, std::vector<std::string> tape_alphabet,
                      const std::string& initial, const std::string& halting, const std::string& start_symbol,
                      const std::string& blank)
{
    TmDescription m;
    m.states = std::move(states);
    m.tape_alphabet = std::move(tape_alphabet);
    m.initial = m.state_index(initial);
    m.halting = m.state_index(halting);
    m.start_symbol = m.symbol_index(start_symbol);
    m.blank = m.symbol_index(blank);
    m.delta.assign(m.states.size(), std::vector<std::optional<TmTransition>>(m.tape_alphabet.size()));
    return m;
}

void add_transition(TmDescription& m, const std::string& q, const std::string& x, const std::string& q2,
                    const std::string& y, Direction d)
{
    m.delta.at(m.state_index(q)).at(m.symbol_index(x)) = TmTransition{m.state_index(q2), m.symbol_index(y), d};
}

std::vector<std::string> validate(const TmDescription& m)
{
    std::vector<std::string> out;
    const auto nq = m.states.size();
    const auto nx = m.tape_alphabet.size();
    if (nq == 0 || nx < 2)
        out.push_back("a machine needs states and at least the start and blank symbols");
    if (m.initial >= nq || m.halting >= nq)
        out.push_back("initial or halting state out of range");
    if (m.start_symbol >= nx || m.blank >= nx)
        out.push_back("start or blank symbol out of range");
    if (m.start_symbol == m.blank)
        out.push_back("start symbol and blank must differ");
    if (m.delta.size() != nq)
        out.push_back("transition table does not cover the state set");
    if (!out.empty())
        return out;
    for (std::size_t q = 0; q < nq; ++q) {
        if (m.delta[q].size() != nx) {
            out.push_back("transition row of '" + m.states[q] + "' does not cover the tape alphabet");
            continue;
        }
        for (std::size_t x = 0; x < nx; ++x) {
            const auto& t = m.delta[q][x];
            if (!t)
                continue;
            const std::string where = "(" + m.states[q] + ", " + m.tape_alphabet[x] + ")";
            if (t->state >= nq || t->write >= nx) {
                out.push_back("transition " + where + " out of range");
                continue;
            }
            if (q == m.halting)
                out.push_back("halting state has an outgoing transition " + where);
            if (x == m.start_symbol && t->write != m.start_symbol)
                out.push_back("transition " + where + " overwrites the start symbol");
            if (x == m.start_symbol && t->move == Direction::left)
                out.push_back("transition " + where + " moves left of the start symbol");
            if (x != m.start_symbol && t->write == m.start_symbol)
                out.push_back("transition " + where + " writes the start symbol outside cell 0");
        }
    }
    return out;
}

namespace {

struct Simulator {
    const TmDescription& m;
    std::vector<std::size_t> tape;
    std::size_t head = 0;
    std::size_t state;

    explicit Simulator(const TmDescription& machine) : m(machine), tape{machine.start_symbol}, state(machine.initial)
    {
    }

    std::size_t scanned() const { return head < tape.size() ? tape[head] : m.blank; }

    // Performs one step; returns false if no transition applies.
    bool step()
    {
        const auto& t = m.transition(state, scanned());
        if (!t)
            return false;
        if (head >= tape.size())
            tape.resize(head + 1, m.blank);
        tape[head] = t->write;
        if (t->move == Direction::left) {
            if (head == 0)
                throw Error("machine moves left of cell 0");
            --head;
        } else {
            ++head;
        }
        state = t->state;
        return true;
    }
};

void require_valid(const TmDescription& m)
{
    auto v = validate(m);
    if (!v.empty())
        throw ValidationError(v);
}

} // namespace

TmRunResult tm_run(const TmDescription& m, std::size_t max_steps)
{
    require_valid(m);
    Simulator sim(m);
    TmRunResult r;
    for (std::size_t t = 0;; ++t) {
        if (sim.state == m.halting) {
            r.halted = true;
            r.steps = t;
            break;
        }
        if (t == max_steps) {
            r.steps = t;
            break;
        }
        if (!sim.step())
            throw Error("undefined transition for (" + m.states[sim.state] + ", " + m.tape_alphabet[sim.scanned()]
                        + ") at step " + std::to_string(t));
    }
    r.head = sim.head;
    r.final_state = sim.state;
    r.tape = sim.tape;
    return r;
}

std::vector<std::string> tm_check_assumptions(const TmDescription& m, std::size_t max_steps)
{
    auto out = validate(m);
    if (!out.empty())
        return out;
    Simulator sim(m);
    for (std::size_t t = 0; t < max_steps; ++t) {
        if (sim.state == m.halting) {
            if (sim.head != 0)
                out.push_back("halt away from cell 0: halts at step " + std::to_string(t) + " on cell "
                              + std::to_string(sim.head));
            return out;
        }
        const std::size_t x = sim.scanned();
        const auto& tr = m.transition(sim.state, x);
        if (!tr) {
            out.push_back("halts in state '" + m.states[sim.state] + "' other than the halting state at step "
                          + std::to_string(t));
            return out;
        }
        if (x == m.start_symbol && tr->write != m.start_symbol)
            out.push_back("overwrites the start symbol at step " + std::to_string(t + 1));
        if (x == m.start_symbol && tr->move == Direction::left) {
            out.push_back("moves left of the start symbol at step " + std::to_string(t + 1));
            return out;
        }
        sim.step();
        if (sim.head == 0 && sim.state != m.halting)
            out.push_back("early return to C=0 at step " + std::to_string(t + 1));
    }
    if (sim.state == m.halting && sim.head != 0)
        out.push_back("halt away from cell 0: halts at step " + std::to_string(max_steps) + " on cell "
                      + std::to_string(sim.head));
    return out;
}

std::string to_string(const TmDescription& m, const CellContents& c)
{
    if (c.has_head())
        return "(" + m.states.at(*c.state) + "," + m.tape_alphabet.at(c.symbol) + ")";
    return m.tape_alphabet.at(c.symbol);
}

std::optional<CellContents> next_contents(const TmDescription& m, const CellContents& left,
                                          const CellContents& middle, const CellContents& right)
{
    const int heads = int(left.has_head()) + int(middle.has_head()) + int(right.has_head());
    if (heads > 1)
        return std::nullopt;
    if (heads == 0)
        return middle;
    const CellContents& h = left.has_head() ? left : (middle.has_head() ? middle : right);
    const auto& t = m.transition(*h.state, h.symbol);
    if (!t)
        return std::nullopt;
    if (middle.has_head())
        return CellContents::plain(t->write);
    if (left.has_head() && t->move == Direction::right)
        return CellContents::head(t->state, middle.symbol);
    if (right.has_head() && t->move == Direction::left)
        return CellContents::head(t->state, middle.symbol);
    return middle;
}

std::vector<CellContents> configuration_at(const TmDescription& m, std::size_t steps, std::size_t width)
{
    require_valid(m);
    Simulator sim(m);
    for (std::size_t t = 0; t < steps; ++t)
        if (sim.state == m.halting || !sim.step())
            throw Error("run does not reach step " + std::to_string(steps));
    std::vector<CellContents> out;
    for (std::size_t c = 0; c < width; ++c) {
        std::size_t x = c < sim.tape.size() ? sim.tape[c] : m.blank;
        out.push_back(c == sim.head ? CellContents::head(sim.state, x) : CellContents::plain(x));
    }
    return out;
}

} // namespace rtalt::tmc
