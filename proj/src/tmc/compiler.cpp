#include "rtalt/tmc/compiler.hpp"
#include "rtalt/core/error.hpp"

#include <map>

namespace rtalt::tmc {

std::vector<CellContents> all_contents(const TmDescription& m)
{
    std::vector<CellContents> out;
    for (std::size_t x = 0; x < m.tape_alphabet.size(); ++x)
        out.push_back(CellContents::plain(x));
    for (std::size_t q = 0; q < m.states.size(); ++q)
        for (std::size_t x = 0; x < m.tape_alphabet.size(); ++x)
            out.push_back(CellContents::head(q, x));
    return out;
}

std::vector<GuessTriple> guess_table(const TmDescription& m)
{
    const auto contents = all_contents(m);
    std::vector<GuessTriple> out;
    for (const auto& l : contents)
        for (const auto& c : contents)
            for (const auto& r : contents)
                if (auto next = next_contents(m, l, c, r))
                    out.push_back(GuessTriple{{l, c, r}, *next});
    return out;
}

alt::A1caDescription compile_tm_to_a1ca(const TmDescription& m)
{
    if (auto v = validate(m); !v.empty())
        throw ValidationError(v);

    const auto contents = all_contents(m);
    const auto triples = guess_table(m);
    std::map<CellContents, std::size_t> contents_index;
    for (std::size_t i = 0; i < contents.size(); ++i)
        contents_index[contents[i]] = i;

    std::vector<std::string> names{"start", "start2", "acc1", "accept", "reject"};
    enum : std::size_t { kStart, kStart2, kAcc1, kAccept, kReject, kFixed };
    const std::size_t idle0 = kFixed;
    const std::size_t guess0 = idle0 + contents.size();
    const std::size_t hold0 = guess0 + contents.size();
    const std::size_t branch0 = hold0 + contents.size();
    for (const char* prefix : {"idle", "guess", "hold"})
        for (const auto& c : contents)
            names.push_back(std::string(prefix) + "[" + to_string(m, c) + "]");
    for (const auto& t : triples)
        names.push_back("branch[" + to_string(m, t.window[0]) + " " + to_string(m, t.window[1]) + " "
                        + to_string(m, t.window[2]) + "]");

    alt::A1caDescription a = alt::make_a1ca(core::Alphabet({kClockSymbol}), names);
    a.initial = kStart;
    a.accepting = kAccept;
    constexpr std::size_t u = 0;
    constexpr std::size_t end = 1;

    auto both = [&](std::size_t s, std::size_t sym, std::size_t target, int update) {
        a.delta[s][sym][alt::zero].push_back({target, update});
        a.delta[s][sym][alt::nonzero].push_back({target, update});
    };

    both(kStart, end, kStart2, 0);
    both(kStart, u, kReject, 0);
    both(kStart2, end, idle0 + contents_index.at(CellContents::head(m.halting, m.start_symbol)), 0);
    both(kStart2, u, kReject, 0);
    both(kAcc1, end, kAccept, 0);
    both(kAcc1, u, kReject, 0);

    const CellContents initial_head = CellContents::head(m.initial, m.start_symbol);
    const CellContents blank = CellContents::plain(m.blank);
    const CellContents virtual_left = CellContents::plain(m.start_symbol);

    for (std::size_t i = 0; i < contents.size(); ++i) {
        both(idle0 + i, u, guess0 + i, 0);
        if (contents[i] == initial_head)
            a.delta[idle0 + i][end][alt::zero].push_back({kAcc1, 0});
        if (contents[i] == blank)
            a.delta[idle0 + i][end][alt::nonzero].push_back({kAcc1, 0});
        both(guess0 + i, end, kReject, 0);
        both(hold0 + i, u, idle0 + i, 0);
        both(hold0 + i, end, kReject, 0);
    }

    for (std::size_t k = 0; k < triples.size(); ++k) {
        const auto& t = triples[k];
        const std::size_t branch = branch0 + k;
        const std::size_t guess = guess0 + contents_index.at(t.result);
        a.universal[branch] = true;
        a.delta[guess][u][alt::nonzero].push_back({branch, 0});
        if (t.window[0] == virtual_left)
            a.delta[guess][u][alt::zero].push_back({branch, 0});

        const std::size_t hl = hold0 + contents_index.at(t.window[0]);
        const std::size_t hm = hold0 + contents_index.at(t.window[1]);
        const std::size_t hr = hold0 + contents_index.at(t.window[2]);
        a.delta[branch][u][alt::nonzero] = {{hl, -1}, {hm, 0}, {hr, +1}};
        a.delta[branch][u][alt::zero] = {{hm, 0}, {hr, +1}};
        both(branch, end, kReject, 0);
    }
    alt::normalize(a);
    return a;
}

} // namespace rtalt::tmc
