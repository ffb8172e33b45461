#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rtalt/core/error.hpp"
#include "rtalt/pafa/builders.hpp"
#include "rtalt/pafa/search.hpp"
#include "support/oracles.hpp"
#include "support/random_machines.hpp"

#include <numeric>

using namespace rtalt;
using core::Verdict;
using pafa::kUnlabeled;

namespace {

core::Word ones(std::size_t m)
{
    return core::Word(m, U'1');
}

bool accepts(const pafa::PafaDescription& m, const core::Word& w)
{
    return pafa::pafa_accepts(m, w) == Verdict::accept;
}

bool accepts(const pafa::Pa1caDescription& m, const core::Word& w, pafa::SearchStats* stats = nullptr)
{
    return pafa::pa1ca_accepts(m, w, stats) == Verdict::accept;
}

std::string spell(const pafa::GameShape& m, const std::vector<int>& labels)
{
    std::string s;
    for (int l : labels) {
        s += m.label_name(l);
    }
    return s;
}

/// The exhaustive family: common states A (existential), B (universal),
/// acc, rej; private states p0, p1; one symbol. Each code picks one of five
/// existential sets for A and one of five universal sets per (B, p, symbol).
pafa::PafaDescription family_member(std::size_t code, bool start_universal)
{
    auto m = pafa::make_pafa(core::Alphabet({U'1'}), {"A", "B", "acc", "rej"}, {"p0", "p1"}, {"g0", "g1"},
                             {"d0", "d1"});
    enum { A, B, acc, rej };
    m.accept = acc;
    m.reject = rej;
    m.universal[B] = {true, true};
    m.initial_common = start_universal ? B : A;
    const std::vector<std::vector<pafa::ExistentialMove>> e_menu = {
        {}, {{kUnlabeled, B}}, {{0, B}, {1, rej}}, {{0, acc}, {1, B}}, {{0, B}, {1, A}}};
    m.delta_e[A] = e_menu[code % 5];
    code /= 5;
    for (std::size_t p = 0; p < 2; ++p) {
        const std::vector<std::vector<pafa::UniversalMove>> u_menu = {
            {},
            {{kUnlabeled, A, 1 - p, 0}},
            {{kUnlabeled, acc, p, 0}},
            {{0, A, p, 0}, {1, acc, p, 0}, {2, A, 0, 0}, {3, A, 1, 0}},
            {{0, B, p, 0}, {1, A, p, 0}, {2, rej, p, 0}, {3, A, 1 - p, 0}}};
        for (std::size_t sym = 0; sym < 2; ++sym) {
            m.delta_u[B][p][sym] = u_menu[code % 5];
            code /= 5;
        }
    }
    pafa::normalize(m);
    return m;
}

} // namespace

TEST_CASE("machines without existential branching evaluate as AND-OR trees")
{
    testing::Rng rng(41);
    int checked = 0;
    while (checked < 100) {
        auto m = testing::random_pafa(rng, 3, 2, 1);
        bool branching = false;
        for (const auto& e : m.delta_e) {
            branching = branching || e.size() > 1;
        }
        if (branching) {
            continue;
        }
        ++checked;
        core::TapeView tape(m.alphabet, U"aa");
        bool plain = testing::induced_value(m, tape, {0, m.initial_common, m.initial_private, {}}, {});
        CHECK(accepts(m, U"aa") == plain);
        CHECK(pafa::verify_strategy(m, U"aa", {}).verdict == pafa::pafa_accepts(m, U"aa"));
    }
}

TEST_CASE("random PAFAs match total-strategy enumeration")
{
    testing::Rng rng(42);
    int machines = 0;
    int attempts = 0;
    while (machines < 200) {
        ++attempts;
        auto m = testing::random_pafa(rng, 1 + rng.below(3), 1 + rng.below(2), 1 + rng.below(2));
        auto words = core::enumerate_words(m.alphabet, 3);
        std::vector<std::pair<core::Word, bool>> expected;
        bool complete = true;
        for (const auto& w : words) {
            auto r = testing::total_strategy_oracle(m, w);
            if (!r) {
                complete = false;
                break;
            }
            expected.emplace_back(w, *r);
        }
        if (!complete) {
            continue;
        }
        ++machines;
        for (const auto& [w, want] : expected) {
            CAPTURE(core::display(w));
            pafa::SearchStats stats;
            auto f = pafa::accepting_strategy(m, w, &stats);
            CHECK(f.has_value() == want);
            if (f) {
                auto v = pafa::verify_strategy(m, w, *f);
                CHECK(v.verdict == Verdict::accept);
                CHECK(!v.diagnostic);
            }
        }
    }
    MESSAGE("attempts: " << attempts);
}

TEST_CASE("exhaustive family matches the subtree definition")
{
    std::size_t cases = 0;
    std::size_t accepted = 0;
    for (bool start_universal : {false, true}) {
        for (std::size_t code = 0; code < 5 * 625; ++code) {
            auto m = family_member(code, start_universal);
            REQUIRE(pafa::validate(m).empty());
            for (const core::Word& w : {core::Word(U""), core::Word(U"1"), core::Word(U"11")}) {
                bool want = testing::subtree_oracle(m, w);
                CHECK(accepts(m, w) == want);
                accepted += want ? 1 : 0;
                ++cases;
            }
        }
    }
    CHECK(cases == 2 * 3125 * 3);
    // Both verdicts occur often enough to make the comparison meaningful.
    CHECK(accepted > cases / 10);
    CHECK(accepted < cases - cases / 10);
}

TEST_CASE("privacy relabeling leaves verdicts unchanged")
{
    testing::Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        std::size_t np = 1 + rng.below(3);
        auto m = testing::random_pafa(rng, 1 + rng.below(3), np, 1 + rng.below(2));
        std::vector<std::size_t> pperm(np);
        std::iota(pperm.begin(), pperm.end(), 0);
        std::shuffle(pperm.begin(), pperm.end(), rng.engine());
        std::vector<int> dperm = rng.coin() ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
        auto r = testing::relabel_private(m, pperm, dperm);
        CHECK(pafa::validate(r).empty());
        for (const auto& w : core::enumerate_words(m.alphabet, 2)) {
            CHECK(accepts(m, w) == accepts(r, w));
        }
    }
}

TEST_CASE("transitions out of the halting states are never used")
{
    testing::Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        auto m = testing::random_pafa(rng, 2, 2, 1);
        auto noisy = m;
        for (std::size_t c : {m.accept, m.reject}) {
            noisy.delta_e[c] = {{0, rng.below(2)}, {1, c}};
            for (std::size_t p = 0; p < 2; ++p) {
                noisy.universal[c][p] = rng.coin();
                for (auto& moves : noisy.delta_u[c][p]) {
                    moves = {{kUnlabeled, m.accept + m.reject - c, 1 - p, 0}};
                }
            }
        }
        REQUIRE(pafa::validate(noisy).empty());
        for (const auto& w : core::enumerate_words(m.alphabet, 3)) {
            CHECK(accepts(m, w) == accepts(noisy, w));
        }
    }
    // A path that accepts on the left end-marker accepts every word.
    auto m = pafa::make_pafa(core::Alphabet({U'a'}), {"s", "acc", "rej"}, {"p"}, {"g0", "g1"}, {"d0", "d1"});
    m.accept = 1;
    m.reject = 2;
    m.delta_e[0] = {{kUnlabeled, 1}};
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(accepts(m, core::Word(k, U'a')));
    }
}

TEST_CASE("inert counter behaves like the underlying PAFA")
{
    testing::Rng rng(45);
    for (int i = 0; i < 100; ++i) {
        auto m = testing::random_pafa(rng, 1 + rng.below(3), 1 + rng.below(2), 1 + rng.below(2));
        auto lifted = pafa::lift_to_pa1ca(m);
        CHECK(pafa::validate(lifted).empty());
        auto w = rng.pick(core::enumerate_words(m.alphabet, 3));
        CHECK(accepts(m, w) == accepts(lifted, w));
    }
}

TEST_CASE("invalid machines are refused")
{
    auto m = pafa::make_pafa(core::Alphabet({U'a'}), {"u", "acc", "rej"}, {"p", "r"}, {"g0", "g1"}, {"d0", "d1"});
    m.accept = 1;
    m.reject = 2;
    m.universal[0][0] = true;
    m.delta_u[0][0][0] = {{0, 1, 1, 0}, {1, 1, 0, 0}, {2, 1, 0, 0}, {3, 1, 0, 0}};
    CHECK_THROWS_AS(pafa::pafa_accepts(m, U"a"), ValidationError);
}

TEST_CASE("undefined strategy produces a diagnostic")
{
    auto m = pafa::build_twin();
    auto v = pafa::verify_strategy(m, U"01c01", {});
    CHECK(v.verdict == Verdict::reject);
    REQUIRE(v.diagnostic);
    CHECK(*v.diagnostic == "strategy undefined at information set (e, ε)");
}

TEST_CASE("UPOWER")
{
    auto m = pafa::build_upower();
    CHECK(pafa::validate(m).empty());
    for (std::size_t k : {1, 2, 4, 8, 16}) {
        CHECK(accepts(m, ones(k)));
    }
    for (std::size_t k : {0, 3, 5, 6, 12}) {
        CHECK(!accepts(m, ones(k)));
    }
}

TEST_CASE("UPOWER markers sit at the halving points")
{
    auto m = pafa::lift_to_pa1ca(pafa::build_upower());
    const int marker = *m.label_index("1+");
    for (std::size_t len : {2, 4, 8, 16}) {
        CAPTURE(len);
        auto f = pafa::accepting_strategy(m, ones(len));
        REQUIRE(f);
        auto moves = pafa::first_play_moves(m, ones(len), *f);
        std::set<std::size_t> got;
        for (std::size_t i = 0; i < moves.size(); ++i) {
            if (moves[i] == marker) {
                got.insert(i + 1);
            }
        }
        std::set<std::size_t> want;
        for (std::size_t i = 1; (std::size_t{1} << i) <= 2 * len; ++i) {
            std::size_t pos = ((std::size_t{1} << i) - 1) * len >> i;
            if (pos > 0 && pos < len) {
                want.insert(pos);
            }
        }
        CHECK(got == want);
    }
}

TEST_CASE("TWIN")
{
    auto m = pafa::build_twin();
    CHECK(pafa::validate(m).empty());
    for (const char32_t* w : {U"c", U"0c0", U"01c01", U"10c10"}) {
        CHECK(accepts(m, w));
    }
    for (const char32_t* w : {U"0c1", U"01c0", U"01c011", U"0101", U"0cc0"}) {
        CHECK(!accepts(m, w));
    }
    // The first branching, on the left end-marker, is private.
    const auto ui = *m.common_index("ui");
    const auto& first = m.delta_u[ui][m.initial_private][m.alphabet.end_index()];
    std::set<std::size_t> privs;
    for (const auto& mv : first) {
        if (!m.is_public(mv.label)) {
            privs.insert(mv.priv);
        }
        else {
            CHECK(mv.priv == m.initial_private);
        }
    }
    CHECK(privs.size() == 2);
}

TEST_CASE("TWIN witness spells the certificate and breaks under perturbation")
{
    auto m = pafa::build_twin();
    auto f = pafa::accepting_strategy(m, U"01c01");
    REQUIRE(f);
    CHECK(pafa::verify_strategy(m, U"01c01", *f).verdict == Verdict::accept);
    auto lifted = pafa::lift_to_pa1ca(m);
    CHECK(spell(m, pafa::first_play_moves(lifted, U"01c01", *f)) == "01c");
    for (const auto& [set, label] : *f) {
        for (int other = 0; other < static_cast<int>(m.gamma.size()); ++other) {
            if (other == label) {
                continue;
            }
            auto g = *f;
            g[set] = other;
            CHECK(pafa::verify_strategy(m, U"01c01", g).verdict == Verdict::reject);
        }
    }
    CHECK(!pafa::accepting_strategy(m, U"01c00"));
}

TEST_CASE("USQUARE with a blind counter")
{
    auto m = pafa::build_usquare_pa1ca();
    CHECK(pafa::validate(m).empty());
    for (std::size_t k : {0, 1, 4, 9, 16}) {
        CAPTURE(k);
        pafa::SearchStats stats;
        CHECK(accepts(m, ones(k), &stats));
        CHECK(stats.status_consults_on_symbols == 0);
    }
    for (std::size_t k : {2, 3, 5, 8, 12}) {
        CAPTURE(k);
        pafa::SearchStats stats;
        CHECK(!accepts(m, ones(k), &stats));
        CHECK(stats.status_consults_on_symbols == 0);
    }
}

TEST_CASE("USQUARE witnesses spell the segments")
{
    auto m = pafa::build_usquare_pa1ca();
    auto f = pafa::accepting_strategy(m, ones(9));
    REQUIRE(f);
    CHECK(pafa::verify_strategy(m, ones(9), *f).verdict == Verdict::accept);
    CHECK(spell(m, pafa::first_play_moves(m, ones(9), *f)) == "11#11#11#");
    f = pafa::accepting_strategy(m, ones(4));
    REQUIRE(f);
    CHECK(spell(m, pafa::first_play_moves(m, ones(4), *f)) == "1#1#");
}

TEST_CASE("strategy trees")
{
    auto m = pafa::lift_to_pa1ca(pafa::build_twin());
    auto f = pafa::accepting_strategy(m, U"0c0");
    REQUIRE(f);
    auto t = pafa::strategy_tree(m, U"0c0", *f);
    CHECK(t.root_value());
    CHECK(t.is_consistent());
    CHECK(core::export_tree_dot(t).find("digraph") == 0);
}

TEST_CASE("information sets order and print")
{
    auto m = pafa::build_twin();
    pafa::InformationSetLess less;
    CHECK(less({2, {}}, {2, {0}}));
    CHECK(less({2, {2}}, {2, {0, 0}}));
    CHECK(less({2, {0, 1}}, {2, {1, 0}}));
    CHECK(less({1, {0, 0}}, {2, {}}));
    CHECK(pafa::to_string(m, pafa::InformationSet{2, {0, 1}}) == "(e, 0 1)");
}
