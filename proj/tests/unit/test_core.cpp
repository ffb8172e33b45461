#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rtalt/core/error.hpp"
#include "rtalt/core/machine_file.hpp"
#include "rtalt/core/tree.hpp"
#include "rtalt/pafa/builders.hpp"
#include "rtalt/qfa/builders.hpp"
#include "support/oracles.hpp"
#include "support/random_machines.hpp"

#include "json.hpp"

using namespace rtalt;
using core::Rational;

namespace {

core::MachineDescription wrap(auto m)
{
    return core::MachineDescription{std::move(m)};
}

std::vector<core::MachineDescription> builtins()
{
    return {wrap(pafa::build_upower()), wrap(pafa::build_twin()), wrap(pafa::build_usquare_pa1ca()),
            wrap(qfa::build_usquare_aqfa())};
}

void check_round_trip(const core::MachineDescription& m)
{
    std::string text = core::serialize_machine(m);
    auto back = core::parse_machine(text);
    CHECK(back == m);
    CHECK(core::serialize_machine(back) == text);
}

} // namespace

TEST_CASE("rationals parse to canonical form")
{
    CHECK(core::parse_rational("2/4") == Rational(1, 2));
    CHECK(core::format_rational(core::parse_rational("2/4")) == "1/2");
    CHECK(core::format_rational(core::parse_rational("-6/8")) == "-3/4");
    CHECK_THROWS_AS(core::parse_rational("-6/-8"), SyntaxError);
    CHECK(core::format_rational(core::parse_rational("3")) == "3/1");
    CHECK(core::format_rational(Rational(0)) == "0/1");
    CHECK_THROWS_AS(core::parse_rational("1/0"), SyntaxError);
    CHECK_THROWS_AS(core::parse_rational("abc"), SyntaxError);
    CHECK_THROWS_AS(core::parse_rational("sqrt(2)"), AlgebraicAmplitudeError);
}

TEST_CASE("non-canonical rationals in files are normalized")
{
    std::string text = R"({"kind":"qfa","alphabet":["a"],"machine":{"basis":["q1"],"initial":"q1",
        "accept":["q1"],"ops":{"a":[[[["2/2","0/4"]]]]}}})";
    auto m = core::parse_machine(text);
    auto out = core::serialize_machine(m);
    CHECK(out.find("\"2/2\"") == std::string::npos);
    CHECK(out.find("\"0/4\"") == std::string::npos);
}

TEST_CASE("round trip on every built-in machine")
{
    for (const auto& m : builtins()) {
        CAPTURE(core::kind_name(m.kind()));
        CHECK(core::validate(m).empty());
        check_round_trip(m);
        CHECK(core::serialize_machine(m) == core::serialize_machine(m));
    }
}

TEST_CASE("round trip on random machines of every kind")
{
    testing::Rng rng(101);
    for (int i = 0; i < 40; ++i) {
        check_round_trip(wrap(testing::random_afa(rng, 1 + rng.below(3), 1 + rng.below(2))));
        check_round_trip(wrap(testing::random_a1ca(rng, 1 + rng.below(3), 1 + rng.below(2))));
        auto p = testing::random_pafa(rng, 1 + rng.below(3), 1 + rng.below(2), 1 + rng.below(2));
        check_round_trip(wrap(p));
        auto pc = pafa::lift_to_pa1ca(p);
        for (auto& byc : pc.delta_u) {
            for (auto& byp : byc) {
                for (auto& cell : byp) {
                    for (auto& mv : cell[0]) {
                        mv.update = static_cast<int>(rng.below(3)) - 1;
                    }
                }
            }
        }
        pafa::normalize(pc);
        check_round_trip(wrap(pc));
        auto q = testing::random_qfa(rng, 1 + rng.below(3), 1 + rng.below(2));
        check_round_trip(wrap(q));
        check_round_trip(wrap(testing::aqfa_wrapper(q, rng.coin())));
    }
}

TEST_CASE("QFA amplitudes serialize as canonical pairs")
{
    auto m = qfa::make_qfa(core::Alphabet({U'a'}), {"q1", "q2"});
    m.ops[0] = {{qfa::CMatrix::from_rows({{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}})}};
    std::string text = core::serialize_machine(wrap(m));
    auto j = nlohmann::json::parse(text);
    CHECK(j["machine"]["ops"]["a"][0][0][0] == nlohmann::json::array({"3/5", "0/1"}));
    CHECK(j["format"] == 1);
}

TEST_CASE("serialize(build_upower()) parses back to an equal description")
{
    auto m = wrap(pafa::build_upower());
    CHECK(core::parse_machine(core::serialize_machine(m)) == m);
}

TEST_CASE("parse errors are classified")
{
    CHECK_THROWS_AS(core::parse_machine("{"), SyntaxError);
    CHECK_THROWS_AS(core::parse_machine(R"({"kind":"afa","alphabet":["a"]})"), SchemaError);
    CHECK_THROWS_AS(core::parse_machine(R"({"kind":"xyz","alphabet":["a"],"machine":{}})"), SchemaError);
    std::string afa = R"({"kind":"afa","alphabet":["a"],"machine":{"states":["s"],"universal":[],
        "initial":"s","accepting":"s","delta":{"s":{"a":["s"],"@end":["s"]}},"extra":1}})";
    CHECK_THROWS_AS(core::parse_machine(afa), SchemaError);
    std::string amp = R"j({"kind":"qfa","alphabet":["a"],"machine":{"basis":["q1"],"initial":"q1",
        "accept":["q1"],"ops":{"a":[[[["sqrt(2)","0/1"]]]]}}})j";
    CHECK_THROWS_AS(core::parse_machine(amp), AlgebraicAmplitudeError);
}

TEST_CASE("existential set of size 2 with three public labels violates the arity rule")
{
    auto m = pafa::make_pafa(core::Alphabet({U'a'}), {"e", "acc", "rej"}, {"p"}, {"g1", "g2", "g3"}, {"d1", "d2"});
    m.accept = 1;
    m.reject = 2;
    m.delta_e[0] = {{0, 1}, {1, 2}};
    std::string text = core::serialize_machine(wrap(m));
    try {
        core::parse_machine(text);
        FAIL("expected a validation error");
    }
    catch (const ValidationError& e) {
        REQUIRE(!e.violations().empty());
        CHECK(e.violations()[0].rfind("arity rule", 0) == 0);
    }
    CHECK_NOTHROW(core::parse_machine_unchecked(text));
}

TEST_CASE("validator examples")
{
    CHECK(pafa::validate(pafa::build_upower()).empty());

    auto q = qfa::make_qfa(core::Alphabet({U'a'}), {"q1", "q2"});
    q.ops[0] = {{qfa::CMatrix::identity(2) * core::GaussianRational(Rational(1, 2))}};
    CHECK(!qfa::validate(q).empty());

    auto p = pafa::make_pafa(core::Alphabet({U'a'}), {"u", "acc", "rej"}, {"p", "r"}, {"g1", "g2"}, {"d1", "d2"});
    p.accept = 1;
    p.reject = 2;
    p.universal[0][0] = true;
    p.delta_u[0][0][0] = {{0, 1, 1, 0}, {1, 1, 0, 0}, {2, 1, 0, 0}, {3, 1, 0, 0}};
    auto errs = pafa::validate(p);
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].find("must not change the private component") != std::string::npos);
}

TEST_CASE("enumerate_words")
{
    core::Alphabet a({U'a'});
    CHECK(core::enumerate_words(a, 2) == std::vector<core::Word>{U"", U"a", U"aa"});
    core::Alphabet b({U'0', U'1'});
    CHECK(core::enumerate_words(b, 1) == std::vector<core::Word>{U"", U"0", U"1"});
    auto w3 = core::enumerate_words(b, 3);
    CHECK(w3.size() == 15);
    CHECK(w3[3] == U"00");
    CHECK(w3.back() == U"111");
    core::Alphabet c({U'x', U'y', U'z'});
    for (std::size_t len = 0; len <= 5; ++len) {
        auto words = core::enumerate_words(c, len);
        std::size_t expect = 0;
        for (std::size_t i = 0, p = 1; i <= len; ++i, p *= 3) {
            expect += p;
        }
        CHECK(words.size() == expect);
        for (std::size_t i = 1; i < words.size(); ++i) {
            CHECK(core::shortlex_less(c, words[i - 1], words[i]));
            CHECK(core::shortlex_successor(c, words[i - 1]) == words[i]);
        }
    }
}

TEST_CASE("tape view maps two levels to each position")
{
    core::Alphabet a({U'0', U'1'});
    for (const auto& w : core::enumerate_words(a, 4)) {
        core::TapeView t(a, w);
        const std::size_t n = w.size();
        CHECK(t.depth() == 2 * n + 4);
        CHECK(t.is_end_at_level(0));
        CHECK(t.is_end_at_level(1));
        CHECK(t.is_end_at_level(2 * n + 2));
        CHECK(t.is_end_at_level(2 * n + 3));
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(t.symbol_at_level(2 * k + 2) == *a.index_of(w[k]));
            CHECK(t.symbol_at_level(2 * k + 3) == *a.index_of(w[k]));
            CHECK(core::TapeView::position_at_level(2 * k + 2) == k + 2);
        }
    }
    CHECK_THROWS_AS(core::TapeView(a, U"012"), SymbolError);
}

TEST_CASE("utf8 conversion")
{
    CHECK(core::to_utf8(U"¢a") == "\xC2\xA2" "a");
    CHECK(core::from_utf8("\xC2\xA2" "a") == U"¢a");
    CHECK(core::display(U"") == "ε");
    CHECK_THROWS_AS(core::from_utf8("\xFF"), SyntaxError);
    CHECK_THROWS_AS(core::Alphabet({U'a', U'a'}), SchemaError);
    CHECK_THROWS_AS(core::Alphabet({core::kEndMarker}), SchemaError);
}

TEST_CASE("tree evaluation and DOT export")
{
    core::ComputationTree leaf;
    leaf.add_node(0, "s", core::Connective::leaf, true);
    std::string dot = core::export_tree_dot(leaf);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("->") == std::string::npos);

    core::ComputationTree t;
    auto r = t.add_node(0, "root", core::Connective::existential);
    auto a = t.add_node(1, "a", core::Connective::leaf, false);
    auto b = t.add_node(1, "b", core::Connective::leaf, true);
    t.add_edge(r, "x", a);
    t.add_edge(r, "y", b);
    t.recompute_values();
    CHECK(t.root_value());
    CHECK(t.is_consistent());
    dot = core::export_tree_dot(t);
    std::size_t edges = 0;
    for (std::size_t i = dot.find("->"); i != std::string::npos; i = dot.find("->", i + 1)) {
        ++edges;
    }
    CHECK(edges == 2);
    CHECK(dot.find("label=\"x\"") != std::string::npos);
    CHECK(dot.find("label=\"y\"") != std::string::npos);

    t.node(r).value = false;
    CHECK(!t.is_consistent());

    core::ComputationTree u;
    u.add_node(0, "u", core::Connective::universal);
    u.add_node(0, "e", core::Connective::existential);
    u.recompute_values();
    CHECK(u.node(0).value);
    CHECK(!u.node(1).value);
}

TEST_CASE("recomputing stored values reproduces them")
{
    testing::Rng rng(7);
    core::Alphabet a({U'a', U'b'});
    for (int i = 0; i < 50; ++i) {
        auto m = testing::random_afa(rng, 3, 2);
        for (const auto& w : core::enumerate_words(a, 2)) {
            auto t = alt::alt_tree(m, w);
            CHECK(t.is_consistent());
            auto copy = t;
            copy.recompute_values();
            for (std::size_t k = 0; k < t.size(); ++k) {
                CHECK(copy.node(k).value == t.node(k).value);
            }
        }
    }
}
