#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rtalt/core/error.hpp"
#include "rtalt/qfa/builders.hpp"
#include "rtalt/qfa/equivalence.hpp"
#include "support/oracles.hpp"
#include "support/random_machines.hpp"

using namespace rtalt;
using core::GaussianRational;
using core::Rational;
using core::Verdict;
using qfa::CMatrix;

namespace {

CMatrix rotation()
{
    return CMatrix::from_rows({{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}});
}

qfa::QfaDescription rotating(std::vector<bool> accept)
{
    auto m = qfa::make_qfa(core::Alphabet({U'a'}), {"q1", "q2"});
    m.ops[0] = {{rotation()}};
    m.accept = std::move(accept);
    return m;
}

core::Alphabet binary_or_unary(std::size_t bound)
{
    return bound <= 10 ? core::Alphabet({U'a', U'b'}) : core::Alphabet({U'a'});
}

} // namespace

TEST_CASE("superoperator examples")
{
    testing::Rng rng(51);
    auto rho = testing::random_density(rng, 3);
    CHECK(qfa::apply_superoperator({{CMatrix::identity(3)}}, rho) == rho);

    qfa::Superoperator reset{{CMatrix::unit(2, 0, 0), CMatrix::unit(2, 0, 1)}};
    CHECK(qfa::validate(reset, 2).empty());
    CHECK(qfa::apply_superoperator(reset, qfa::basis_density(2, 1)) == qfa::basis_density(2, 0));

    auto r = qfa::apply_superoperator({{rotation()}}, qfa::basis_density(2, 0));
    CHECK(r(0, 0) == GaussianRational(Rational(9, 25)));
    CHECK(r(1, 1) == GaussianRational(Rational(16, 25)));
    CHECK(r(0, 1) == GaussianRational(Rational(12, 25)));

    CHECK(!qfa::validate({{CMatrix::identity(2) * GaussianRational(Rational(1, 2))}}, 2).empty());
    CHECK(!qfa::validate({{CMatrix::identity(3)}}, 2).empty());
}

TEST_CASE("trace preservation and density invariants")
{
    testing::Rng rng(52);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 1 + rng.below(4);
        auto op = testing::random_superoperator(rng, n);
        REQUIRE(qfa::validate(op, n).empty());
        auto rho = testing::random_density(rng, n);
        REQUIRE(qfa::check_density(rho).empty());
        auto out = qfa::apply_superoperator(op, rho);
        CHECK(out.trace() == rho.trace());
        CHECK(qfa::check_density(out).empty());
        CHECK(out == testing::apply_naive(op, rho));
    }
}

TEST_CASE("acceptance probability examples")
{
    auto one = qfa::make_qfa(core::Alphabet({U'a'}), {"q1", "q2"});
    one.accept = {true, false};
    auto zero = one;
    zero.accept = {false, true};
    for (const auto& w : core::enumerate_words(one.alphabet, 3)) {
        CHECK(qfa::qfa_accept_probability(one, w) == 1);
        CHECK(qfa::qfa_accept_probability(zero, w) == 0);
        CHECK(qfa::nqfa_accepts(one, w) == Verdict::accept);
        CHECK(qfa::uqfa_accepts(one, w) == Verdict::accept);
        CHECK(qfa::nqfa_accepts(zero, w) == Verdict::reject);
        CHECK(qfa::uqfa_accepts(zero, w) == Verdict::reject);
    }
    auto m = rotating({false, true});
    CHECK(qfa::qfa_accept_probability(m, U"a") == Rational(16, 25));
    CHECK(qfa::nqfa_accepts(m, U"a") == Verdict::accept);
    CHECK(qfa::uqfa_accepts(m, U"a") == Verdict::reject);
}

TEST_CASE("probabilities are exact, bounded and one-sided")
{
    testing::Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        auto m = rng.coin(0.3) ? testing::random_empty_qfa(rng, 1 + rng.below(3), 2)
                               : testing::random_qfa(rng, 1 + rng.below(3), 2);
        REQUIRE(qfa::validate(m).empty());
        for (const auto& [w, f] : testing::brute_force_f(m, 3)) {
            CHECK(qfa::qfa_accept_probability(m, w) == f);
            CHECK(f >= 0);
            CHECK(f <= 1);
            CHECK((qfa::nqfa_accepts(m, w) == Verdict::reject) == (f == 0));
            CHECK((qfa::uqfa_accepts(m, w) == Verdict::accept) == (f == 1));
            CHECK(qfa::check_density(qfa::final_density(m, w)).empty());
        }
    }
}

TEST_CASE("equivalence examples")
{
    auto m = rotating({false, true});
    CHECK(qfa::qfa_equivalence(m, m).equivalent());
    auto all = qfa::make_qfa(core::Alphabet({U'a'}), {"q"});
    all.accept = {true};
    auto none = qfa::make_zero_qfa(core::Alphabet({U'a'}));
    auto r = qfa::qfa_equivalence(all, none);
    REQUIRE(!r.equivalent());
    CHECK(*r.counterexample == U"");
    CHECK_THROWS_AS(qfa::qfa_equivalence(m, qfa::make_zero_qfa(core::Alphabet({U'b'}))), Error);
    // A rotation by twice the angle differs first on "a".
    auto twice = m;
    twice.ops[0] = {{rotation() * rotation()}};
    r = qfa::qfa_equivalence(m, twice);
    REQUIRE(!r.equivalent());
    CHECK(*r.counterexample == U"a");
}

TEST_CASE("random equivalence pairs agree with exhaustive comparison")
{
    testing::Rng rng(54);
    for (int i = 0; i < 60; ++i) {
        const bool permuted = rng.coin();
        std::size_t n1 = 1 + rng.below(3);
        std::size_t n2 = permuted ? n1 : 1 + rng.below(3);
        const std::size_t total = n1 * n1 + n2 * n2;
        const std::size_t k = binary_or_unary(total).size();
        auto m1 = testing::random_qfa(rng, n1, k);
        auto m2 = permuted ? testing::permuted_qfa(rng, m1) : testing::random_qfa(rng, n2, k);
        REQUIRE(m2.dimension() == n2);
        auto r = qfa::qfa_equivalence(m1, m2);
        CHECK(r.basis_words.size() <= total);
        for (std::size_t j = 1; j < r.basis_words.size(); ++j) {
            CHECK(core::shortlex_less(m1.alphabet, r.basis_words[j - 1], r.basis_words[j]));
        }
        auto f1 = testing::brute_force_f(m1, total);
        auto f2 = testing::brute_force_f(m2, total);
        std::optional<core::Word> first;
        for (std::size_t j = 0; j < f1.size() && !first; ++j) {
            if (f1[j].second != f2[j].second) {
                first = f1[j].first;
            }
        }
        CHECK(r.counterexample == first);
        CHECK(qfa::qfa_equivalence(m1, m1).equivalent());
    }
}

TEST_CASE("emptiness")
{
    auto none = rotating({false, false});
    CHECK(qfa::nqfa_emptiness(none).is_empty());
    auto id = qfa::make_qfa(core::Alphabet({U'a'}), {"q1", "q2"});
    id.accept = {true, false};
    auto v = qfa::nqfa_emptiness(id);
    REQUIRE(!v.is_empty());
    CHECK(*v.witness == U"");
    auto m = rotating({false, true});
    v = qfa::nqfa_emptiness(m);
    REQUIRE(!v.is_empty());
    CHECK(*v.witness == U"a");

    testing::Rng rng(55);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = 1 + rng.below(4);
        std::size_t k = n <= 3 ? 2 : 1;
        auto q = rng.coin() ? testing::random_empty_qfa(rng, n, k) : testing::random_qfa(rng, n, k);
        auto e = qfa::nqfa_emptiness(q);
        auto f = testing::brute_force_f(q, n * n + 1);
        if (e.is_empty()) {
            for (const auto& [w, p] : f) {
                CHECK(p == 0);
            }
        }
        else {
            CHECK(e.witness->size() <= n * n + 1);
            CHECK(qfa::qfa_accept_probability(q, *e.witness) > 0);
            for (const auto& [w, p] : f) {
                if (w == *e.witness) {
                    break;
                }
                CHECK(p == 0);
            }
        }
    }
}

TEST_CASE("matrix helpers")
{
    CMatrix h = CMatrix::from_rows({{2, GaussianRational(1, 1)}, {GaussianRational(1, -1), 3}});
    auto f = qfa::ldl_psd(h);
    REQUIRE(f);
    CMatrix d(2, 2);
    d(0, 0) = f->diagonal[0];
    d(1, 1) = f->diagonal[1];
    CHECK(f->lower * d * f->lower.adjoint() == h);
    CHECK(!qfa::is_psd(CMatrix::from_rows({{1, 2}, {2, 1}})));
    CHECK(qfa::is_psd(CMatrix::from_rows({{1, 1}, {1, 1}})));
    for (const auto& r : {Rational(0), Rational(7), Rational(7, 9), Rational(2, 3), Rational(123, 17)}) {
        auto s = qfa::four_squares(r);
        CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3] == r);
    }
    std::vector<CMatrix> part{CMatrix::from_rows({{Rational(1, 2), 0}, {0, Rational(1, 3)}})};
    auto rest = qfa::completion_elements(part, 2);
    qfa::Superoperator op{part};
    op.elements.insert(op.elements.end(), rest.begin(), rest.end());
    CHECK(qfa::validate(op, 2).empty());
    CHECK_THROWS_AS(qfa::completion_elements({CMatrix::identity(2) * GaussianRational(2)}, 2), Error);
}

TEST_CASE("AQFA with an accepting existential state accepts everything")
{
    auto m = qfa::make_aqfa(core::Alphabet({U'a'}), {"s"}, {"q1", "q2"});
    m.classical_accept[0] = true;
    for (const auto& w : core::enumerate_words(m.alphabet, 4)) {
        CHECK(qfa::aqfa_accepts(m, w) == Verdict::accept);
    }
}

TEST_CASE("AQFA wrappers agree with NQFA and UQFA acceptance")
{
    testing::Rng rng(56);
    for (int i = 0; i < 60; ++i) {
        auto q = testing::random_qfa(rng, 1 + rng.below(3), 1 + rng.below(2));
        auto e = testing::aqfa_wrapper(q, false);
        auto u = testing::aqfa_wrapper(q, true);
        REQUIRE(qfa::validate(e).empty());
        for (const auto& w : core::enumerate_words(q.alphabet, 2)) {
            CHECK(qfa::aqfa_accepts(e, w) == qfa::nqfa_accepts(q, w));
            CHECK(qfa::aqfa_accepts(u, w) == qfa::uqfa_accepts(q, w));
        }
    }
}

TEST_CASE("every expansion conserves the squared norm")
{
    testing::Rng rng(57);
    std::size_t expansions = 0;
    std::size_t violations = 0;
    qfa::ExpansionObserver observe = [&](const qfa::ExpansionRecord& r) {
        Rational total = 0;
        for (const auto& b : r.branches) {
            total += qfa::norm2(b);
        }
        violations += total == qfa::norm2(r.psi) ? 0 : 1;
        ++expansions;
    };
    while (expansions < 300) {
        auto q = testing::random_qfa(rng, 1 + rng.below(3), 1);
        qfa::aqfa_accepts(testing::aqfa_wrapper(q, rng.coin()), core::Word(rng.below(3), U'a'), observe);
    }
    qfa::aqfa_accepts(qfa::build_usquare_aqfa(), U"aaaa", observe);
    CHECK(violations == 0);
}

TEST_CASE("USQUARE AQFA")
{
    auto m = qfa::build_usquare_aqfa();
    CHECK(qfa::validate(m).empty());
    for (const auto& row : m.ops) {
        for (const auto& op : row) {
            CHECK(qfa::validate(op, m.dimension()).empty());
        }
    }
    for (std::size_t k : {1, 4, 9, 16, 25}) {
        CHECK(qfa::aqfa_accepts(m, core::Word(k, U'a')) == Verdict::accept);
    }
    for (std::size_t k : {0, 2, 3, 5, 8, 12, 24}) {
        CHECK(qfa::aqfa_accepts(m, core::Word(k, U'a')) == Verdict::reject);
    }
}

TEST_CASE("USQUARE difference branch vanishes exactly at the matching pick")
{
    auto m = qfa::build_usquare_aqfa();
    const std::size_t fin = 6;
    for (std::size_t k : {4, 8, 9}) {
        CAPTURE(k);
        std::size_t finals = 0;
        std::size_t zeros = 0;
        qfa::ExpansionObserver observe = [&](const qfa::ExpansionRecord& r) {
            if (r.state != fin) {
                return;
            }
            ++finals;
            Rational i = r.psi[1].re / r.psi[0].re;
            bool zero = qfa::is_zero(r.branches[0]);
            CHECK(zero == (i * i == Rational(static_cast<long>(k))));
            zeros += zero ? 1 : 0;
        };
        qfa::aqfa_accepts(m, core::Word(k, U'a'), observe);
        CHECK(finals > 0);
        CHECK((zeros > 0) == (k != 8));
    }
}

TEST_CASE("AQFA trees")
{
    auto m = qfa::build_usquare_aqfa();
    auto t = qfa::aqfa_tree(m, U"a");
    CHECK(t.root_value());
    CHECK(t.is_consistent());
    for (auto len : t.path_lengths()) {
        CHECK(len == 6);
    }
}
