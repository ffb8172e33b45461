#include "rtalt/pafa/builders.hpp"

#include <cassert>

namespace rtalt::pafa {

namespace {

template <class M>
struct Names {
    const M& m;
    std::size_t c(const char* n) const { return *m.common_index(n); }
    std::size_t p(const char* n) const { return *m.private_index(n); }
    int l(const char* n) const { return *m.label_index(n); }
};

} // namespace

PafaDescription build_upower()
{
    auto m = make_pafa(Alphabet({U'1'}),
                       {"init", "e", "u0", "u1", "e2", "u2", "d1", "d2", "d3", "d4", "acc", "rej"},
                       {"alpha", "beta"}, {"1", "1+"}, {"x", "y"});
    Names<PafaDescription> n{m};
    m.accept = n.c("acc");
    m.reject = n.c("rej");
    m.initial_common = n.c("init");
    m.initial_private = n.p("alpha");
    for (const char* u : {"init", "u0", "u1", "u2", "d2", "d4"}) {
        for (std::size_t p = 0; p < m.private_states.size(); ++p) {
            m.universal[n.c(u)][p] = true;
        }
    }
    m.delta_e[n.c("e")] = {{n.l("1"), n.c("u0")}, {n.l("1+"), n.c("u1")}};
    m.delta_e[n.c("e2")] = {{kUnlabeled, n.c("u2")}};
    m.delta_e[n.c("d1")] = {{kUnlabeled, n.c("d2")}};
    m.delta_e[n.c("d3")] = {{kUnlabeled, n.c("d4")}};

    const std::size_t one = 0;
    const std::size_t end = m.alphabet.end_index();
    const std::size_t alpha = n.p("alpha");
    const std::size_t beta = n.p("beta");
    auto go = [&](const char* c, std::size_t p) { return std::vector<UniversalMove>{{kUnlabeled, n.c(c), p, 0}}; };
    // Marker split: the main branch continues, a fresh checker starts after a
    // two-symbol delay, public labels stop.
    const std::vector<UniversalMove> spawn = {{n.l("1"), n.c("acc"), alpha, 0},
                                              {n.l("1+"), n.c("acc"), alpha, 0},
                                              {n.l("x"), n.c("e"), alpha, 0},
                                              {n.l("y"), n.c("d1"), beta, 0}};
    auto& du = m.delta_u;
    du[n.c("init")][alpha][end] = spawn;
    du[n.c("u0")][alpha][one] = go("e", alpha);
    du[n.c("u0")][alpha][end] = go("acc", alpha);
    du[n.c("u1")][alpha][one] = spawn;
    du[n.c("u1")][alpha][end] = go("acc", alpha);

    du[n.c("u0")][beta][one] = go("e2", beta);
    du[n.c("u0")][beta][end] = go("rej", beta);
    du[n.c("u2")][beta][one] = go("e", beta);
    du[n.c("u2")][beta][end] = go("rej", beta);
    du[n.c("u1")][beta][one] = go("rej", beta);
    du[n.c("u1")][beta][end] = go("acc", beta);
    du[n.c("d2")][beta][one] = go("d3", beta);
    du[n.c("d2")][beta][end] = go("rej", beta);
    du[n.c("d4")][beta][one] = go("e", beta);
    du[n.c("d4")][beta][end] = go("acc", beta);

    const std::size_t rej = n.c("rej");
    for (std::size_t c = 0; c < m.common_states.size(); ++c) {
        for (std::size_t p = 0; p < m.private_states.size(); ++p) {
            if (!m.universal[c][p]) {
                continue;
            }
            for (auto& entry : du[c][p]) {
                if (entry.empty()) {
                    entry = {{kUnlabeled, rej, p, 0}};
                }
            }
        }
    }
    normalize(m);
    assert(validate(m).empty());
    return m;
}

PafaDescription build_twin()
{
    auto m = make_pafa(Alphabet({U'0', U'1', U'c'}), {"ei", "ui", "e", "u0", "u1", "uc", "acc", "rej"},
                       {"p", "alpha", "alpha_v", "beta1", "beta2"}, {"0", "1", "c"}, {"x", "y"});
    Names<PafaDescription> n{m};
    m.accept = n.c("acc");
    m.reject = n.c("rej");
    m.initial_common = n.c("ei");
    m.initial_private = n.p("p");
    for (const char* u : {"ui", "u0", "u1", "uc"}) {
        for (std::size_t p = 0; p < m.private_states.size(); ++p) {
            m.universal[n.c(u)][p] = true;
        }
    }
    m.delta_e[n.c("ei")] = {{kUnlabeled, n.c("ui")}};
    m.delta_e[n.c("e")] = {{n.l("0"), n.c("u0")}, {n.l("1"), n.c("u1")}, {n.l("c"), n.c("uc")}};

    const std::size_t s0 = 0, s1 = 1, sc = 2;
    const std::size_t end = m.alphabet.end_index();
    const std::size_t p0 = n.p("p");
    auto go = [&](const char* c, std::size_t p) { return std::vector<UniversalMove>{{kUnlabeled, n.c(c), p, 0}}; };
    auto& du = m.delta_u;
    du[n.c("ui")][p0][end] = {{n.l("0"), n.c("acc"), p0, 0},
                              {n.l("1"), n.c("acc"), p0, 0},
                              {n.l("c"), n.c("acc"), p0, 0},
                              {n.l("x"), n.c("e"), n.p("alpha"), 0},
                              {n.l("y"), n.c("ui"), n.p("beta1"), 0}};
    // Skip to just after c, then compare with the same certificate.
    const std::size_t b1 = n.p("beta1");
    const std::size_t b2 = n.p("beta2");
    for (std::size_t s : {s0, s1, sc}) {
        du[n.c("ui")][b1][s] = go("ui", b2);
    }
    du[n.c("ui")][b2][s0] = go("ui", b1);
    du[n.c("ui")][b2][s1] = go("ui", b1);
    du[n.c("ui")][b2][sc] = go("e", n.p("alpha_v"));

    for (const char* who : {"alpha", "alpha_v"}) {
        const std::size_t a = n.p(who);
        du[n.c("u0")][a][s0] = go("e", a);
        du[n.c("u1")][a][s1] = go("e", a);
    }
    du[n.c("uc")][n.p("alpha")][sc] = go("acc", n.p("alpha"));
    du[n.c("uc")][n.p("alpha_v")][end] = go("acc", n.p("alpha_v"));

    const std::size_t rej = n.c("rej");
    for (std::size_t c = 0; c < m.common_states.size(); ++c) {
        for (std::size_t p = 0; p < m.private_states.size(); ++p) {
            if (!m.universal[c][p]) {
                continue;
            }
            for (auto& entry : du[c][p]) {
                if (entry.empty()) {
                    entry = {{kUnlabeled, rej, p, 0}};
                }
            }
        }
    }
    normalize(m);
    assert(validate(m).empty());
    return m;
}

Pa1caDescription build_usquare_pa1ca()
{
    auto m = make_pa1ca(Alphabet({U'1'}), {"init", "split", "g", "e", "u1", "uh", "acc", "rej"},
                        {"S", "P0B", "P0N", "P1", "P2B", "P2N", "P3", "P4", "C1S", "C1", "C2A", "C2N"},
                        {"1", "#"}, {"x", "y"});
    Names<Pa1caDescription> n{m};
    m.accept = n.c("acc");
    m.reject = n.c("rej");
    m.initial_common = n.c("init");
    m.initial_private = n.p("S");
    for (const char* u : {"init", "split", "g", "u1", "uh"}) {
        for (std::size_t p = 0; p < m.private_states.size(); ++p) {
            m.universal[n.c(u)][p] = true;
        }
    }
    m.delta_e[n.c("e")] = {{n.l("1"), n.c("u1")}, {n.l("#"), n.c("uh")}};

    const std::size_t one = 0;
    const std::size_t end = m.alphabet.end_index();
    auto& du = m.delta_u;
    auto both = [&](const char* c, const char* p, std::size_t sym, std::vector<UniversalMove> moves) {
        du[n.c(c)][n.p(p)][sym] = {moves, moves};
    };
    auto go = [&](const char* c, const char* p, int update = 0) {
        return std::vector<UniversalMove>{{kUnlabeled, n.c(c), n.p(p), update}};
    };
    auto split = [&](const char* from, std::vector<UniversalMove> x, std::vector<UniversalMove> y) {
        return std::vector<UniversalMove>{{n.l("1"), n.c("acc"), n.p(from), 0},
                                          {n.l("#"), n.c("acc"), n.p(from), 0},
                                          {n.l("x"), x[0].common, x[0].priv, x[0].update},
                                          {n.l("y"), y[0].common, y[0].priv, y[0].update}};
    };
    // Accept iff the counter is zero.
    auto zero_test = [&](const char* c, const char* p) {
        du[n.c(c)][n.p(p)][end] = {go("acc", p), go("rej", p)};
    };

    both("init", "S", end, go("split", "S"));
    both("split", "S", end, split("S", go("g", "P0B"), go("g", "C1S")));
    for (const char* p : {"P0B", "C1S"}) {
        both("g", p, one, go("e", p));
        both("g", p, end, go("acc", p));
    }

    // Pair control: count the 1s of one chosen segment up, those of a later
    // chosen segment down.
    both("u1", "P0B", one, split("P0B", go("e", "P1", 1), go("e", "P0N")));
    both("uh", "P0B", one, split("P0B", go("e", "P2B"), go("e", "P0B")));
    both("u1", "P0N", one, go("e", "P0N"));
    both("uh", "P0N", one, go("e", "P0B"));
    both("u1", "P1", one, go("e", "P1", 1));
    both("uh", "P1", one, go("e", "P2B"));
    both("u1", "P2B", one, split("P2B", go("e", "P3", -1), go("e", "P2N")));
    both("uh", "P2B", one, split("P2B", go("e", "P4"), go("e", "P2B")));
    both("u1", "P2N", one, go("e", "P2N"));
    both("uh", "P2N", one, go("e", "P2B"));
    both("u1", "P3", one, go("e", "P3", -1));
    both("uh", "P3", one, go("e", "P4"));
    both("u1", "P4", one, go("e", "P4"));
    both("uh", "P4", one, go("e", "P4"));
    for (const char* u : {"u1", "uh"}) {
        for (const char* p : {"P0B", "P0N", "P1", "P2B", "P2N"}) {
            both(u, p, end, go("acc", p));
        }
        zero_test(u, "P4");
    }
    zero_test("uh", "P3");
    both("u1", "P3", end, go("rej", "P3"));

    // Segment count: +1 for every symbol of the first segment after its
    // first, -1 at the first symbol of each later segment.
    both("u1", "C1S", one, go("e", "C1"));
    both("uh", "C1S", one, go("e", "C2A"));
    both("u1", "C1", one, go("e", "C1", 1));
    both("uh", "C1", one, go("e", "C2A", 1));
    both("u1", "C2A", one, go("e", "C2N", -1));
    both("uh", "C2A", one, go("e", "C2A", -1));
    both("u1", "C2N", one, go("e", "C2N"));
    both("uh", "C2N", one, go("e", "C2A"));
    both("uh", "C1S", end, go("acc", "C1S"));
    zero_test("uh", "C2N");
    for (const char* p : {"C1S", "C1", "C2A", "C2N"}) {
        if (du[n.c("u1")][n.p(p)][end][0].empty()) {
            both("u1", p, end, go("rej", p));
        }
    }
    both("uh", "C1", end, go("rej", "C1"));
    both("uh", "C2A", end, go("rej", "C2A"));

    const std::size_t rej = n.c("rej");
    for (std::size_t c = 0; c < m.common_states.size(); ++c) {
        for (std::size_t p = 0; p < m.private_states.size(); ++p) {
            if (!m.universal[c][p]) {
                continue;
            }
            for (auto& entry : du[c][p]) {
                for (auto& moves : entry) {
                    if (moves.empty()) {
                        moves = {{kUnlabeled, rej, p, 0}};
                    }
                }
            }
        }
    }
    normalize(m);
    assert(validate(m).empty());
    return m;
}

} // namespace rtalt::pafa
