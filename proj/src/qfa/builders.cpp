#include "rtalt/qfa/builders.hpp"

#include <cassert>

namespace rtalt::qfa {

namespace {

/// Smallest integer c with I − M†M/c² positive semidefinite.
long scale_for(const CMatrix& m)
{
    const std::size_t n = m.rows();
    const CMatrix gram = m.adjoint() * m;
    for (long c = 1;; ++c) {
        CMatrix residual = CMatrix::identity(n) - gram * GaussianRational(Rational(1, c * c));
        if (is_psd(residual)) {
            return c;
        }
    }
}

/// {main/c} plus completion elements; the main element is outcome 1.
Superoperator padded(const CMatrix& main)
{
    CMatrix scaled = main * GaussianRational(Rational(1, scale_for(main)));
    Superoperator op{{scaled}};
    for (auto& e : completion_elements(op.elements, main.rows())) {
        op.elements.push_back(std::move(e));
    }
    return op;
}

} // namespace

AqfaDescription build_usquare_aqfa()
{
    enum State : std::size_t { start, start_b, pre, pre_b, post, post_b, fin, acc, rej };
    auto m = make_aqfa(Alphabet({U'a'}),
                       {"s_start", "s_start_b", "s_pre", "s_pre_b", "s_post", "s_post_b", "s_fin", "s_acc", "s_rej"},
                       {"one", "j", "j2", "k"});
    m.classical_initial = start;
    m.initial = 0;
    m.universal[fin] = true;
    m.classical_accept[acc] = true;

    const std::size_t a = 0;
    const std::size_t end = m.alphabet.end_index();
    const CMatrix id = CMatrix::identity(4);
    auto set = [&](State s, std::size_t sym, Superoperator op, std::size_t main_target, std::size_t pad_target) {
        std::vector<std::size_t> targets(op.elements.size(), pad_target);
        targets[0] = main_target;
        m.ops[s][sym] = std::move(op);
        m.cdelta[s][sym] = std::move(targets);
    };

    // (1, j, j², k) -> (1, j+1, (j+1)², k+1)
    const CMatrix step = CMatrix::from_rows({{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 0, 0, 1}});
    // (1, i, i², k) -> (1, i, i², k+1)
    const CMatrix count = CMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}});
    // Row 0 carries (i² − k)/2.
    CMatrix diff(4, 4);
    diff(0, 2) = GaussianRational(Rational(1, 2));
    diff(0, 3) = GaussianRational(Rational(-1, 2));

    set(start, end, Superoperator{{id}}, start_b, rej);
    set(start_b, end, Superoperator{{id}}, pre, rej);
    set(pre, a, padded(step), pre_b, rej);
    set(pre, end, Superoperator{{id}}, rej, rej);
    // Existential pick: outcome 1 freezes the position, outcome 2 moves on.
    Superoperator pick{{id * GaussianRational(Rational(3, 5)), id * GaussianRational(Rational(4, 5))}};
    m.ops[pre_b][a] = pick;
    m.cdelta[pre_b][a] = {post, pre};
    set(post, a, padded(count), post_b, rej);
    set(post_b, a, Superoperator{{id}}, post, rej);
    set(post, end, Superoperator{{id}}, fin, rej);
    Superoperator final_step{{diff}};
    for (auto& e : completion_elements(final_step.elements, 4)) {
        final_step.elements.push_back(std::move(e));
    }
    set(fin, end, std::move(final_step), rej, acc);
    // Unused (state, symbol) pairs keep identity steps into the rejecting sink.
    for (State s : {start, start_b, pre_b, post_b, fin}) {
        for (std::size_t i = 0; i <= end; ++i) {
            bool used = (s == start || s == start_b || s == fin) ? i == end : i == a;
            if (!used) {
                set(s, i, Superoperator{{id}}, rej, rej);
            }
        }
    }
    assert(validate(m).empty());
    return m;
}

} // namespace rtalt::qfa
