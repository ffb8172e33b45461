#include "rtalt/qfa/equivalence.hpp"

#include "rtalt/core/error.hpp"

#include <deque>

namespace rtalt::qfa {

namespace {

/// Two density matrices laid out row-major one after the other.
class PairSpace {
public:
    PairSpace(const QfaDescription& a, const QfaDescription& b) : a_(a), b_(b) {}

    std::size_t dimension() const { return a_.dimension() * a_.dimension() + b_.dimension() * b_.dimension(); }

    CVector flatten(const DensityMatrix& ra, const DensityMatrix& rb) const
    {
        CVector v;
        v.reserve(dimension());
        for (const auto* r : {&ra, &rb}) {
            for (std::size_t i = 0; i < r->rows(); ++i) {
                for (std::size_t j = 0; j < r->cols(); ++j) {
                    v.push_back((*r)(i, j));
                }
            }
        }
        return v;
    }

    std::pair<DensityMatrix, DensityMatrix> split(const CVector& v) const
    {
        const std::size_t na = a_.dimension();
        const std::size_t nb = b_.dimension();
        DensityMatrix ra(na, na);
        DensityMatrix rb(nb, nb);
        std::size_t k = 0;
        for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t j = 0; j < na; ++j) {
                ra(i, j) = v[k++];
            }
        }
        for (std::size_t i = 0; i < nb; ++i) {
            for (std::size_t j = 0; j < nb; ++j) {
                rb(i, j) = v[k++];
            }
        }
        return {std::move(ra), std::move(rb)};
    }

    CVector step(const CVector& v, std::size_t sym) const
    {
        auto [ra, rb] = split(v);
        return flatten(apply_superoperator(a_.ops[sym], ra), apply_superoperator(b_.ops[sym], rb));
    }

    /// Difference of the acceptance probabilities after the right end-marker.
    Rational functional(const CVector& v) const
    {
        auto [ra, rb] = split(v);
        const std::size_t end = a_.alphabet.end_index();
        return accept_weight(a_, apply_superoperator(a_.ops[end], ra)) -
               accept_weight(b_, apply_superoperator(b_.ops[end], rb));
    }

private:
    const QfaDescription& a_;
    const QfaDescription& b_;
};

/// Incremental row-echelon basis. Each stored vector is reduced against all
/// earlier ones and scaled to a unit pivot.
class EchelonBasis {
public:
    /// Adds v if it is independent of the current span.
    bool insert(CVector v)
    {
        for (const auto& [pivot, b] : rows_) {
            if (v[pivot].is_zero()) {
                continue;
            }
            GaussianRational factor = v[pivot];
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (!b[j].is_zero()) {
                    v[j] -= factor * b[j];
                }
            }
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot].is_zero()) {
            ++pivot;
        }
        if (pivot == v.size()) {
            return false;
        }
        GaussianRational inv = v[pivot].inverse();
        for (auto& z : v) {
            z *= inv;
        }
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }

    std::size_t size() const { return rows_.size(); }

private:
    std::vector<std::pair<std::size_t, CVector>> rows_;
};

void require_valid(const QfaDescription& m)
{
    auto errs = validate(m);
    if (!errs.empty()) {
        throw ValidationError(errs);
    }
}

} // namespace

EquivalenceResult qfa_equivalence(const QfaDescription& m1, const QfaDescription& m2)
{
    if (!(m1.alphabet == m2.alphabet)) {
        throw Error("QFA equivalence needs identical input alphabets");
    }
    require_valid(m1);
    require_valid(m2);
    PairSpace space(m1, m2);
    const std::size_t end = m1.alphabet.end_index();
    CVector seed = space.flatten(apply_superoperator(m1.ops[end], basis_density(m1.dimension(), m1.initial)),
                                 apply_superoperator(m2.ops[end], basis_density(m2.dimension(), m2.initial)));
    EquivalenceResult result;
    EchelonBasis basis;
    std::deque<std::pair<CVector, Word>> queue;
    auto consider = [&](CVector v, Word w) {
        if (!basis.insert(v)) {
            return true;
        }
        result.basis_words.push_back(w);
        if (sgn(space.functional(v)) != 0) {
            result.counterexample = std::move(w);
            return false;
        }
        queue.emplace_back(std::move(v), std::move(w));
        return true;
    };
    if (!consider(seed, Word{})) {
        return result;
    }
    while (!queue.empty()) {
        auto [v, w] = std::move(queue.front());
        queue.pop_front();
        for (std::size_t s = 0; s < m1.alphabet.size(); ++s) {
            if (!consider(space.step(v, s), w + m1.alphabet[s])) {
                return result;
            }
        }
    }
    return result;
}

core::EmptinessVerdict nqfa_emptiness(const QfaDescription& m)
{
    auto r = qfa_equivalence(m, make_zero_qfa(m.alphabet));
    if (r.equivalent()) {
        return core::EmptinessVerdict::empty();
    }
    return core::EmptinessVerdict::nonempty(*r.counterexample);
}

} // namespace rtalt::qfa
