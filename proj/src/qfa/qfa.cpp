#include "rtalt/qfa/qfa.hpp"

#include "rtalt/core/error.hpp"

namespace rtalt::qfa {

std::vector<std::string> validate(const Superoperator& e, std::size_t n)
{
    std::vector<std::string> out;
    if (e.elements.empty()) {
        out.emplace_back("superoperator has no operation elements");
        return out;
    }
    CMatrix sum(n, n);
    for (std::size_t k = 0; k < e.elements.size(); ++k) {
        const auto& m = e.elements[k];
        if (m.rows() != n || m.cols() != n) {
            out.emplace_back("operation element " + std::to_string(k + 1) + " is not " + std::to_string(n) + "x" +
                             std::to_string(n));
            return out;
        }
        sum += m.adjoint() * m;
    }
    if (!(sum == CMatrix::identity(n))) {
        out.emplace_back("completeness violated: sum of E_k† E_k is not the identity");
    }
    return out;
}

std::vector<std::string> check_density(const DensityMatrix& rho)
{
    std::vector<std::string> out;
    if (!rho.is_hermitian()) {
        out.emplace_back("density matrix is not Hermitian");
    }
    if (!(rho.trace() == GaussianRational(1))) {
        out.emplace_back("density matrix trace is not 1");
    }
    for (std::size_t i = 0; i < rho.rows() && i < rho.cols(); ++i) {
        if (!rho(i, i).is_real() || sgn(rho(i, i).re) < 0) {
            out.emplace_back("density matrix diagonal entry " + std::to_string(i) + " is not real and nonnegative");
        }
    }
    return out;
}

DensityMatrix apply_superoperator(const Superoperator& e, const DensityMatrix& rho)
{
    if (!rho.is_square()) {
        throw Error("density matrix is not square");
    }
    DensityMatrix out(rho.rows(), rho.cols());
    for (const auto& k : e.elements) {
        if (k.cols() != rho.rows() || k.rows() != rho.rows()) {
            throw Error("superoperator dimension does not match the density matrix");
        }
        out += k * rho * k.adjoint();
    }
    return out;
}

DensityMatrix basis_density(std::size_t n, std::size_t i)
{
    return CMatrix::unit(n, i, i);
}

QfaDescription make_qfa(Alphabet alphabet, std::vector<std::string> basis)
{
    QfaDescription m;
    m.alphabet = std::move(alphabet);
    m.basis = std::move(basis);
    m.accept.assign(m.basis.size(), false);
    m.ops.assign(m.alphabet.size() + 1, Superoperator{{CMatrix::identity(m.basis.size())}});
    return m;
}

QfaDescription make_zero_qfa(const Alphabet& alphabet)
{
    return make_qfa(alphabet, {"q0"});
}

std::vector<std::string> validate(const QfaDescription& m)
{
    std::vector<std::string> out;
    const std::size_t n = m.basis.size();
    if (n == 0) {
        out.emplace_back("empty basis");
        return out;
    }
    if (m.initial >= n) {
        out.emplace_back("initial basis state out of range");
    }
    if (m.accept.size() != n) {
        out.emplace_back("accept subset does not cover the basis");
    }
    if (m.ops.size() != m.alphabet.size() + 1) {
        out.emplace_back("superoperator table must have one entry per symbol and the end-marker");
        return out;
    }
    for (std::size_t i = 0; i < m.ops.size(); ++i) {
        for (const auto& v : validate(m.ops[i], n)) {
            out.push_back("symbol " + m.alphabet.key(i) + ": " + v);
        }
    }
    return out;
}

namespace {

void require_valid(const QfaDescription& m)
{
    auto errs = validate(m);
    if (!errs.empty()) {
        throw ValidationError(errs);
    }
}

} // namespace

DensityMatrix final_density(const QfaDescription& m, const Word& w)
{
    require_valid(m);
    core::TapeView tape(m.alphabet, w);
    DensityMatrix rho = basis_density(m.dimension(), m.initial);
    const std::size_t end = m.alphabet.end_index();
    rho = apply_superoperator(m.ops[end], rho);
    for (core::Symbol s : w) {
        rho = apply_superoperator(m.ops[*m.alphabet.index_of(s)], rho);
    }
    return apply_superoperator(m.ops[end], rho);
}

Rational accept_weight(const QfaDescription& m, const DensityMatrix& rho)
{
    Rational p = 0;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        if (m.accept[i]) {
            p += rho(i, i).re;
        }
    }
    return p;
}

Rational qfa_accept_probability(const QfaDescription& m, const Word& w)
{
    return accept_weight(m, final_density(m, w));
}

Verdict nqfa_accepts(const QfaDescription& m, const Word& w)
{
    return core::verdict_of(sgn(qfa_accept_probability(m, w)) > 0);
}

Verdict uqfa_accepts(const QfaDescription& m, const Word& w)
{
    return core::verdict_of(qfa_accept_probability(m, w) == 1);
}

} // namespace rtalt::qfa
