#include "rtalt/qfa/matrix.hpp"

#include "rtalt/core/error.hpp"

#include <sstream>

namespace rtalt::qfa {

CMatrix CMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows)
{
    CMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw Error("ragged matrix rows");
        }
        for (std::size_t j = 0; j < m.cols_; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

CMatrix CMatrix::identity(std::size_t n)
{
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

CMatrix CMatrix::unit(std::size_t n, std::size_t i, std::size_t j)
{
    CMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

CMatrix CMatrix::adjoint() const
{
    CMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            r(j, i) = (*this)(i, j).conj();
        }
    }
    return r;
}

GaussianRational CMatrix::trace() const
{
    GaussianRational t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool CMatrix::is_zero() const
{
    for (const auto& z : data_) {
        if (!z.is_zero()) {
            return false;
        }
    }
    return true;
}

bool CMatrix::is_hermitian() const
{
    if (!is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            if (!((*this)(i, j) == (*this)(j, i).conj())) {
                return false;
            }
        }
    }
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw Error("matrix dimension mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw Error("matrix dimension mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

CMatrix& CMatrix::operator*=(const GaussianRational& s)
{
    for (auto& z : data_) {
        z *= s;
    }
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b)
{
    if (a.cols_ != b.rows_) {
        throw Error("matrix dimension mismatch");
    }
    CMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) {
                    r(i, j) += x * b(k, j);
                }
            }
        }
    }
    return r;
}

CVector operator*(const CMatrix& a, const CVector& v)
{
    if (a.cols_ != v.size()) {
        throw Error("matrix-vector dimension mismatch");
    }
    CVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (!a(i, j).is_zero() && !v[j].is_zero()) {
                r[i] += a(i, j) * v[j];
            }
        }
    }
    return r;
}

Rational norm2(const CVector& v)
{
    Rational s = 0;
    for (const auto& z : v) {
        s += z.norm2();
    }
    return s;
}

bool is_zero(const CVector& v)
{
    for (const auto& z : v) {
        if (!z.is_zero()) {
            return false;
        }
    }
    return true;
}

std::optional<LdlFactor> ldl_psd(const CMatrix& h)
{
    if (!h.is_hermitian()) {
        return std::nullopt;
    }
    const std::size_t n = h.rows();
    LdlFactor f{CMatrix::identity(n), std::vector<Rational>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        Rational d = h(k, k).re;
        for (std::size_t j = 0; j < k; ++j) {
            d -= f.lower(k, j).norm2() * f.diagonal[j];
        }
        if (sgn(d) < 0) {
            return std::nullopt;
        }
        f.diagonal[k] = d;
        for (std::size_t i = k + 1; i < n; ++i) {
            GaussianRational s = h(i, k);
            for (std::size_t j = 0; j < k; ++j) {
                s -= f.lower(i, j) * GaussianRational(f.diagonal[j]) * f.lower(k, j).conj();
            }
            if (sgn(d) == 0) {
                // A zero pivot forces the rest of its column to vanish.
                if (!s.is_zero()) {
                    return std::nullopt;
                }
                f.lower(i, k) = 0;
            }
            else {
                f.lower(i, k) = s * GaussianRational(Rational(1 / d));
            }
        }
    }
    return f;
}

bool is_psd(const CMatrix& h)
{
    return ldl_psd(h).has_value();
}

namespace {

bool is_square(const mpz_class& n, mpz_class& root)
{
    if (sgn(n) < 0) {
        return false;
    }
    root = sqrt(n);
    return root * root == n;
}

std::array<mpz_class, 4> four_squares_int(const mpz_class& n)
{
    mpz_class r;
    for (mpz_class a = sqrt(n); a >= 0; --a) {
        mpz_class ra = n - a * a;
        for (mpz_class b = sqrt(ra); b >= 0 && 3 * b * b >= ra; --b) {
            mpz_class rb = ra - b * b;
            for (mpz_class c = sqrt(rb); c >= 0 && 2 * c * c >= rb; --c) {
                if (is_square(rb - c * c, r)) {
                    return {a, b, c, r};
                }
            }
        }
    }
    throw Error("four-square decomposition failed");
}

} // namespace

std::array<Rational, 4> four_squares(const Rational& r)
{
    if (sgn(r) < 0) {
        throw Error("four_squares of a negative number");
    }
    // p/q = (p q) / q²
    mpz_class n = r.get_num() * r.get_den();
    auto s = four_squares_int(n);
    std::array<Rational, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = Rational(s[i], r.get_den());
        out[i].canonicalize();
    }
    return out;
}

std::vector<CMatrix> completion_elements(const std::vector<CMatrix>& elements, std::size_t n)
{
    CMatrix g = CMatrix::identity(n);
    for (const auto& e : elements) {
        g -= e.adjoint() * e;
    }
    auto f = ldl_psd(g);
    if (!f) {
        throw Error("operation elements exceed the identity; no completion exists");
    }
    std::vector<CMatrix> out;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(f->diagonal[k]) == 0) {
            continue;
        }
        for (const auto& coeff : four_squares(f->diagonal[k])) {
            if (sgn(coeff) == 0) {
                continue;
            }
            // Row 0 holds coeff * l_k†, so F†F = coeff² l_k l_k†.
            CMatrix e(n, n);
            for (std::size_t j = 0; j < n; ++j) {
                e(0, j) = f->lower(j, k).conj() * GaussianRational(coeff);
            }
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::string to_string(const CMatrix& m)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j ? ", " : "") << core::to_string(m(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace rtalt::qfa
