#pragma once

#include "rtalt/core/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rtalt::qfa {

using core::GaussianRational;
using core::Rational;

using CVector = std::vector<GaussianRational>;

/// Dense row-major matrix over the Gaussian rationals.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Throws Error if the rows are ragged.
    static CMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);
    static CMatrix identity(std::size_t n);
    /// |i><j| in dimension n.
    static CMatrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMatrix adjoint() const;
    GaussianRational trace() const;
    bool is_zero() const;
    bool is_hermitian() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(const GaussianRational& s);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, const GaussianRational& s) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CVector operator*(const CMatrix& a, const CVector& v);
    friend bool operator==(const CMatrix& a, const CMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

/// Squared Euclidean norm, exact.
Rational norm2(const CVector& v);
bool is_zero(const CVector& v);

/// H = L D L† with L unit lower triangular and D real diagonal.
struct LdlFactor {
    CMatrix lower;
    std::vector<Rational> diagonal;
};

/// Factorization of a Hermitian positive semidefinite matrix; nullopt if the
/// matrix is not Hermitian or not PSD (exact test).
std::optional<LdlFactor> ldl_psd(const CMatrix& h);
bool is_psd(const CMatrix& h);

/// r = a² + b² + c² + d² with rationals (Lagrange). Requires r >= 0.
std::array<Rational, 4> four_squares(const Rational& r);

/// Extra operation elements F with Σ F†F = I − Σ E†E, so that the union is
/// a complete superoperator. Every F is nonzero only in row 0. Throws Error
/// if Σ E†E ≤ I fails.
std::vector<CMatrix> completion_elements(const std::vector<CMatrix>& elements, std::size_t n);

std::string to_string(const CMatrix& m);

} // namespace rtalt::qfa
