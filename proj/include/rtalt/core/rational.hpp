#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rtalt::core {

/// Arbitrary-precision rational. gmpxx keeps results canonical after every
/// arithmetic operation.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign on p). Non-canonical input such as
/// "2/4" is reduced. Throws SyntaxError on malformed text or zero
/// denominators, AlgebraicAmplitudeError on things like "sqrt(2)".
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers keep an explicit "/1".
std::string format_rational(const Rational& r);

/// Complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long v) : re(v) {}
    GaussianRational(int v) : re(v) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    GaussianRational conj() const { return {re, -im}; }
    /// |z|^2 = re^2 + im^2, always rational.
    Rational norm2() const { return re * re + im * im; }
    /// Throws std::domain_error on zero.
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

std::string to_string(const GaussianRational& z);

} // namespace rtalt::core
