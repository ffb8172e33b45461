#include "rtalt/core/rational.hpp"
#include "rtalt/core/error.hpp"

#include <cctype>
#include <stdexcept>

namespace rtalt::core {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

bool looks_algebraic(std::string_view s)
{
    return s.find("sqrt") != std::string_view::npos || s.find('^') != std::string_view::npos
        || s.find("√") != std::string_view::npos || s.find("root") != std::string_view::npos;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    if (looks_algebraic(text))
        throw AlgebraicAmplitudeError("algebraic amplitude '" + std::string(text)
                                      + "' is not supported; only rational amplitudes are decidable here");
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
        throw SyntaxError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+')
        n.erase(0, 1);
    mpz_class p(n, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0)
        throw SyntaxError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussianRational GaussianRational::inverse() const
{
    Rational n = norm2();
    if (sgn(n) == 0)
        throw std::domain_error("inverse of zero");
    return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string to_string(const GaussianRational& z)
{
    if (z.is_real())
        return z.re.get_str();
    return "(" + z.re.get_str() + (sgn(z.im) < 0 ? "" : "+") + z.im.get_str() + "i)";
}

} // namespace rtalt::core
