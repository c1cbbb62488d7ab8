#include "liediag/rational.hpp"

#include <cctype>

#include "liediag/error.hpp"

namespace liediag {

Rational::Rational(long num, long den)
{
    if (den == 0) throw Error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw Error("division by zero");
    value_ /= o.value_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    return Rational(mpq_class(n, d));
}

std::size_t Rational::hash() const
{
    return std::hash<std::string>{}(str());
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational pow(const Rational& base, unsigned exp)
{
    Rational result(1);
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

long Rational::to_long() const
{
    if (!is_integer() || !value_.get_num().fits_slong_p()) throw Error("not a machine integer: " + str());
    return value_.get_num().get_si();
}

}  // namespace liediag
