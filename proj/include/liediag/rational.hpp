#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace liediag {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds.
class Rational {
public:
    Rational() = default;

    template <std::integral Int>
    Rational(Int value) : value_(static_cast<long>(value)) {}

    Rational(long num, long den);

    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Accepts "3", "-3/4", "+7/2". Throws liediag::Error on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    const mpq_class& gmp() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    /// Integer value; throws liediag::Error unless is_integer() and it fits.
    long to_long() const;

    std::string str() const { return value_.get_str(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    std::size_t hash() const;

private:
    mpq_class value_;
};

Rational abs(const Rational& r);

/// n! as an exact rational.
Rational factorial(unsigned n);

/// Rational power with a non-negative integer exponent.
Rational pow(const Rational& base, unsigned exp);

/// Exact quotient in a field; mirrors exact_div(Poly, Poly) so elimination
/// templates can be written once.
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace liediag

template <>
struct std::hash<liediag::Rational> {
    std::size_t operator()(const liediag::Rational& r) const noexcept { return r.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<liediag::Rational> : GenericNumTraits<liediag::Rational> {
    using Real = liediag::Rational;
    using NonInteger = liediag::Rational;
    using Nested = liediag::Rational;
    using Literal = liediag::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 10
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
