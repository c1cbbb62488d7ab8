#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liediag/rational.hpp"

namespace liediag {

/// A free parameter c_k. Parameters range over the nonzero scalars.
struct Param {
    std::uint32_t id = 0;

    std::string name() const { return "c_" + std::to_string(id); }

    friend auto operator<=>(const Param&, const Param&) = default;
};

/// Monomial in parameters: (param id, exponent) pairs, sorted by id, every
/// exponent positive.
class Monomial {
public:
    using Power = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Power> powers);
    static Monomial of(Param p, std::uint32_t exp = 1);

    const std::vector<Power>& powers() const { return powers_; }
    std::uint32_t degree() const { return degree_; }
    bool is_one() const { return powers_.empty(); }

    bool divides(const Monomial& other) const;
    /// other / *this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;
    /// Greatest common divisor.
    static Monomial gcd(const Monomial& a, const Monomial& b);

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const;

private:
    std::vector<Power> powers_;
    std::uint32_t degree_ = 0;
};

/// Graded lexicographic comparison with c_1 > c_2 > ... ; returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over the rationals. Terms are stored in
/// strictly decreasing graded-lex order with nonzero coefficients, so
/// structural equality is polynomial equality.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(Rational c);
    template <std::integral Int>
    Poly(Int c) : Poly(Rational(c)) {}

    static Poly param(Param p) { return term(Monomial::of(p), Rational(1)); }
    static Poly term(Monomial m, Rational c);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    /// A single term c·m with c ≠ 0. Such a value never vanishes on (f*)^n.
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant value; throws liediag::Error if the polynomial involves a parameter.
    Rational constant() const;
    std::uint32_t degree() const;
    const Term& leading() const { return terms_.front(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(Poly a);
    friend Poly operator*(const Rational& s, Poly a);

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Exact quotient a / b when b divides a in Q[c]; std::nullopt otherwise.
    static std::optional<Poly> divide(const Poly& a, const Poly& b);

    Poly substitute(const std::map<std::uint32_t, Rational>& values) const;
    Rational evaluate(const std::map<std::uint32_t, Rational>& values) const;

    /// Largest monomial dividing every term.
    Monomial monomial_content() const;
    /// Canonical representative of the condition "p ≠ 0" on (f*)^n: monomial
    /// content removed, integer coefficients with gcd 1, positive leading
    /// coefficient.
    Poly normalized_condition() const;

    std::vector<std::uint32_t> params() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }
    /// Inverse of str(); also accepts any sum of products of rationals and
    /// parameters. Throws liediag::ParseError.
    static Poly parse(std::string_view text);

private:
    void normalize();
    std::vector<Term> terms_;
};

/// Exact division; throws liediag::Error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Quotient of polynomials, kept unreduced (no gcd in multivariate rings).
struct RationalFunction {
    Poly num;
    Poly den{1};

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
    std::string str() const;
};

}  // namespace liediag

namespace Eigen {

template <>
struct NumTraits<liediag::Poly> : GenericNumTraits<liediag::Poly> {
    using Real = liediag::Poly;
    using NonInteger = liediag::Poly;
    using Nested = liediag::Poly;
    using Literal = liediag::Poly;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 20,
        MulCost = 50
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
