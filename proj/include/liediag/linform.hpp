#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liediag/matrix.hpp"
#include "liediag/poly.hpp"

namespace liediag {

/// Element of L*: a sparse combination of the dual basis of a Lie algebra
/// with polynomial coefficients. Diagram edge labels and memorized forms are
/// LinForms.
class LinForm {
public:
    using Entry = std::pair<Index, Poly>;

    LinForm() = default;
    explicit LinForm(Index dim) : dim_(dim) {}

    /// coeff · (dual basis element `index`).
    static LinForm unit(Index dim, Index index, Poly coeff = Poly(1));

    template <class Derived>
    static LinForm from_dense(const Eigen::MatrixBase<Derived>& coeffs)
    {
        LinForm f(coeffs.size());
        for (Index a = 0; a < coeffs.size(); ++a)
            if (!coeffs(a).is_zero()) f.entries_.emplace_back(a, Poly(coeffs(a)));
        return f;
    }

    Index dim() const { return dim_; }
    const std::vector<Entry>& entries() const { return entries_; }
    Poly coeff(Index index) const;
    void set(Index index, Poly coeff);

    bool is_zero() const { return entries_.empty(); }
    /// True when no coefficient involves a parameter.
    bool is_concrete() const;
    /// True when every coefficient is a rational whose numerator is divisible
    /// by p, i.e. the form vanishes in characteristic p.
    bool vanishes_mod(long p) const;

    PolyVector dense() const;
    /// Throws liediag::Error when a coefficient involves a parameter.
    RatVector dense_concrete() const;

    LinForm& operator+=(const LinForm& o);
    LinForm& operator-=(const LinForm& o);
    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
    friend LinForm operator-(LinForm a);
    friend LinForm operator*(const Poly& s, LinForm f);

    friend bool operator==(const LinForm&, const LinForm&) = default;

    /// Signed sum such as "c_1*a_23 - c_2*a_34", terms in dual-basis order.
    std::string str(const std::vector<std::string>& dual_labels) const;
    /// Inverse of str() for the given dual labels. Throws liediag::ParseError.
    static LinForm parse(std::string_view text, const std::vector<std::string>& dual_labels);

private:
    void check_same_dim(const LinForm& o) const;

    Index dim_ = 0;
    std::vector<Entry> entries_;  // sorted by index, no zero coefficients
};

/// Σ coeff_a · l_a.
Poly eval_linform(const LinForm& form, const RatVector& l);
Poly eval_linform(const LinForm& form, const PolyVector& l);

}  // namespace liediag
