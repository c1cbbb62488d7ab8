#pragma once

#include <optional>
#include <type_traits>
#include <variant>
#include <vector>

#include "liediag/linform.hpp"
#include "liediag/matrix.hpp"

namespace liediag {

/// Incrementally built echelon basis of a row space, over Q (Scalar =
/// Rational) or over the fraction field of Q[c] (Scalar = Poly).
///
/// Over Q rows are normalized to pivot 1. Over Q[c] rows are kept
/// fraction-free: a new row is the Bareiss reduction of the inserted vector
/// against the existing rows, so its entries are minors of the stacked
/// matrix and every division performed is exact. Rows carry an integer tag
/// (the diagram position that produced them) so that a prefix can be
/// restored with truncate().
template <class Scalar>
class Echelon {
public:
    using Row = Vector<Scalar>;

    explicit Echelon(Index dim = 0) : dim_(dim) {}

    Index dim() const { return dim_; }
    Index rank() const { return static_cast<Index>(rows_.size()); }

    bool contains(const Row& target) const { return is_zero(reduce(target, false)); }

    /// Reduced remainder of `target`; zero iff target lies in the span.
    Row remainder(const Row& target) const { return reduce(target, true); }

    /// Inserts `target` when it is independent of the current rows.
    bool insert(const Row& target, int tag = 0)
    {
        Row rem = reduce(target, true);
        if (is_zero(rem)) return false;
        push_remainder(std::move(rem), tag);
        return true;
    }

    /// Appends a nonzero remainder previously returned by remainder().
    void push_remainder(Row rem, int tag)
    {
        Index col = -1;
        for (Index j = 0; j < rem.size(); ++j) {
            if (rem(j).is_zero()) continue;
            if (col < 0 || pivot_cost(rem(j)) < pivot_cost(rem(col))) col = j;
        }
        if (col < 0) throw std::invalid_argument("Echelon::push_remainder: zero row");
        if constexpr (std::is_same_v<Scalar, Rational>) {
            const Rational inv = Rational(1) / rem(col);
            for (Index j = 0; j < rem.size(); ++j)
                if (!rem(j).is_zero()) rem(j) *= inv;
        }
        Scalar pivot = rem(col);
        rows_.push_back({std::move(rem), col, std::move(pivot), tag});
    }

    /// Drops trailing rows whose tag is >= `tag`.
    void truncate(int tag)
    {
        while (!rows_.empty() && rows_.back().tag >= tag) rows_.pop_back();
    }

    const Scalar& pivot(Index r) const { return rows_[r].pivot; }
    Index pivot_col(Index r) const { return rows_[r].col; }
    int tag(Index r) const { return rows_[r].tag; }
    const Row& row(Index r) const { return rows_[r].values; }

private:
    struct EchelonRow {
        Row values;
        Index col;
        Scalar pivot;
        int tag;
    };

    Row reduce(const Row& target, bool materialize) const
    {
        if (target.size() != dim_) throw std::invalid_argument("Echelon: dimension mismatch");
        if constexpr (std::is_same_v<Scalar, Rational>) {
            Row t = target;
            for (const auto& r : rows_) {
                if (t(r.col).is_zero()) continue;
                const Rational f = t(r.col);
                for (Index j = 0; j < t.size(); ++j)
                    if (!r.values(j).is_zero()) t(j) -= f * r.values(j);
            }
            return t;
        } else {
            // The true Bareiss row after step i is u * pivot(i) / pivot(base);
            // steps that find a zero in the pivot column only rescale, so
            // they are deferred until an actual elimination needs them.
            Row u = target;
            Index base = -1;
            const Scalar one(1);
            auto p = [&](Index k) -> const Scalar& { return k < 0 ? one : rows_[k].pivot; };
            for (Index i = 0; i < rank(); ++i) {
                const auto& r = rows_[i];
                if (u(r.col).is_zero()) continue;
                if (base != i - 1) {
                    for (Index j = 0; j < u.size(); ++j)
                        if (!u(j).is_zero()) u(j) = exact_div(u(j) * p(i - 1), p(base));
                }
                const Scalar f = u(r.col);
                for (Index j = 0; j < u.size(); ++j) {
                    if (u(j).is_zero() && r.values(j).is_zero()) continue;
                    u(j) = exact_div(r.pivot * u(j) - f * r.values(j), p(i - 1));
                }
                base = i;
            }
            if (materialize && base != rank() - 1 && !is_zero(u)) {
                for (Index j = 0; j < u.size(); ++j)
                    if (!u(j).is_zero()) u(j) = exact_div(u(j) * p(rank() - 1), p(base));
            }
            return u;
        }
    }

    Index dim_;
    std::vector<EchelonRow> rows_;
};

/// Normalized non-monomial pivots of a polynomial echelon: the genericity
/// conditions its rank assumes.
std::vector<Poly> echelon_conditions(const Echelon<Poly>& e);

/// Appends `cond` (normalized) unless already present.
void add_condition(std::vector<Poly>& conditions, const Poly& cond);

enum class SpanMode { Generic, Concrete };

struct InSpan {
    /// target = Σ certificate[i] · basis[i].
    std::vector<RationalFunction> certificate;
    std::vector<Poly> conditions;
};

struct NotInSpan {
    /// Vector l over L with basis(l) = 0 and target(l) ≠ 0.
    PolyVector witness;
    std::vector<Poly> conditions;
};

/// The answer flips on the vanishing locus of `pivot`: generically the
/// target is independent, on pivot = 0 it is not.
struct Conditional {
    Poly pivot;
    std::vector<Poly> conditions;
};

using SpanDecision = std::variant<InSpan, NotInSpan, Conditional>;

/// Decides target ∈ span(basis) over the fraction field of the parameter
/// ring. Concrete mode requires parameter-free forms.
SpanDecision span_membership(const std::vector<LinForm>& basis, const LinForm& target, SpanMode mode,
                             bool stratify = false);

struct GenericRank {
    Index rank = 0;
    std::vector<Poly> conditions;
};

/// Rank over Q(c) with the non-monomial pivots it assumes nonzero.
GenericRank generic_rank(const PolyMatrix& m);

/// l with f(l) = 0 for every f in `annihilate` and hit(l) = 1, or
/// std::nullopt when hit lies in span(annihilate). Parameter-free input only.
std::optional<RatVector> solve_transversal(const std::vector<LinForm>& annihilate, const LinForm& hit);

}  // namespace liediag
