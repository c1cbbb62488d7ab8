#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liediag/matrix.hpp"

namespace liediag {

/// One structure-constant entry: [e_left, e_right] = Σ result_k e_k.
struct BracketEntry {
    Index left;
    Index right;
    RatVector result;
};

/// Finite-dimensional Lie algebra over Q given by an ordered basis and its
/// structure constants. Brackets are stored for left < right only;
/// antisymmetry is implied.
class LieAlgebra {
public:
    /// Validates and normalizes; throws liediag::Error on a bad index, a
    /// nonzero [e_i, e_i], conflicting entries, or a Jacobi failure (the
    /// message names the violating triple). `dual_labels` defaults to
    /// label + "*".
    LieAlgebra(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets,
               std::vector<std::string> dual_labels = {});

    Index dim() const { return static_cast<Index>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::string>& dual_labels() const { return dual_labels_; }
    const std::map<std::pair<Index, Index>, RatVector>& brackets() const { return brackets_; }

    RatVector bracket(Index i, Index j) const;
    RatVector bracket(const RatVector& x, const RatVector& y) const;
    /// Matrix of ad(e_a) in the basis: column i is [e_a, e_i].
    const RatMatrix& ad(Index a) const { return ad_[a]; }

    RatVector unit(Index i) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.labels_ == b.labels_ && a.dual_labels_ == b.dual_labels_ && a.brackets_ == b.brackets_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::string> dual_labels_;
    std::map<std::pair<Index, Index>, RatVector> brackets_;
    std::vector<RatMatrix> ad_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

AlgebraPtr new_lie_algebra(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets,
                           std::vector<std::string> dual_labels = {});

/// Representation T of L on E: one dim(E) × dim(E) matrix per basis element
/// of L; column i of matrix(a) is T(e_a) e_i.
class Representation {
public:
    Representation(AlgebraPtr algebra, std::vector<std::string> labels, std::vector<std::string> dual_labels,
                   std::vector<RatMatrix> matrices);

    const LieAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    Index dim() const { return static_cast<Index>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::string>& dual_labels() const { return dual_labels_; }
    const std::vector<RatMatrix>& matrices() const { return matrices_; }
    const RatMatrix& matrix(Index a) const { return matrices_[a]; }

    /// T(l) = Σ l_a T(e_a).
    RatMatrix act(const RatVector& l) const;

    /// Same representation in the reordered basis e'_p = e_{ordering[p]}.
    Representation permuted(const std::vector<Index>& ordering) const;

    friend bool operator==(const Representation& a, const Representation& b);

private:
    AlgebraPtr algebra_;
    std::vector<std::string> labels_;
    std::vector<std::string> dual_labels_;
    std::vector<RatMatrix> matrices_;
};

Representation adjoint(const AlgebraPtr& algebra);
/// Contragredient: T*(e_a) = -T(e_a)ᵀ, labels and dual labels swapped.
Representation dual_rep(const Representation& t);
Representation coadjoint(const AlgebraPtr& algebra);
Representation zero_rep(const AlgebraPtr& algebra, Index dim);

Representation direct_sum(const Representation& t, const Representation& u);
/// T ⊗ U on the basis (v_i ⊗ w_j) ordered lexicographically in (i, j).
Representation tensor_product(const Representation& t, const Representation& u);

/// Smallest c with the (c+1)-th lower central series term zero, or
/// std::nullopt when L is not nilpotent.
std::optional<int> nilpotency_class(const LieAlgebra& algebra);

struct ValidationReport {
    bool ok = true;
    /// Basis pairs (a, b), a < b, with T([e_a, e_b]) ≠ [T(e_a), T(e_b)], in
    /// scan order.
    std::vector<std::pair<Index, Index>> failures;
    std::string message;
};

ValidationReport validate_representation(const Representation& t);

/// A bijection check on 0..n-1.
bool is_permutation(const std::vector<Index>& ordering, Index n);

}  // namespace liediag
