#include "liediag/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "liediag/error.hpp"

namespace liediag {

namespace {

std::vector<std::string> default_duals(const std::vector<std::string>& labels)
{
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(l + "*");
    return out;
}

}  // namespace

// ------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets,
                       std::vector<std::string> dual_labels)
    : labels_(std::move(labels)), dual_labels_(std::move(dual_labels))
{
    const Index n = dim();
    if (dual_labels_.empty()) dual_labels_ = default_duals(labels_);
    if (static_cast<Index>(dual_labels_.size()) != n) throw Error("dual label count does not match dimension");

    for (const auto& b : brackets) {
        if (b.left < 0 || b.left >= n || b.right < 0 || b.right >= n)
            throw Error("bracket index out of range");
        if (b.result.size() != n)
            throw Error("bracket [" + labels_[b.left] + "," + labels_[b.right] + "] has " +
                        std::to_string(b.result.size()) + " coefficients, expected " + std::to_string(n));
        if (b.left == b.right) {
            if (!is_zero(b.result)) throw Error("bracket [" + labels_[b.left] + "," + labels_[b.left] + "] must be 0");
            continue;
        }
        const bool flip = b.left > b.right;
        const auto key = flip ? std::make_pair(b.right, b.left) : std::make_pair(b.left, b.right);
        RatVector value = flip ? RatVector(-b.result) : b.result;
        auto it = brackets_.find(key);
        if (it != brackets_.end()) {
            if (it->second != value)
                throw Error("conflicting entries for bracket [" + labels_[key.first] + "," + labels_[key.second] + "]");
            continue;
        }
        if (!is_zero(value)) brackets_.emplace(key, std::move(value));
    }

    ad_.assign(n, zeros<Rational>(n, n));
    for (const auto& [key, value] : brackets_) {
        ad_[key.first].col(key.second) = value;
        ad_[key.second].col(key.first) = -value;
    }

    // Structure constants are usually sparse; only touch nonzero entries.
    auto accumulate = [&](RatVector& s, Index a, Index p, Index q) {
        for (Index c = 0; c < n; ++c) {
            const Rational& v = ad_[p](c, q);
            if (!v.is_zero())
                for (Index r = 0; r < n; ++r)
                    if (!ad_[a](r, c).is_zero()) s(r) += v * ad_[a](r, c);
        }
    };
    RatVector s(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            for (Index k = j + 1; k < n; ++k) {
                s.setConstant(Rational(0));
                accumulate(s, i, j, k);
                accumulate(s, j, k, i);
                accumulate(s, k, i, j);
                if (!is_zero(s))
                    throw Error("Jacobi identity fails on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
            }
}

RatVector LieAlgebra::bracket(Index i, Index j) const
{
    return ad_[i].col(j);
}

RatVector LieAlgebra::bracket(const RatVector& x, const RatVector& y) const
{
    RatVector out = zeros<Rational>(dim());
    for (Index a = 0; a < dim(); ++a)
        if (!x(a).is_zero()) out += x(a) * (ad_[a] * y);
    return out;
}

RatVector LieAlgebra::unit(Index i) const
{
    RatVector v = zeros<Rational>(dim());
    v(i) = Rational(1);
    return v;
}

AlgebraPtr new_lie_algebra(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets,
                           std::vector<std::string> dual_labels)
{
    return std::make_shared<const LieAlgebra>(std::move(labels), brackets, std::move(dual_labels));
}

// --------------------------------------------------------- Representation

Representation::Representation(AlgebraPtr algebra, std::vector<std::string> labels,
                               std::vector<std::string> dual_labels, std::vector<RatMatrix> matrices)
    : algebra_(std::move(algebra)), labels_(std::move(labels)), dual_labels_(std::move(dual_labels)),
      matrices_(std::move(matrices))
{
    if (!algebra_) throw Error("representation without an algebra");
    if (dual_labels_.empty()) dual_labels_ = default_duals(labels_);
    if (dual_labels_.size() != labels_.size()) throw Error("dual label count does not match module dimension");
    if (static_cast<Index>(matrices_.size()) != algebra_->dim())
        throw Error("representation needs one matrix per algebra basis element");
    for (const auto& m : matrices_)
        if (m.rows() != dim() || m.cols() != dim()) throw Error("representation matrix has the wrong shape");
}

RatMatrix Representation::act(const RatVector& l) const
{
    if (l.size() != algebra_->dim()) throw Error("algebra element has the wrong length");
    RatMatrix out = zeros<Rational>(dim(), dim());
    for (Index a = 0; a < l.size(); ++a)
        if (!l(a).is_zero()) out += l(a) * matrices_[a];
    return out;
}

Representation Representation::permuted(const std::vector<Index>& ordering) const
{
    if (!is_permutation(ordering, dim())) throw Error("ordering is not a permutation of the module basis");
    std::vector<std::string> labels, duals;
    for (Index p : ordering) {
        labels.push_back(labels_[p]);
        duals.push_back(dual_labels_[p]);
    }
    std::vector<RatMatrix> mats;
    for (const auto& m : matrices_) {
        RatMatrix pm(dim(), dim());
        for (Index p = 0; p < dim(); ++p)
            for (Index q = 0; q < dim(); ++q) pm(p, q) = m(ordering[p], ordering[q]);
        mats.push_back(std::move(pm));
    }
    return Representation(algebra_, std::move(labels), std::move(duals), std::move(mats));
}

bool operator==(const Representation& a, const Representation& b)
{
    return *a.algebra_ == *b.algebra_ && a.labels_ == b.labels_ && a.dual_labels_ == b.dual_labels_ &&
           a.matrices_ == b.matrices_;
}

Representation adjoint(const AlgebraPtr& algebra)
{
    std::vector<RatMatrix> mats;
    for (Index a = 0; a < algebra->dim(); ++a) mats.push_back(algebra->ad(a));
    return Representation(algebra, algebra->labels(), algebra->dual_labels(), std::move(mats));
}

Representation dual_rep(const Representation& t)
{
    std::vector<RatMatrix> mats;
    for (const auto& m : t.matrices()) mats.push_back(-m.transpose());
    return Representation(t.algebra_ptr(), t.dual_labels(), t.labels(), std::move(mats));
}

Representation coadjoint(const AlgebraPtr& algebra)
{
    return dual_rep(adjoint(algebra));
}

Representation zero_rep(const AlgebraPtr& algebra, Index dim)
{
    std::vector<std::string> labels;
    for (Index i = 0; i < dim; ++i) labels.push_back("e_" + std::to_string(i + 1));
    std::vector<RatMatrix> mats(algebra->dim(), zeros<Rational>(dim, dim));
    return Representation(algebra, std::move(labels), {}, std::move(mats));
}

Representation direct_sum(const Representation& t, const Representation& u)
{
    if (!(t.algebra() == u.algebra())) throw Error("direct sum of representations of different algebras");
    auto labels = t.labels();
    labels.insert(labels.end(), u.labels().begin(), u.labels().end());
    auto duals = t.dual_labels();
    duals.insert(duals.end(), u.dual_labels().begin(), u.dual_labels().end());
    std::vector<RatMatrix> mats;
    const Index n = t.dim() + u.dim();
    for (Index a = 0; a < t.algebra().dim(); ++a) {
        RatMatrix m = zeros<Rational>(n, n);
        m.topLeftCorner(t.dim(), t.dim()) = t.matrix(a);
        m.bottomRightCorner(u.dim(), u.dim()) = u.matrix(a);
        mats.push_back(std::move(m));
    }
    return Representation(t.algebra_ptr(), std::move(labels), std::move(duals), std::move(mats));
}

Representation tensor_product(const Representation& t, const Representation& u)
{
    if (!(t.algebra() == u.algebra())) throw Error("tensor product of representations of different algebras");
    const Index nt = t.dim(), nu = u.dim(), n = nt * nu;
    std::vector<std::string> labels, duals;
    for (Index i = 0; i < nt; ++i)
        for (Index j = 0; j < nu; ++j) {
            labels.push_back(t.labels()[i] + "⊗" + u.labels()[j]);
            duals.push_back(t.dual_labels()[i] + "⊗" + u.dual_labels()[j]);
        }
    std::vector<RatMatrix> mats;
    for (Index a = 0; a < t.algebra().dim(); ++a) {
        RatMatrix m = zeros<Rational>(n, n);
        const RatMatrix& ta = t.matrix(a);
        const RatMatrix& ua = u.matrix(a);
        for (Index i = 0; i < nt; ++i)
            for (Index j = 0; j < nu; ++j) {
                for (Index i2 = 0; i2 < nt; ++i2)
                    if (!ta(i2, i).is_zero()) m(i2 * nu + j, i * nu + j) += ta(i2, i);
                for (Index j2 = 0; j2 < nu; ++j2)
                    if (!ua(j2, j).is_zero()) m(i * nu + j2, i * nu + j) += ua(j2, j);
            }
        mats.push_back(std::move(m));
    }
    return Representation(t.algebra_ptr(), std::move(labels), std::move(duals), std::move(mats));
}

std::optional<int> nilpotency_class(const LieAlgebra& algebra)
{
    const Index n = algebra.dim();
    if (n == 0) return 0;
    RatMatrix term = identity<Rational>(n);  // rows span the current term
    for (int c = 1;; ++c) {
        RatMatrix next(n * term.rows(), n);
        Index r = 0;
        for (Index a = 0; a < n; ++a)
            for (Index i = 0; i < term.rows(); ++i) next.row(r++) = (algebra.ad(a) * term.row(i).transpose()).transpose();
        RatMatrix basis = row_basis(next);
        if (basis.rows() == 0) return c;
        if (basis.rows() == term.rows()) return std::nullopt;
        term = std::move(basis);
    }
}

ValidationReport validate_representation(const Representation& t)
{
    ValidationReport report;
    const LieAlgebra& alg = t.algebra();
    const Index n = t.dim();
    // columns of each T(e_a) as (row, value) lists; the matrices are very sparse
    using Column = std::vector<std::pair<Index, Rational>>;
    std::vector<std::vector<Column>> cols(alg.dim(), std::vector<Column>(n));
    for (Index a = 0; a < alg.dim(); ++a)
        for (Index c = 0; c < n; ++c)
            for (Index r = 0; r < n; ++r)
                if (!t.matrix(a)(r, c).is_zero()) cols[a][c].emplace_back(r, t.matrix(a)(r, c));
    // m += sign * A B
    auto add_product = [&](RatMatrix& m, Index a, Index b, int sign) {
        for (Index c = 0; c < n; ++c)
            for (const auto& [k, vb] : cols[b][c])
                for (const auto& [r, va] : cols[a][k]) {
                    if (sign > 0)
                        m(r, c) += va * vb;
                    else
                        m(r, c) -= va * vb;
                }
    };
    for (Index a = 0; a < alg.dim(); ++a)
        for (Index b = a + 1; b < alg.dim(); ++b) {
            RatMatrix diff = t.act(alg.bracket(a, b));
            add_product(diff, a, b, -1);
            add_product(diff, b, a, 1);
            if (!is_zero(diff)) report.failures.emplace_back(a, b);
        }
    report.ok = report.failures.empty();
    if (!report.ok) {
        const auto [a, b] = report.failures.front();
        std::ostringstream os;
        os << "homomorphism property fails on (" << alg.labels()[a] << ", " << alg.labels()[b] << ")";
        if (report.failures.size() > 1) os << " and " << report.failures.size() - 1 << " more pair(s)";
        report.message = os.str();
    }
    return report;
}

bool is_permutation(const std::vector<Index>& ordering, Index n)
{
    if (static_cast<Index>(ordering.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (Index p : ordering) {
        if (p < 0 || p >= n || seen[p]) return false;
        seen[p] = true;
    }
    return true;
}

}  // namespace liediag
