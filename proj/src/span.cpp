#include "liediag/span.hpp"

#include <algorithm>

#include "liediag/error.hpp"

namespace liediag {

std::vector<Poly> echelon_conditions(const Echelon<Poly>& e)
{
    std::vector<Poly> out;
    for (Index r = 0; r < e.rank(); ++r)
        if (!e.pivot(r).is_monomial()) add_condition(out, e.pivot(r));
    return out;
}

void add_condition(std::vector<Poly>& conditions, const Poly& cond)
{
    Poly n = cond.normalized_condition();
    if (n.is_constant()) return;
    if (std::find(conditions.begin(), conditions.end(), n) == conditions.end()) conditions.push_back(std::move(n));
}

namespace {

void check_forms(const std::vector<LinForm>& basis, const LinForm& target, SpanMode mode)
{
    for (const auto& f : basis) {
        if (f.dim() != target.dim())
            throw Error("span_membership: forms over different algebras (dimensions " + std::to_string(f.dim()) +
                        " and " + std::to_string(target.dim()) + ")");
        if (mode == SpanMode::Concrete && !f.is_concrete())
            throw Error("span_membership: concrete mode given a parameterized form");
    }
    if (mode == SpanMode::Concrete && !target.is_concrete())
        throw Error("span_membership: concrete mode given a parameterized target");
}

// Rows of `forms` restricted to `cols`.
PolyMatrix restrict(const std::vector<PolyVector>& forms, const std::vector<Index>& cols)
{
    PolyMatrix m(static_cast<Index>(forms.size()), static_cast<Index>(cols.size()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = forms[i](cols[j]);
    return m;
}

}  // namespace

SpanDecision span_membership(const std::vector<LinForm>& basis, const LinForm& target, SpanMode mode,
                             bool stratify)
{
    check_forms(basis, target, mode);
    const Index dim = target.dim();

    Echelon<Poly> e(dim);
    std::vector<std::size_t> independent;
    std::vector<PolyVector> dense;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        PolyVector v = basis[i].dense();
        if (e.insert(v)) {
            independent.push_back(i);
            dense.push_back(std::move(v));
        }
    }
    std::vector<Index> cols;
    for (Index r = 0; r < e.rank(); ++r) cols.push_back(e.pivot_col(r));
    std::vector<Poly> conditions = echelon_conditions(e);

    const PolyVector t = target.dense();
    PolyVector rem = e.remainder(t);

    if (is_zero(rem)) {
        InSpan result;
        result.certificate.assign(basis.size(), RationalFunction{Poly(), Poly(1)});
        PolyMatrix m = restrict(dense, cols);
        const Poly den = determinant<Poly>(m);
        for (std::size_t k = 0; k < independent.size(); ++k) {
            PolyMatrix mk = m;
            for (Index j = 0; j < mk.cols(); ++j) mk(static_cast<Index>(k), j) = t(cols[j]);
            result.certificate[independent[k]] = RationalFunction{determinant<Poly>(mk), den};
        }
        result.conditions = std::move(conditions);
        return result;
    }

    if (stratify && mode == SpanMode::Generic) {
        const auto nonzero = std::count_if(rem.begin(), rem.end(), [](const Poly& p) { return !p.is_zero(); });
        if (nonzero == 1) {
            const Poly& entry = *std::find_if(rem.begin(), rem.end(), [](const Poly& p) { return !p.is_zero(); });
            Poly pivot = entry.normalized_condition();
            if (!pivot.is_constant()) return Conditional{std::move(pivot), std::move(conditions)};
        }
    }

    NotInSpan result;
    if (mode == SpanMode::Concrete) {
        auto l = solve_transversal(basis, target);
        if (!l) throw Error("span_membership: internal inconsistency (independent target has no transversal)");
        result.witness = to_poly(*l);
    } else {
        Echelon<Poly> probe = e;
        probe.push_remainder(rem, 0);
        cols.push_back(probe.pivot_col(probe.rank() - 1));
        dense.push_back(t);
        const PolyMatrix f = restrict(dense, cols);
        result.witness = zeros<Poly>(dim);
        const Index last = f.rows() - 1;
        for (Index j = 0; j < f.cols(); ++j) {
            PolyMatrix fj = f;
            for (Index i = 0; i < f.rows(); ++i) fj(i, j) = Poly(i == last ? 1 : 0);
            result.witness(cols[j]) = determinant<Poly>(fj);
        }
        if (!probe.pivot(probe.rank() - 1).is_monomial()) add_condition(conditions, probe.pivot(probe.rank() - 1));
    }
    result.conditions = std::move(conditions);
    return result;
}

GenericRank generic_rank(const PolyMatrix& m)
{
    Echelon<Poly> e(m.cols());
    for (Index i = 0; i < m.rows(); ++i) e.insert(m.row(i).transpose());
    return GenericRank{e.rank(), echelon_conditions(e)};
}

std::optional<RatVector> solve_transversal(const std::vector<LinForm>& annihilate, const LinForm& hit)
{
    for (const auto& f : annihilate)
        if (f.dim() != hit.dim()) throw Error("solve_transversal: forms over different algebras");
    if (!hit.is_concrete() ||
        !std::all_of(annihilate.begin(), annihilate.end(), [](const LinForm& f) { return f.is_concrete(); }))
        throw Error("solve_transversal: parameterized forms are not supported");
    const Index n = static_cast<Index>(annihilate.size()) + 1;
    RatMatrix a(n, hit.dim());
    RatVector b = zeros<Rational>(n);
    for (Index i = 0; i + 1 < n; ++i) a.row(i) = annihilate[i].dense_concrete().transpose();
    a.row(n - 1) = hit.dense_concrete().transpose();
    b(n - 1) = Rational(1);
    return solve(a, b);
}

}  // namespace liediag
