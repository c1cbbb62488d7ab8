#include "liediag/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "liediag/error.hpp"

namespace liediag {

AlgebraPtr heisenberg()
{
    RatVector z = zeros<Rational>(3);
    z(2) = Rational(1);
    return new_lie_algebra({"X", "Y", "Z"}, {{0, 1, z}}, {"x", "y", "z"});
}

// ------------------------------------------------------------------- sl(2)

namespace {

std::vector<RatMatrix> sl2_matrices()
{
    RatMatrix xp = zeros<Rational>(2, 2), xm = zeros<Rational>(2, 2), h = zeros<Rational>(2, 2);
    xp(1, 0) = Rational(1);
    xm(0, 1) = Rational(-1);
    h(0, 0) = Rational(1);
    h(1, 1) = Rational(-1);
    return {xp, xm, h};
}

// Coordinates of a traceless 2×2 matrix in the basis X_+, X_-, H.
RatVector sl2_coords(const RatMatrix& m)
{
    RatVector v(3);
    v << m(1, 0), -m(0, 1), m(0, 0);
    return v;
}

}  // namespace

AlgebraPtr sl2_algebra()
{
    const auto mats = sl2_matrices();
    std::vector<BracketEntry> brackets;
    for (Index a = 0; a < 3; ++a)
        for (Index b = a + 1; b < 3; ++b)
            brackets.push_back({a, b, sl2_coords(mats[a] * mats[b] - mats[b] * mats[a])});
    return new_lie_algebra({"X_+", "X_-", "H"}, brackets, {"x_+", "x_-", "h"});
}

Representation sl2_standard()
{
    return Representation(sl2_algebra(), {"u", "v"}, {"u*", "v*"}, sl2_matrices());
}

// ------------------------------------------------------- upper triangular

namespace {

struct UpperIndex {
    int n;
    Index operator()(int i, int j) const  // 1-based, i < j
    {
        return static_cast<Index>((i - 1) * n - (i - 1) * i / 2 + (j - i - 1));
    }
};

std::string pair_name(const char* stem, int i, int j, int n)
{
    if (n < 10) return std::string(stem) + "_" + std::to_string(i) + std::to_string(j);
    return std::string(stem) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

void require_upper(int n)
{
    if (n < 2) throw Error("upper triangular family needs n >= 2, got " + std::to_string(n));
}

}  // namespace

AlgebraPtr upper_algebra(int n)
{
    require_upper(n);
    const UpperIndex idx{n};
    const Index dim = static_cast<Index>(n * (n - 1) / 2);
    std::vector<std::string> labels, duals;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            labels.push_back(pair_name("E", i, j, n));
            duals.push_back(pair_name("a", i, j, n));
        }
    std::vector<BracketEntry> brackets;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (idx(i, j) >= idx(k, l)) continue;
                    RatVector r = zeros<Rational>(dim);
                    if (j == k) r(idx(i, l)) += Rational(1);
                    if (l == i) r(idx(k, j)) -= Rational(1);
                    if (!is_zero(r)) brackets.push_back({idx(i, j), idx(k, l), r});
                }
    return new_lie_algebra(std::move(labels), brackets, std::move(duals));
}

FamilyRep upper_adjoint(int n)
{
    require_upper(n);
    const UpperIndex idx{n};
    std::vector<Index> order;
    for (int i = n - 1; i >= 1; --i)
        for (int j = i + 1; j <= n; ++j) order.push_back(idx(i, j));
    return {adjoint(upper_algebra(n)), std::move(order)};
}

FamilyRep upper_coadjoint(int n)
{
    require_upper(n);
    const UpperIndex idx{n};
    std::vector<Index> order;
    for (int c = 1; c < n; ++c)
        for (int r = n; r > c; --r) order.push_back(idx(c, r));
    return {coadjoint(upper_algebra(n)), std::move(order)};
}

// -------------------------------------------------------------------- Witt

AlgebraPtr witt_algebra(int m, int n)
{
    if (m < 0) throw Error("witt family needs m >= 0, got " + std::to_string(m));
    std::vector<std::string> labels, duals;
    for (int i = m + 1; i <= n; ++i) {
        labels.push_back("l_" + std::to_string(i));
        duals.push_back("y_" + std::to_string(i));
    }
    const Index dim = static_cast<Index>(labels.size());
    auto idx = [m](int i) { return static_cast<Index>(i - m - 1); };
    std::vector<BracketEntry> brackets;
    for (int i = m + 1; i <= n; ++i)
        for (int j = i + 1; i + j <= n; ++j) {
            RatVector r = zeros<Rational>(dim);
            r(idx(i + j)) = Rational(j - i);
            brackets.push_back({idx(i), idx(j), r});
        }
    return new_lie_algebra(std::move(labels), brackets, std::move(duals));
}

FamilyRep witt_adjoint(int m, int n)
{
    if (n <= m) throw Error("witt family needs n > m");
    AlgebraPtr alg = witt_algebra(m, n);
    std::vector<Index> order(alg->dim());
    std::iota(order.begin(), order.end(), Index{0});
    return {adjoint(alg), std::move(order)};
}

FamilyRep witt_coadjoint(int m, int n)
{
    if (m < 0 || n <= m) throw Error("witt family needs 0 <= m < n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
    AlgebraPtr alg = witt_algebra(m, n);
    const Index dim = alg->dim();
    auto idx = [m](int i) { return static_cast<Index>(i - m - 1); };
    std::vector<std::string> labels, duals;
    for (int k = m + 1; k <= n; ++k) {
        labels.push_back("y_" + std::to_string(k));
        duals.push_back("l_" + std::to_string(k));
    }
    std::vector<RatMatrix> mats(dim, zeros<Rational>(dim, dim));
    for (int i = m + 1; i <= n; ++i)
        for (int k = m + 1; k <= n; ++k)
            if (k - i >= m + 1) mats[idx(i)](idx(k - i), idx(k)) = Rational(2 * i - k);
    std::vector<Index> order(dim);
    std::iota(order.rbegin(), order.rend(), Index{0});
    return {Representation(alg, std::move(labels), std::move(duals), std::move(mats)), std::move(order)};
}

// ------------------------------------------------------------ tensor fields

FamilyRep tensor_field(const Rational& lambda, const Rational& mu, int m, int n_max)
{
    if (m < 0) throw Error("tensor family needs m >= 0");
    if (n_max < 1) throw Error("tensor family needs N >= 1");
    AlgebraPtr alg = witt_algebra(m, n_max);
    const Index size = n_max + 1;
    std::vector<std::string> labels, duals;
    for (int j = 0; j <= n_max; ++j) {
        labels.push_back("e_" + std::to_string(j));
        duals.push_back("e_" + std::to_string(j) + "*");
    }
    std::vector<RatMatrix> mats(alg->dim(), zeros<Rational>(size, size));
    for (int i = m + 1; i <= n_max; ++i)
        for (int j = 0; j + i <= n_max; ++j)
            mats[i - m - 1](j + i, j) = Rational(j) + mu - Rational(i + 1) * lambda;
    std::vector<Index> order(size);
    std::iota(order.begin(), order.end(), Index{0});
    return {Representation(alg, std::move(labels), std::move(duals), std::move(mats)), std::move(order)};
}

// --------------------------------------------------------------- predictors

Pattern pattern_from_free(Index size, const std::vector<Index>& free)
{
    Pattern p;
    p.coords.assign(size, std::nullopt);
    for (Index i : free) {
        if (i < 0 || i >= size) throw Error("pattern position out of range");
        p.coords[i] = Param{static_cast<std::uint32_t>(i + 1)};
    }
    return p;
}

namespace {

// Every set {lead} ∪ S with S ⊆ optional, as sorted index lists.
void expand(const std::vector<int>& fixed, const std::vector<int>& optional, std::set<std::vector<int>>& out)
{
    const std::size_t k = optional.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<int> s = fixed;
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::size_t{1} << b)) s.push_back(optional[b]);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        out.insert(std::move(s));
    }
}

std::vector<Pattern> to_patterns(const std::set<std::vector<int>>& sets, Index size, auto position)
{
    std::vector<Pattern> out;
    for (const auto& s : sets) {
        std::vector<Index> free;
        for (int v : s) free.push_back(position(v));
        out.push_back(pattern_from_free(size, free));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace

std::vector<Pattern> predicted_witt_patterns(int m, int n)
{
    if (m < 0 || n <= m) throw Error("witt family needs 0 <= m < n");
    std::set<std::vector<int>> sets;
    // Up to 2m+2 the coadjoint action is trivial: every point is normal.
    std::vector<int> low;
    for (int i = m + 1; i <= std::min(n, 2 * m + 2); ++i) low.push_back(i);
    expand({}, low, sets);
    for (int top = 2 * m + 3; top <= n; ++top) {
        std::vector<int> optional;
        for (int i = top - m; i < top; ++i) optional.push_back(i);
        if (top % 2 == 0) optional.push_back(top / 2);
        expand({top}, optional, sets);
    }
    return to_patterns(sets, n - m, [n](int k) { return static_cast<Index>(n - k); });
}

std::vector<Pattern> predicted_tensor_patterns(const Rational& lambda, const Rational& mu, int m, int n_max)
{
    if (m < 0 || n_max < 1) throw Error("tensor family needs m >= 0 and N >= 1");
    auto generic_with_lead = [&](int s) {
        std::set<std::vector<int>> sets;
        std::vector<int> optional;
        for (int i = s + 1; i <= std::min(n_max, s + m); ++i) optional.push_back(i);
        if (!lambda.is_zero()) {
            // Resonance μ + s = (m + k + 1)λ with k a positive integer.
            const Rational k = (mu + Rational(s)) / lambda - Rational(m + 1);
            if (k.sign() > 0 && k.is_integer()) {
                const long extra = s + m + k.to_long();
                if (extra <= n_max) optional.push_back(static_cast<int>(extra));
            }
        }
        expand({s}, optional, sets);
        return sets;
    };
    std::set<std::vector<int>> sets{{}};
    for (int s = 0; s <= n_max; ++s) sets.merge(generic_with_lead(s));
    // λ = 0, μ = -s0 ≤ 0: e_{s0} is fixed by the whole algebra and can sit
    // in front of any general-position form with a later leading term.
    if (lambda.is_zero() && mu.sign() <= 0 && mu.is_integer() && -mu.to_long() <= n_max) {
        const int s0 = static_cast<int>(-mu.to_long());
        std::set<std::vector<int>> extra;
        for (int s = s0 + 1; s <= n_max; ++s)
            for (auto tail : generic_with_lead(s)) {
                tail.insert(tail.begin(), s0);
                extra.insert(std::move(tail));
            }
        sets.merge(extra);
    }
    return to_patterns(sets, n_max + 1, [](int j) { return static_cast<Index>(j); });
}

std::vector<std::vector<Index>> upper4_coadjoint_reference()
{
    return {{1, 5}, {1},       {2, 4, 6}, {2, 4}, {2, 6}, {2}, {3, 4}, {3, 5, 6},
            {3, 5}, {3, 6},    {3},       {4},    {5, 6}, {5}, {6},    {}};
}

// ---------------------------------------------------------------- selectors

namespace {

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

int parse_int(std::string_view s, std::string_view selector)
{
    int v = 0;
    bool negative = !s.empty() && s.front() == '-';
    if (negative) s.remove_prefix(1);
    if (s.empty()) throw ParseError("family selector '" + std::string(selector) + "': empty integer", 0);
    for (char c : s) {
        if (c < '0' || c > '9' || v > 100000)
            throw ParseError("family selector '" + std::string(selector) + "': bad integer '" + std::string(s) + "'", 0);
        v = v * 10 + (c - '0');
    }
    return negative ? -v : v;
}

}  // namespace

FamilyRep select_family(std::string_view selector, FamilyVariant variant)
{
    const auto parts = split(selector, ':');
    const std::string_view name = parts[0];
    auto arity = [&](std::size_t n) {
        if (parts.size() != n + 1)
            throw ParseError("family selector '" + std::string(selector) + "' expects " + std::to_string(n) +
                                 " argument(s)",
                             0);
    };
    auto with_variant = [&](AlgebraPtr alg, bool coadjoint_default) -> FamilyRep {
        const bool co = variant == FamilyVariant::Coadjoint || (variant == FamilyVariant::Default && coadjoint_default);
        std::vector<Index> order(alg->dim());
        std::iota(order.begin(), order.end(), Index{0});
        return {co ? coadjoint(alg) : adjoint(alg), std::move(order)};
    };
    if (name == "heisenberg") {
        arity(0);
        return with_variant(heisenberg(), false);
    }
    if (name == "sl2") {
        arity(0);
        if (variant == FamilyVariant::Default) {
            Representation t = sl2_standard();
            return {t, {0, 1}};
        }
        return with_variant(sl2_algebra(), false);
    }
    if (name == "upper") {
        arity(1);
        const int n = parse_int(parts[1], selector);
        return variant == FamilyVariant::Coadjoint ? upper_coadjoint(n) : upper_adjoint(n);
    }
    if (name == "witt") {
        arity(2);
        const int m = parse_int(parts[1], selector), n = parse_int(parts[2], selector);
        return variant == FamilyVariant::Adjoint ? witt_adjoint(m, n) : witt_coadjoint(m, n);
    }
    if (name == "tensor") {
        arity(4);
        if (variant != FamilyVariant::Default) throw ParseError("tensor family has no adjoint/coadjoint variant", 0);
        Rational lambda, mu;
        try {
            lambda = Rational::parse(parts[1]);
            mu = Rational::parse(parts[2]);
        } catch (const Error& e) {
            throw ParseError("family selector '" + std::string(selector) + "': " + e.what(), 0);
        }
        return tensor_field(lambda, mu, parse_int(parts[3], selector), parse_int(parts[4], selector));
    }
    throw ParseError("unknown family '" + std::string(name) + "' (expected heisenberg, sl2, upper:N, witt:M:N or tensor:L:U:M:N)", 0);
}

}  // namespace liediag
