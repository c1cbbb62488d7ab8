#include <doctest.h>

#include <random>

#include "liediag/error.hpp"
#include "liediag/families.hpp"
#include "oracles.hpp"

using namespace liediag;

namespace {

// Jacobi check on a raw structure-constant table, independent of LieAlgebra.
bool jacobi_holds(Index n, const std::vector<BracketEntry>& entries)
{
    std::vector<std::vector<RatVector>> br(n, std::vector<RatVector>(n, RatVector::Constant(n, Rational(0))));
    for (const auto& e : entries) {
        br[e.left][e.right] = e.result;
        br[e.right][e.left] = -e.result;
    }
    auto bracket = [&](const RatVector& x, const RatVector& y) {
        RatVector out = RatVector::Constant(n, Rational(0));
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                if (!x(i).is_zero() && !y(j).is_zero()) out += x(i) * y(j) * br[i][j];
        return out;
    };
    auto unit = [&](Index i) {
        RatVector v = RatVector::Constant(n, Rational(0));
        v(i) = Rational(1);
        return v;
    };
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k) {
                const RatVector s = bracket(unit(i), br[j][k]) + bracket(unit(j), br[k][i]) + bracket(unit(k), br[i][j]);
                for (Index a = 0; a < n; ++a)
                    if (!s(a).is_zero()) return false;
            }
    return true;
}

std::vector<BracketEntry> entries_of(const LieAlgebra& alg)
{
    std::vector<BracketEntry> out;
    for (const auto& [key, value] : alg.brackets()) out.push_back({key.first, key.second, value});
    return out;
}

}  // namespace

TEST_SUITE("lie_core") {

TEST_CASE("Heisenberg algebra")
{
    const AlgebraPtr h = heisenberg();
    CHECK(h->dim() == 3);
    CHECK(h->bracket(0, 1) == h->unit(2));
    CHECK(h->bracket(1, 0) == RatVector(-h->unit(2)));
    CHECK(is_zero(h->bracket(0, 2)));
    CHECK(nilpotency_class(*h) == 2);
    CHECK(validate_representation(adjoint(h)).ok);
    CHECK(validate_representation(coadjoint(h)).ok);
}

TEST_CASE("sl(2) brackets come out of the matrices")
{
    const AlgebraPtr s = sl2_algebra();
    RatVector h(3), xp(3), xm(3);
    h << Rational(0), Rational(0), Rational(1);
    xp << Rational(1), Rational(0), Rational(0);
    xm << Rational(0), Rational(1), Rational(0);
    CHECK(s->bracket(0, 1) == h);
    CHECK(s->bracket(0, 2) == RatVector(Rational(2) * xp));
    CHECK(s->bracket(1, 2) == RatVector(Rational(-2) * xm));
    CHECK_FALSE(nilpotency_class(*s).has_value());
    CHECK(validate_representation(sl2_standard()).ok);
}

TEST_CASE("construction errors")
{
    RatVector r = zeros<Rational>(2);
    r(0) = Rational(1);
    CHECK_THROWS_AS(new_lie_algebra({"A", "B"}, {{0, 0, r}}), Error);
    CHECK_THROWS_AS(new_lie_algebra({"A", "B"}, {{0, 2, r}}), Error);
    CHECK_THROWS_AS(new_lie_algebra({"A", "B"}, {{0, 1, zeros<Rational>(3)}}), Error);
    CHECK_THROWS_AS(new_lie_algebra({"A", "B"}, {{0, 1, r}, {1, 0, r}}), Error);
    CHECK_NOTHROW(new_lie_algebra({"A", "B"}, {{0, 1, r}, {1, 0, RatVector(-r)}}));
}

TEST_CASE("Jacobi failures are detected and named")
{
    // [A,B] = C, [B,C] = A, [A,C] = A fails Jacobi on (A, B, C).
    std::vector<BracketEntry> bad{{0, 1, RatVector::Unit(3, 2)}, {1, 2, RatVector::Unit(3, 0)},
                                  {0, 2, RatVector::Unit(3, 0)}};
    REQUIRE_FALSE(jacobi_holds(3, bad));
    try {
        new_lie_algebra({"A", "B", "C"}, bad);
        FAIL("expected a Jacobi error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()) == "Jacobi identity fails on (A, B, C)");
    }
}

TEST_CASE("perturbed structure constants: library and oracle agree on Jacobi")
{
    std::mt19937 rng(17);
    const AlgebraPtr base = upper_algebra(4);
    int rejected = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto entries = entries_of(*base);
        auto& e = entries[rng() % entries.size()];
        e.result(static_cast<Index>(rng() % 6)) += Rational(1 + static_cast<int>(rng() % 2));
        const bool ok = jacobi_holds(6, entries);
        bool built = true;
        try {
            new_lie_algebra(base->labels(), entries);
        } catch (const Error& err) {
            built = false;
            CHECK(std::string(err.what()).starts_with("Jacobi identity fails on ("));
        }
        CHECK(built == ok);
        rejected += !built;
    }
    CHECK(rejected > 0);
}

TEST_CASE("nilpotency class of strictly upper triangular matrices")
{
    for (int n = 2; n <= 6; ++n) CHECK(nilpotency_class(*upper_algebra(n)) == n - 1);
    CHECK(nilpotency_class(*witt_algebra(0, 0)) == 0);
    CHECK(nilpotency_class(*witt_algebra(0, 5)) == 4);  // series: l_3.., l_4.., l_5, 0
}

TEST_CASE("coadjoint is the negative transpose of adjoint")
{
    const AlgebraPtr u = upper_algebra(4);
    const Representation ad = adjoint(u), co = coadjoint(u);
    for (Index a = 0; a < u->dim(); ++a) CHECK(co.matrix(a) == RatMatrix(-ad.matrix(a).transpose()));
    CHECK(co.labels() == u->dual_labels());
    CHECK(co.dual_labels() == u->labels());
    CHECK(dual_rep(dual_rep(ad)) == ad);
}

TEST_CASE("validate_representation reports the failing pairs")
{
    Representation good = sl2_standard();
    auto mats = good.matrices();
    mats[2] = identity<Rational>(2);
    const Representation bad(good.algebra_ptr(), good.labels(), good.dual_labels(), mats);
    const ValidationReport r = validate_representation(bad);
    CHECK_FALSE(r.ok);
    // With H acting as the identity, [X_+, H] = 2X_+ is violated, and so is
    // [X_+, X_-] = H (the commutator is diag(1, -1), not the identity).
    CHECK(std::find(r.failures.begin(), r.failures.end(), std::make_pair(Index{0}, Index{2})) != r.failures.end());
    CHECK(r.failures.front() == std::make_pair(Index{0}, Index{1}));
    CHECK(r.message.starts_with("homomorphism property fails on (X_+, X_-)"));
}

TEST_CASE("sums and tensor products are representations")
{
    const Representation s = sl2_standard();
    CHECK(validate_representation(direct_sum(s, s)).ok);
    const Representation t = tensor_product(s, s);
    CHECK(t.dim() == 4);
    CHECK(t.labels()[1] == "u⊗v");
    CHECK(validate_representation(t).ok);
    CHECK(validate_representation(tensor_product(adjoint(heisenberg()), coadjoint(heisenberg()))).ok);
    CHECK_THROWS_AS(direct_sum(s, adjoint(heisenberg())), Error);
    CHECK(validate_representation(zero_rep(heisenberg(), 3)).ok);
}

TEST_CASE("permuted representations")
{
    const FamilyRep co = upper_coadjoint(4);
    const Representation p = co.rep.permuted(co.ordering);
    CHECK(p.labels()[0] == "a_14");
    CHECK(validate_representation(p).ok);
    CHECK_THROWS_AS(co.rep.permuted({0, 0, 1, 2, 3, 4}), Error);
}

}  // TEST_SUITE
