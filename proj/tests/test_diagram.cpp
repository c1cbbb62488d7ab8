#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "liediag/error.hpp"
#include "liediag/families.hpp"
#include "oracles.hpp"

using namespace liediag;

namespace {

LinForm dual(const AlgebraPtr& alg, Index a, long c = 1) { return LinForm::unit(alg->dim(), a, Poly(c)); }

std::string error_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

// Entry (j, i) of the matrix of T(e_a) read straight off the module, with
// no diagram code involved.
Rational phi(const Representation& t, Index a, Index i, Index j) { return t.matrix(a)(j, i); }

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("Heisenberg adjoint diagram")
{
    const AlgebraPtr h = heisenberg();
    const Diagram d = build_diagram(adjoint(h));
    CHECK(d.size() == 3);
    CHECK(d.edges().size() == 2);
    REQUIRE(d.edge(1, 2));
    CHECK(*d.edge(1, 2) == dual(h, 0));
    REQUIRE(d.edge(0, 2));
    CHECK(*d.edge(0, 2) == dual(h, 1, -1));
    CHECK(d.edge(0, 2)->str(h->dual_labels()) == "-y");
    CHECK(longest_path(d) == 1);
    CHECK(nilpotency_bound(d) == 2);
}

TEST_CASE("coadjoint diagram and dualization")
{
    const AlgebraPtr h = heisenberg();
    const Diagram co = build_diagram(coadjoint(h));
    CHECK(co.vertices()[0].label == "x");
    REQUIRE(co.edge(2, 1));
    CHECK(*co.edge(2, 1) == dual(h, 0, -1));
    REQUIRE(co.edge(2, 0));
    CHECK(*co.edge(2, 0) == dual(h, 1));
    CHECK(co.edges().size() == 2);
    CHECK(dual_diagram(build_diagram(adjoint(h))) == co);
    CHECK(dual_diagram(co) == build_diagram(adjoint(h)));
}

TEST_CASE("dual diagram is the diagram of the dual representation")
{
    for (const Representation& t : {sl2_standard(), adjoint(upper_algebra(4)), adjoint(sl2_algebra()),
                                    tensor_field(Rational(1, 2), Rational(1, 3), 0, 4).rep})
        CHECK(dual_diagram(build_diagram(t)) == build_diagram(dual_rep(t)));
}

TEST_CASE("labels match the matrix entries")
{
    const Representation t = tensor_field(Rational(-1), Rational(2), 0, 5).rep;
    const Diagram d = build_diagram(t);
    for (Index i = 0; i < t.dim(); ++i)
        for (Index j = 0; j < t.dim(); ++j) {
            RatVector expect(t.algebra().dim());
            for (Index a = 0; a < expect.size(); ++a) expect(a) = phi(t, a, i, j);
            const LinForm* e = d.edge(i, j);
            if (is_zero(expect))
                CHECK(e == nullptr);
            else
                CHECK((e && e->dense_concrete() == expect));
        }
}

TEST_CASE("representation round trip over orderings")
{
    std::mt19937 rng(2);
    for (const Representation& t : {adjoint(upper_algebra(4)), coadjoint(heisenberg()), sl2_standard(),
                                    adjoint(witt_algebra(0, 6))}) {
        std::vector<Index> order(t.dim());
        std::iota(order.begin(), order.end(), Index{0});
        for (int k = 0; k < 5; ++k) {
            std::shuffle(order.begin(), order.end(), rng);
            const Diagram d = build_diagram(t, order);
            CHECK(to_representation(d) == t.permuted(order));
            CHECK(permute_vertices(build_diagram(t), order) == d);
        }
    }
    CHECK_THROWS_AS(build_diagram(sl2_standard(), {0, 0}), Error);
}

TEST_CASE("to_representation rejects non-representations")
{
    const AlgebraPtr h = heisenberg();
    Diagram d(h, {{"a", "a*"}, {"b", "b*"}});
    d.set_edge(0, 1, dual(h, 0));
    d.set_edge(1, 0, dual(h, 1));
    CHECK(error_of([&] { to_representation(d); }).starts_with("diagram is not the diagram of a representation"));
    Diagram p(h, {{"a", "a*"}, {"b", "b*"}});
    LinForm withc(3);
    withc.set(0, Poly::param(Param{1}));
    p.set_edge(0, 1, withc);
    CHECK_THROWS_AS(to_representation(p), Error);
}

TEST_CASE("sub and quotient diagrams")
{
    const Diagram d = build_diagram(adjoint(heisenberg()));
    const Diagram sub = subdiagram(d, {2});
    CHECK(sub.size() == 1);
    CHECK(sub.edges().empty());
    CHECK(error_of([&] { subdiagram(d, {0}); }) == "not a subdiagram: edge (X, Z) leaves the vertex set");
    const Diagram q = quotient_diagram(d, {0, 1});
    CHECK(q.size() == 2);
    CHECK(q.edges().empty());
    CHECK(error_of([&] { quotient_diagram(d, {2}); }) == "not a quotient diagram: edge (X, Z) enters the vertex set");
    CHECK(complement(d, {2}) == q);
    CHECK(complement_vertices(d, {2}) == std::vector<Index>{0, 1});
}

TEST_CASE("complement of a subdiagram is a quotient and back")
{
    const Diagram d = build_diagram(adjoint(upper_algebra(4)), upper_adjoint(4).ordering);
    // Closed under outgoing edges: any set containing all successors.
    int checked = 0;
    for (unsigned mask = 1; mask + 1 < (1u << d.size()); ++mask) {
        std::vector<Index> j;
        for (Index v = 0; v < d.size(); ++v)
            if (mask & (1u << v)) j.push_back(v);
        bool closed = true;
        for (const auto& [e, label] : d.edges())
            if ((mask >> e.first & 1) && !(mask >> e.second & 1)) closed = false;
        if (!closed) {
            CHECK_THROWS_AS(subdiagram(d, j), Error);
            continue;
        }
        const Diagram sub = subdiagram(d, j);
        CHECK(validate_representation(to_representation(sub)).ok);
        const auto rest = complement_vertices(d, j);
        const Diagram q = quotient_diagram(d, rest);
        CHECK(validate_representation(to_representation(q)).ok);
        CHECK(complement_vertices(d, rest) == j);
        CHECK(subdiagram(d, complement_vertices(d, rest)) == sub);
        ++checked;
    }
    CHECK(checked > 3);
}

TEST_CASE("longest path")
{
    const AlgebraPtr h = heisenberg();
    CHECK(longest_path(Diagram(h, {{"a", "a*"}, {"b", "b*"}})) == 0);
    CHECK(longest_path(build_diagram(adjoint(upper_algebra(4)))) == 2);
    CHECK(nilpotency_bound(build_diagram(adjoint(upper_algebra(4)))) == 3);
    CHECK_FALSE(longest_path(build_diagram(adjoint(sl2_algebra()))).has_value());
    Diagram loop(h, {{"a", "a*"}});
    loop.set_edge(0, 0, dual(h, 0));
    CHECK_FALSE(longest_path(loop).has_value());
}

TEST_CASE("edges and cycles of the adjoint diagram bound the nilpotency class")
{
    std::vector<AlgebraPtr> algebras{heisenberg(), sl2_algebra()};
    for (int n = 3; n <= 6; ++n) algebras.push_back(upper_algebra(n));
    for (int n = 2; n <= 9; ++n) algebras.push_back(witt_algebra(0, n));
    for (int n = 4; n <= 9; ++n) algebras.push_back(witt_algebra(1, n));
    for (const auto& alg : algebras) {
        const Diagram d = build_diagram(adjoint(alg));
        const auto cls = nilpotency_class(*alg);
        if (d.edges().empty()) {
            for (const auto& [key, value] : alg->brackets()) CHECK(is_zero(value));
            CHECK(cls == 1);
        }
        if (const auto len = longest_path(d)) {
            REQUIRE(cls.has_value());
            CHECK(*cls <= *len + 1);
        }
    }
    CHECK(nilpotency_class(*witt_algebra(1, 4)) == 1);
    CHECK(build_diagram(adjoint(witt_algebra(1, 4))).edges().empty());
}

TEST_CASE("product is the diagram of the tensor product")
{
    const Representation s = sl2_standard();
    const Diagram d = build_diagram(s);
    const Diagram p = product(d, d);
    CHECK(p == build_diagram(tensor_product(s, s)));
    CHECK(p.vertices()[1].label == "u⊗v");
    REQUIRE(p.edge(0, 0));
    CHECK(*p.edge(0, 0) == LinForm::unit(3, 2, Poly(2)));
    CHECK_FALSE(p.edge(1, 1));  // h and -h cancel

    const Representation ad = adjoint(heisenberg()), co = coadjoint(heisenberg());
    CHECK(product(build_diagram(ad), build_diagram(co)) == build_diagram(tensor_product(ad, co)));
}

TEST_CASE("disjoint union is the diagram of the direct sum")
{
    const Representation ad = adjoint(heisenberg()), co = coadjoint(heisenberg());
    CHECK(disjoint_union(build_diagram(ad), build_diagram(co)) == build_diagram(direct_sum(ad, co)));
    const Diagram d = build_diagram(ad);
    const Diagram u = disjoint_union(d, d);
    CHECK(u.size() == 6);
    CHECK(u.edges().size() == 4);
    CHECK(u.edge(4, 5));
    CHECK_THROWS_AS(disjoint_union(d, build_diagram(sl2_standard())), Error);
}

TEST_CASE("triangularity")
{
    const Diagram co = build_diagram(coadjoint(heisenberg()));
    CHECK_FALSE(is_triangular(co));
    CHECK(first_violating_edge(co, true) == Diagram::Edge{2, 0});
    const Diagram zyx = permute_vertices(co, {2, 1, 0});
    CHECK(is_strictly_triangular(zyx));
    CHECK(is_triangular(zyx));
    const Diagram s = build_diagram(sl2_standard());
    CHECK_FALSE(is_triangular(s));
    CHECK_FALSE(is_strictly_triangular(s));
    Diagram diag(heisenberg(), {{"a", "a*"}, {"b", "b*"}});
    diag.set_edge(0, 0, LinForm::unit(3, 2));
    diag.set_edge(0, 1, LinForm::unit(3, 0));
    CHECK(is_triangular(diag));
    CHECK_FALSE(is_strictly_triangular(diag));
}

TEST_CASE("set_edge and add_to_edge")
{
    const AlgebraPtr h = heisenberg();
    Diagram d(h, {{"a", "a*"}, {"b", "b*"}});
    d.add_to_edge(0, 1, dual(h, 0));
    d.add_to_edge(0, 1, dual(h, 1));
    CHECK(d.edge(0, 1)->str(h->dual_labels()) == "x + y");
    d.add_to_edge(0, 1, -(dual(h, 0) + dual(h, 1)));
    CHECK(d.edges().empty());
    CHECK_THROWS_AS(d.set_edge(0, 2, dual(h, 0)), Error);
    CHECK_THROWS_AS(d.set_edge(0, 1, LinForm::unit(2, 0)), Error);
}

}  // TEST_SUITE
