#include <doctest.h>

#include "liediag/error.hpp"
#include "liediag/families.hpp"

using namespace liediag;

namespace {

std::vector<std::string> free_labels(const Pattern& p, const Diagram& d)
{
    std::vector<std::string> out;
    for (Index i = 0; i < p.size(); ++i)
        if (p.is_free(i)) out.push_back(d.vertices()[i].label);
    return out;
}

Index vertex_of(const Diagram& d, const std::string& label)
{
    for (Index i = 0; i < d.size(); ++i)
        if (d.vertices()[i].label == label) return i;
    FAIL("no vertex " << label);
    return -1;
}

std::string y(int i) { return "y_" + std::to_string(i); }
std::string e(int j) { return "e_" + std::to_string(j); }

}  // namespace

TEST_SUITE("families") {

TEST_CASE("every family is a representation")
{
    for (int n = 2; n <= 6; ++n) {
        CHECK(validate_representation(upper_adjoint(n).rep).ok);
        CHECK(validate_representation(upper_coadjoint(n).rep).ok);
    }
    for (int m = 0; m <= 2; ++m)
        for (int n = m + 1; n <= 9; ++n) {
            CHECK(validate_representation(witt_adjoint(m, n).rep).ok);
            CHECK(validate_representation(witt_coadjoint(m, n).rep).ok);
        }
    for (const Rational& lambda : {Rational(0), Rational(1), Rational(-1, 2), Rational(2, 3)})
        for (const Rational& mu : {Rational(0), Rational(-2), Rational(5, 2), Rational(3)})
            CHECK(validate_representation(tensor_field(lambda, mu, 1, 6).rep).ok);
}

TEST_CASE("family orderings are strictly triangular")
{
    for (int n = 2; n <= 6; ++n) {
        CHECK(is_strictly_triangular(upper_adjoint(n).diagram()));
        CHECK(is_strictly_triangular(upper_coadjoint(n).diagram()));
    }
    CHECK(is_strictly_triangular(witt_coadjoint(0, 8).diagram()));
    CHECK(is_strictly_triangular(tensor_field(Rational(1), Rational(2), 0, 6).diagram()));
}

TEST_CASE("upper triangular orderings")
{
    const Diagram ad = upper_adjoint(4).diagram();
    std::vector<std::string> labels;
    for (const auto& v : ad.vertices()) labels.push_back(v.label);
    CHECK(labels == std::vector<std::string>{"E_34", "E_23", "E_24", "E_12", "E_13", "E_14"});
    const Diagram co = upper_coadjoint(4).diagram();
    labels.clear();
    for (const auto& v : co.vertices()) labels.push_back(v.label);
    CHECK(labels == std::vector<std::string>{"a_14", "a_13", "a_12", "a_24", "a_23", "a_34"});
    CHECK(co == permute_vertices(build_diagram(coadjoint(upper_algebra(4))), upper_coadjoint(4).ordering));
}

TEST_CASE("adjoint diagram of the 4x4 example")
{
    // Edges of the n(4) adjoint diagram, x_1..x_6 in the family order.
    const Diagram d = upper_adjoint(4).diagram();
    const auto& duals = d.algebra().dual_labels();
    auto label = [&](Index i, Index j) { return d.edge(i - 1, j - 1) ? d.edge(i - 1, j - 1)->str(duals) : "none"; };
    CHECK(label(1, 3) == "a_23");
    CHECK(label(1, 6) == "a_13");
    CHECK(label(2, 3) == "-a_34");
    CHECK(label(2, 5) == "a_12");
    CHECK(label(3, 6) == "a_12");
    CHECK(label(4, 5) == "-a_23");
    CHECK(label(4, 6) == "-a_24");
    CHECK(label(5, 6) == "-a_34");
    CHECK(d.edges().size() == 8);
}

TEST_CASE("coadjoint diagram of the 4x4 example")
{
    const Diagram d = upper_coadjoint(4).diagram();
    const auto& duals = d.algebra().dual_labels();
    auto label = [&](Index i, Index j) { return d.edge(i - 1, j - 1) ? d.edge(i - 1, j - 1)->str(duals) : "none"; };
    CHECK(label(1, 2) == "a_34");
    CHECK(label(1, 3) == "a_24");
    CHECK(label(1, 4) == "-a_12");
    CHECK(label(1, 6) == "-a_13");
    CHECK(label(2, 3) == "a_23");
    CHECK(label(2, 5) == "-a_12");
    CHECK(label(4, 5) == "a_34");
    CHECK(label(4, 6) == "-a_23");
    CHECK(d.edges().size() == 8);
}

TEST_CASE("witt coadjoint is the dual of the adjoint")
{
    for (int m = 0; m <= 2; ++m)
        for (int n = m + 1; n <= 8; ++n) {
            const FamilyRep co = witt_coadjoint(m, n);
            CHECK(co.rep == coadjoint(witt_algebra(m, n)));
            CHECK(co.diagram() == permute_vertices(dual_diagram(witt_adjoint(m, n).diagram()), co.ordering));
        }
}

TEST_CASE("witt coadjoint edges follow the closed formula")
{
    // Edge y_k → y_j iff k > j + m and k ≠ 2j, labeled (k - 2j) y_{k-j}.
    for (int m = 0; m <= 2; ++m)
        for (int n = m + 1; n <= 10; ++n) {
            const Diagram d = witt_coadjoint(m, n).diagram();
            const auto& duals = d.algebra().dual_labels();
            for (int k = m + 1; k <= n; ++k)
                for (int j = m + 1; j <= n; ++j) {
                    const LinForm* w = d.edge(vertex_of(d, y(k)), vertex_of(d, y(j)));
                    if (k > j + m && k != 2 * j) {
                        REQUIRE(w);
                        const int c = k - 2 * j;
                        const std::string want = (c == 1 ? "" : c == -1 ? "-" : std::to_string(c) + "*") + y(k - j);
                        CHECK(w->str(duals) == want);
                    } else {
                        CHECK(w == nullptr);
                    }
                }
        }
    const Diagram d = witt_coadjoint(0, 3).diagram();
    const auto& duals = d.algebra().dual_labels();
    CHECK(d.edge(vertex_of(d, "y_3"), vertex_of(d, "y_1"))->str(duals) == "y_2");
    CHECK(d.edge(vertex_of(d, "y_3"), vertex_of(d, "y_2"))->str(duals) == "-y_1");
    CHECK_FALSE(d.edge(vertex_of(d, "y_2"), vertex_of(d, "y_1")));
}

TEST_CASE("tensor field edges follow the closed formula")
{
    // Edge (j, k) iff k > j + m and j + μ ≠ (k - j + 1)λ, labeled
    // (j + μ - (k - j + 1)λ) y_{k-j}.
    for (const auto& [lambda, mu] : std::vector<std::pair<Rational, Rational>>{
             {Rational(1), Rational(3)}, {Rational(0), Rational(-2)}, {Rational(1, 2), Rational(1, 3)}})
        for (int m = 0; m <= 2; ++m) {
            const Diagram d = tensor_field(lambda, mu, m, 7).diagram();
            for (int j = 0; j <= 7; ++j)
                for (int k = 0; k <= 7; ++k) {
                    const LinForm* w = d.edge(j, k);
                    const Rational c = Rational(j) + mu - Rational(k - j + 1) * lambda;
                    if (k > j + m && !c.is_zero()) {
                        REQUIRE(w);
                        CHECK(*w == LinForm::unit(d.algebra().dim(), k - j - m - 1, Poly(c)));
                    } else {
                        CHECK(w == nullptr);
                    }
                }
        }
}

TEST_CASE("witt general positions")
{
    auto gp = [](int m, int n) {
        const Diagram d = witt_coadjoint(m, n).diagram();
        return free_labels(general_position(d), d);
    };
    CHECK(gp(0, 5) == std::vector<std::string>{"y_5"});
    CHECK(gp(0, 4) == std::vector<std::string>{"y_4", "y_2"});
    CHECK(gp(0, 2) == std::vector<std::string>{"y_2", "y_1"});
    CHECK(gp(1, 4) == std::vector<std::string>{"y_4", "y_3", "y_2"});
    CHECK(gp(1, 7) == std::vector<std::string>{"y_7", "y_6"});
    CHECK(gp(1, 8) == std::vector<std::string>{"y_8", "y_7", "y_4"});
    CHECK(gp(2, 10) == std::vector<std::string>{"y_10", "y_9", "y_8", "y_5"});
}

TEST_CASE("tensor field general positions")
{
    auto gp = [](const Rational& lambda, const Rational& mu, int m, int n) {
        const Diagram d = tensor_field(lambda, mu, m, n).diagram();
        return free_labels(general_position(d), d);
    };
    CHECK(gp(Rational(1, 2), Rational(1, 3), 0, 6) == std::vector<std::string>{e(0)});
    CHECK(gp(Rational(1, 2), Rational(1, 3), 2, 6) == std::vector<std::string>{e(0), e(1), e(2)});
    // μ = (m + k + 1)λ: the extra coordinate e_{m+k}.
    CHECK(gp(Rational(1), Rational(3), 0, 6) == std::vector<std::string>{e(0), e(2)});
    CHECK(gp(Rational(1), Rational(5), 1, 6) == std::vector<std::string>{e(0), e(1), e(4)});
    CHECK(gp(Rational(-1, 2), Rational(-3, 2), 0, 6) == std::vector<std::string>{e(0), e(2)});
    // Resonance beyond the truncation leaves only the generic part.
    CHECK(gp(Rational(1), Rational(9), 0, 6) == std::vector<std::string>{e(0)});
}

TEST_CASE("predictors match enumeration on small cases")
{
    for (int m = 0; m <= 1; ++m)
        for (int n = m + 1; n <= 7; ++n) {
            std::vector<std::vector<bool>> got, want;
            for (const auto& p : enumerate_normal_forms(witt_coadjoint(m, n).diagram())) got.push_back(p.free_positions());
            for (const auto& p : predicted_witt_patterns(m, n)) want.push_back(p.free_positions());
            CHECK(got == want);
        }
    for (const auto& [lambda, mu] : std::vector<std::pair<Rational, Rational>>{
             {Rational(1), Rational(3)}, {Rational(0), Rational(-2)}, {Rational(0), Rational(1)}, {Rational(1, 2), Rational(1, 3)}}) {
        std::vector<std::vector<bool>> got, want;
        for (const auto& p : enumerate_normal_forms(tensor_field(lambda, mu, 0, 5).diagram())) got.push_back(p.free_positions());
        for (const auto& p : predicted_tensor_patterns(lambda, mu, 0, 5)) want.push_back(p.free_positions());
        CHECK(got == want);
    }
}

TEST_CASE("witt predictor by hand for m = 0, n = 4")
{
    // {}, {y_1}, {y_2}, {y_1, y_2}; then lead y_3 alone; lead y_4 with an
    // optional y_2.
    std::vector<std::vector<bool>> want{{false, false, true, true}, {false, false, true, false},
                                        {false, false, false, true}, {false, true, false, false},
                                        {true, false, true, false},  {true, false, false, false},
                                        {false, false, false, false}};
    std::sort(want.begin(), want.end(), std::greater<>());
    std::vector<std::vector<bool>> got;
    for (const auto& p : predicted_witt_patterns(0, 4)) got.push_back(p.free_positions());
    // Vertex order is y_4, y_3, y_2, y_1.
    CHECK(got == want);
}

TEST_CASE("pattern_from_free")
{
    const Pattern p = pattern_from_free(4, {0, 2});
    CHECK(p.free_positions() == std::vector<bool>{true, false, true, false});
    CHECK(p.coords[2]->name() == "c_3");
    CHECK_THROWS_AS(pattern_from_free(2, {2}), Error);
}

TEST_CASE("family selectors")
{
    CHECK(select_family("heisenberg").rep == adjoint(heisenberg()));
    CHECK(select_family("heisenberg", FamilyVariant::Coadjoint).rep == coadjoint(heisenberg()));
    CHECK(select_family("sl2").rep == sl2_standard());
    CHECK(select_family("sl2", FamilyVariant::Adjoint).rep == adjoint(sl2_algebra()));
    CHECK(select_family("upper:4").diagram() == upper_adjoint(4).diagram());
    CHECK(select_family("upper:4", FamilyVariant::Coadjoint).diagram() == upper_coadjoint(4).diagram());
    CHECK(select_family("witt:0:4").diagram() == witt_coadjoint(0, 4).diagram());
    CHECK(select_family("witt:0:4", FamilyVariant::Adjoint).diagram() == witt_adjoint(0, 4).diagram());
    CHECK(select_family("tensor:1/2:-3:0:5").diagram() ==
          tensor_field(Rational(1, 2), Rational(-3), 0, 5).diagram());

    CHECK_THROWS_AS(select_family("upper"), ParseError);
    CHECK_THROWS_AS(select_family("upper:x"), ParseError);
    CHECK_THROWS_AS(select_family("witt:0"), ParseError);
    CHECK_THROWS_AS(select_family("tensor:a:b:0:5"), ParseError);
    CHECK_THROWS_AS(select_family("tensor:1:1:0:5", FamilyVariant::Adjoint), ParseError);
    CHECK_THROWS_WITH_AS(select_family("so3"), doctest::Contains("unknown family 'so3'"), ParseError);
    CHECK_THROWS_AS(select_family("witt:2:1"), Error);
}

}  // TEST_SUITE
