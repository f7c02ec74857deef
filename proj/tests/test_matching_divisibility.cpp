#include <doctest.h>

#include <matchparity/divisibility.hpp>
#include <matchparity/generators.hpp>
#include <matchparity/matching.hpp>

#include <set>

#include "fixtures.hpp"

using namespace mpar;

TEST_CASE("small matching counts") {
    CHECK(count_matchings(GridRegion::rectangle(2, 3).graph()) == 3);
    CHECK(count_matchings(GridRegion::rectangle(2, 2).graph()) == 2);
    CHECK(count_matchings(Graph{}) == 1);
    CHECK(count_matchings(Graph(1)) == 0);
    CHECK(count_matchings(complete_bipartite(3, 3)) == 6);
    CHECK(count_matchings(fixtures::cube()) == 9);
    CHECK(count_matchings(GridRegion::rectangle(4, 4).graph()) == 36);
    CHECK(count_matchings(GridRegion::rectangle(4, 9).graph()) == 6336);
}

TEST_CASE("parallel copies count separately") {
    Graph g(2);
    g.add_edge(0, 1, 3);
    CHECK(count_matchings(g) == 3);
    auto ms = enumerate_matchings(g);
    CHECK(ms.size() == 3);
    for (const auto& m : ms) CHECK(is_perfect_matching(g, m));
}

TEST_CASE("enumeration agrees with counting") {
    Rng rng(3);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_multigraph(rng, 2 + 2 * static_cast<int>(rng() % 5), static_cast<int>(rng() % 25), t % 2 == 0);
        auto ms = enumerate_matchings(g);
        CHECK(BigInt(static_cast<unsigned long>(ms.size())) == count_matchings(g));
        std::set<Matching> uniq(ms.begin(), ms.end());
        CHECK(uniq.size() == ms.size());
        CHECK((matching_parity(g) == Parity::Odd) == (ms.size() % 2 == 1));
    }
}

TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(count_matchings(GridRegion::rectangle(6, 7).graph(), 36), CapExceeded);
}

TEST_CASE("two-adic valuation") {
    CHECK(two_adic_valuation(BigInt(6336)) == 6u);
    CHECK(two_adic_valuation(BigInt(1)) == 0u);
    CHECK_FALSE(two_adic_valuation(BigInt(0)));
}

TEST_CASE("bareiss determinant") {
    CHECK(determinant(IntMatrix{{2, 0}, {0, 3}}) == 6);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(determinant(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
}

TEST_CASE("smith normal form decomposes and divides") {
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix a = random_int_matrix(rng, r, c, -9, 9);
        auto snf = smith_normal_form(a);
        CHECK(snf.S * snf.D * snf.T == a);
        CHECK(is_smith_form(snf.D));
        if (r == c) {
            CHECK(abs(determinant(snf.S)) == 1);
            CHECK(abs(determinant(snf.T)) == 1);
        }
        CHECK(two_nullity(a) == two_nullity_snf(a));
    }
}

TEST_CASE("kasteleyn count on lattice regions") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            GridRegion r = GridRegion::rectangle(m, n);
            CHECK(count_matchings_kasteleyn(r) == count_matchings(r.graph()));
        }
    GridRegion l = fixtures::l_shape();
    CHECK(count_matchings_kasteleyn(l) == count_matchings(l.graph()));
    GridRegion ring = fixtures::box(0, 3, 0, 3);
    std::vector<Point> pts;
    for (Point p : ring.points())
        if (!(p.x >= 1 && p.x <= 2 && p.y >= 1 && p.y <= 2)) pts.push_back(p);
    CHECK_THROWS_AS(count_matchings_kasteleyn(GridRegion(pts)), UnsupportedInput);
}

TEST_CASE("divisibility report for grid regions") {
    auto rep = divisibility_report(GridRegion::rectangle(4, 9));
    CHECK(rep.status == GuaranteeStatus::Proven);
    CHECK(rep.dim_C_B == 2u);
    CHECK(rep.guaranteed_exponent == 2u);
    CHECK(rep.target == "m_G");
    REQUIRE(rep.exact_count);
    CHECK(*rep.exact_count == 6336);
    CHECK(rep.exact_valuation == 6u);

    auto odd = divisibility_report(GridRegion::rectangle(2, 3));
    CHECK(odd.dim_C_B == 0u);
    CHECK(*odd.exact_count == 3);

    auto zero = divisibility_report(GridRegion::rectangle(3, 3));
    CHECK(zero.status == GuaranteeStatus::Vacuous);
    CHECK_FALSE(zero.guaranteed_exponent);
}

TEST_CASE("divisibility report for general graphs") {
    auto k33 = divisibility_report(complete_bipartite(3, 3));
    CHECK(k33.dim_C_B == 2u);
    CHECK(*k33.exact_count == 6);
    CHECK(k33.status == GuaranteeStatus::Invalid);
    CHECK(!k33.caveat.empty());

    auto cube = divisibility_report(fixtures::cube());
    CHECK(cube.status != GuaranteeStatus::Proven);

    auto plain = divisibility_report(fixtures::six_vertex_example());
    CHECK(plain.target == "m_G^2");
    CHECK(plain.dim_C == 2);
}
