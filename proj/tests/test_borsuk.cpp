#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ghtk/borsuk.hpp"
#include "ghtk/brute.hpp"
#include "ghtk/error.hpp"
#include "test_oracles.hpp"

using ghtk::Error;
using ghtk::FiniteMetricSpace;

namespace {

FiniteMetricSpace square() {
    ghtk::GenSpec s;
    s.kind = ghtk::GenKind::polygon;
    s.n = 4;
    return ghtk::generate(s);
}

// No block of the witness may contain a diametrical pair.
void check_witness(const FiniteMetricSpace& x, const ghtk::BorsukResult& r) {
    CHECK(r.witness.parent_size() == x.size());
    if (x.size() > 1) {
        CHECK(r.epsilon > 0.0);
        CHECK(ghtk::partition_diameter(x, r.witness) <= r.diam - r.epsilon);
    }
}

}  // namespace

TEST_CASE("diameter graph") {
    auto d4 = ghtk::delta_simplex(4);
    auto g = ghtk::diameter_graph(d4);
    CHECK(g.n == 4);
    CHECK(g.diam == 1.0);
    CHECK(g.edges.size() == 6);  // complete graph

    auto sq = ghtk::diameter_graph(square());
    CHECK(sq.edges.size() == 2);  // the two diagonals
    CHECK(sq.diam == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    auto two = ghtk::diameter_graph(ghtk::delta_simplex(2, 3.0));
    CHECK(two.edges.size() == 1);

    CHECK_THROWS_AS(ghtk::diameter_graph(ghtk::delta_simplex(1)), Error);
}

TEST_CASE("borsuk number of simplexes") {
    for (std::size_t m = 2; m <= 8; ++m) {
        auto r = ghtk::borsuk_number(ghtk::delta_simplex(m, 2.0));
        CHECK(r.number == m);
        CHECK(r.witness.block_count() == m);
        check_witness(ghtk::delta_simplex(m, 2.0), r);
    }
}

TEST_CASE("borsuk number of the square is two") {
    auto sq = square();
    auto r = ghtk::borsuk_number(sq);
    CHECK(r.number == 2);
    check_witness(sq, r);
}

TEST_CASE("borsuk number matches the partition-scan oracle") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto x = oracles::random_space(seed, 3 + seed % 4,
                                       seed % 3 == 0 ? ghtk::GenKind::synthetic
                                                     : ghtk::GenKind::euclidean);
        auto r = ghtk::borsuk_number(x);
        CHECK(r.number == ghtk::brute::borsuk_number(x));
        CHECK(r.number <= x.size());
        CHECK(r.number >= 2);
        check_witness(x, r);
    }
}

TEST_CASE("can_partition_smaller") {
    auto d3 = ghtk::delta_simplex(3);
    CHECK_FALSE(ghtk::can_partition_smaller(d3, 2).first);
    auto [ok, witness] = ghtk::can_partition_smaller(d3, 3);
    CHECK(ok);
    REQUIRE(witness.has_value());
    CHECK(witness->block_count() == 3);

    auto sq = square();
    auto [ok2, witness2] = ghtk::can_partition_smaller(sq, 2);
    CHECK(ok2);
    REQUIRE(witness2.has_value());
    CHECK(witness2->block_count() == 2);
    CHECK(ghtk::partition_diameter(sq, *witness2) < sq.diameter());

    CHECK_THROWS_AS(ghtk::can_partition_smaller(d3, 0), Error);
    CHECK_THROWS_AS(ghtk::can_partition_smaller(d3, 4), Error);
}

TEST_CASE("can_partition_smaller is monotone in m") {
    auto x = oracles::random_space(77, 6);
    bool prev = false;
    for (std::size_t m = 2; m <= x.size(); ++m) {
        bool now = ghtk::can_partition_smaller(x, m).first;
        CHECK((!prev || now));  // once possible, stays possible
        prev = now;
    }
    CHECK(prev);  // singletons always work
}

TEST_CASE("generalized borsuk via gh: simplex below beta") {
    auto d3 = ghtk::delta_simplex(3);
    auto rep = ghtk::generalized_borsuk_via_gh(d3, 2, 0.5);
    CHECK_FALSE(rep.partition_exists);
    CHECK(rep.two_d_gh == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.biconditional_holds);
    REQUIRE(rep.equality_holds.has_value());
    CHECK(*rep.equality_holds);
}

TEST_CASE("generalized borsuk via gh: square splits in two") {
    auto rep = ghtk::generalized_borsuk_via_gh(square(), 2, 0.7);
    CHECK(rep.partition_exists);
    CHECK(rep.two_d_gh < rep.diam - 1e-9);
    CHECK(rep.biconditional_holds);
    CHECK_FALSE(rep.equality_holds.has_value());
}

TEST_CASE("generalized borsuk via gh: lambda range is enforced") {
    auto d3 = ghtk::delta_simplex(3);
    CHECK_THROWS_AS(ghtk::generalized_borsuk_via_gh(d3, 2, 0.0), Error);
    CHECK_THROWS_AS(ghtk::generalized_borsuk_via_gh(d3, 2, 1.0), Error);
}

TEST_CASE("is_dls_n") {
    auto d3 = ghtk::delta_simplex(3);
    CHECK(ghtk::is_dls_n(d3, 2));
    CHECK_FALSE(ghtk::is_dls_n(d3, 3));
    CHECK(ghtk::is_dls_n(ghtk::delta_simplex(2), 1));
    CHECK_FALSE(ghtk::is_dls_n(square(), 2));
}
