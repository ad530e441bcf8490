#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ghtk/brute.hpp"
#include "ghtk/correspondence.hpp"
#include "ghtk/error.hpp"
#include "test_oracles.hpp"

using ghtk::BlockDecomposition;
using ghtk::Correspondence;
using ghtk::Error;
using ghtk::IndexPair;
using ghtk::Relation;

namespace {

// Random correspondence: a random bijection-ish base covering both sides,
// plus extra pairs with probability p.
Correspondence random_correspondence(std::size_t nx, std::size_t ny,
                                     std::uint64_t seed, double p = 0.3) {
    ghtk::rng::SplitMix64 gen(seed);
    std::vector<IndexPair> pairs;
    const std::size_t m = std::max(nx, ny);
    for (std::size_t k = 0; k < m; ++k)
        pairs.emplace_back(static_cast<std::uint32_t>(k % nx),
                           static_cast<std::uint32_t>(k % ny));
    for (std::uint32_t i = 0; i < nx; ++i)
        for (std::uint32_t j = 0; j < ny; ++j)
            if (gen.uniform01() < p) pairs.emplace_back(i, j);
    return Correspondence(nx, ny, std::move(pairs));
}

}  // namespace

TEST_CASE("relation validation") {
    CHECK_THROWS_AS(Relation(2, 2, {}), Error);
    CHECK_THROWS_AS(Relation(2, 2, {{2, 0}}), Error);
    CHECK_THROWS_AS(Relation(2, 2, {{0, 2}}), Error);

    Relation r(2, 2, {{1, 1}, {0, 0}, {1, 1}});
    CHECK(r.pairs() == std::vector<IndexPair>{{0, 0}, {1, 1}});
}

TEST_CASE("is_correspondence") {
    CHECK(ghtk::is_correspondence(Relation(2, 2, {{0, 0}, {1, 1}})));
    CHECK(ghtk::is_correspondence(Relation(2, 3, {{0, 0}, {0, 1}, {1, 2}})));
    CHECK_FALSE(ghtk::is_correspondence(Relation(2, 2, {{0, 0}})));
    CHECK_FALSE(ghtk::is_correspondence(Relation(2, 2, {{0, 0}, {0, 1}})));
    CHECK_THROWS_AS(Correspondence(2, 2, {{0, 0}}), Error);
}

TEST_CASE("distortion") {
    auto x = ghtk::validate_metric({{0, 1}, {1, 0}});
    auto y = ghtk::validate_metric({{0, 2}, {2, 0}});

    CHECK(ghtk::distortion(x, x, Correspondence::identity(2)) == 0.0);
    CHECK(ghtk::distortion(x, y, Correspondence::identity(2)) == 1.0);
    CHECK(ghtk::distortion(x, y, Correspondence::full(2, 2)) == 2.0);

    auto d1 = ghtk::delta_simplex(1);
    CHECK(ghtk::distortion(d1, y, Correspondence::full(1, 2)) == 2.0);

    // swapped arguments give the same value
    Correspondence r(2, 2, {{0, 0}, {1, 0}, {1, 1}});
    Correspondence rt(2, 2, {{0, 0}, {0, 1}, {1, 1}});
    CHECK(ghtk::distortion(x, y, r) == ghtk::distortion(y, x, rt));
}

TEST_CASE("is_irreducible") {
    CHECK(ghtk::is_irreducible(Correspondence::identity(3)));
    CHECK(ghtk::is_irreducible(Correspondence::full(1, 4)));
    CHECK(ghtk::is_irreducible(Correspondence(2, 3, {{0, 0}, {1, 1}, {1, 2}})));
    CHECK_FALSE(ghtk::is_irreducible(Correspondence::full(2, 2)));
    CHECK_FALSE(
        ghtk::is_irreducible(Correspondence(2, 2, {{0, 0}, {0, 1}, {1, 1}})));
}

TEST_CASE("decompose_blocks") {
    auto b = ghtk::decompose_blocks(Correspondence(2, 3, {{0, 0}, {1, 1}, {1, 2}}));
    REQUIRE(b.blocks().size() == 2);
    CHECK(b.blocks()[0].xs == ghtk::IndexSet{0});
    CHECK(b.blocks()[0].ys == ghtk::IndexSet{0});
    CHECK(b.blocks()[1].xs == ghtk::IndexSet{1});
    CHECK(b.blocks()[1].ys == ghtk::IndexSet{1, 2});

    auto ident = ghtk::decompose_blocks(Correspondence::identity(4));
    CHECK(ident.blocks().size() == 4);

    auto whole = ghtk::decompose_blocks(Correspondence::full(1, 3));
    REQUIRE(whole.blocks().size() == 1);
    CHECK(whole.blocks()[0].ys == ghtk::IndexSet{0, 1, 2});

    CHECK_THROWS_AS(ghtk::decompose_blocks(Correspondence::full(2, 2)), Error);
}

TEST_CASE("decompose then induce is the identity on irreducibles") {
    for (std::size_t nx = 1; nx <= 4; ++nx)
        for (std::size_t ny = 1; ny <= 4; ++ny)
            for (const auto& b : ghtk::enumerate_irreducible(nx, ny)) {
                auto r = b.induced();
                CHECK(ghtk::is_irreducible(r));
                auto again = ghtk::decompose_blocks(r);
                CHECK(again.induced().pairs() == r.pairs());
            }
}

TEST_CASE("reduce_to_irreducible") {
    auto ident = ghtk::reduce_to_irreducible(Correspondence::identity(3));
    CHECK(ident.pairs() == Correspondence::identity(3).pairs());

    auto chain = ghtk::reduce_to_irreducible(
        Correspondence(2, 2, {{0, 0}, {0, 1}, {1, 1}}));
    CHECK(chain.pairs() == std::vector<IndexPair>{{0, 0}, {1, 1}});

    auto full = ghtk::reduce_to_irreducible(Correspondence::full(2, 2));
    CHECK(full.pairs() == std::vector<IndexPair>{{0, 0}, {1, 1}});
}

TEST_CASE("reduce output is an irreducible subset and never worse") {
    auto x = oracles::random_space(11, 4);
    auto y = oracles::random_space(12, 5);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto r = random_correspondence(4, 5, seed);
        auto s = ghtk::reduce_to_irreducible(r);
        CHECK(ghtk::is_irreducible(s));
        CHECK(std::includes(r.pairs().begin(), r.pairs().end(),
                            s.pairs().begin(), s.pairs().end()));
        CHECK(ghtk::distortion(x, y, s) <= ghtk::distortion(x, y, r) + 1e-15);
    }
}

TEST_CASE("enumeration: base cases") {
    auto one = ghtk::enumerate_irreducible(1, 4);
    REQUIRE(one.size() == 1);
    CHECK(one[0].induced().pairs() == Correspondence::full(1, 4).pairs());

    CHECK(ghtk::count_irreducible(2, 2) == 2);
    CHECK(ghtk::count_irreducible(2, 3) == 6);
    CHECK(ghtk::count_irreducible(3, 2) == 6);
    CHECK(ghtk::count_irreducible(1, 1) == 1);
}

TEST_CASE("enumeration matches the subset-scan oracle and has no duplicates") {
    for (std::size_t nx = 1; nx <= 4; ++nx)
        for (std::size_t ny = 1; ny <= 4; ++ny) {
            std::set<std::vector<IndexPair>> seen;
            std::size_t count = 0;
            ghtk::for_each_irreducible(nx, ny, [&](const BlockDecomposition& b) {
                auto r = b.induced();
                CHECK(ghtk::is_irreducible(r));
                CHECK(seen.insert(r.pairs()).second);
                ++count;
                return true;
            });
            CHECK(count == ghtk::brute::count_irreducible(nx, ny));
            CHECK(count == ghtk::count_irreducible(nx, ny));
        }
}

TEST_CASE("enumeration early stop") {
    std::size_t visited = 0;
    bool finished = ghtk::for_each_irreducible(3, 3, [&](const auto&) {
        return ++visited < 2;
    });
    CHECK_FALSE(finished);
    CHECK(visited == 2);
}

TEST_CASE("correspondence counting oracle") {
    CHECK(ghtk::brute::count_correspondences(1, 1) == 1);
    CHECK(ghtk::brute::count_correspondences(2, 2) == 7);
    CHECK(ghtk::brute::count_irreducible(2, 2) == 2);
}

TEST_CASE("block distortion equals plain distortion") {
    auto x = oracles::random_space(3, 4);
    auto y = oracles::random_space(4, 4, ghtk::GenKind::synthetic);
    for (const auto& b : ghtk::enumerate_irreducible(4, 4)) {
        double via_blocks = ghtk::block_distortion(x, y, b);
        double direct = ghtk::distortion(x, y, b.induced());
        CHECK(via_blocks == direct);
    }

    auto d1 = ghtk::delta_simplex(1);
    auto whole = ghtk::decompose_blocks(Correspondence::full(1, 4));
    CHECK(ghtk::block_distortion(d1, y, whole) == y.diameter());

    CHECK_THROWS_AS(ghtk::block_distortion(x, d1, whole), Error);
}

TEST_CASE("block decomposition validation") {
    CHECK_THROWS_AS(BlockDecomposition(2, 2, {{{0, 1}, {0, 1}}}), Error);
    CHECK_THROWS_AS(BlockDecomposition(2, 2, {{{0}, {0}}}), Error);  // misses 1
    CHECK_NOTHROW(BlockDecomposition(2, 2, {{{0}, {0}}, {{1}, {1}}}));
}
